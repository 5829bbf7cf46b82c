"""Exact arithmetic in GF(p^k).

Elements are plain integers in ``[0, q)``.  The integer ``v`` stands for the
residue polynomial ``c_0 + c_1 x + ... + c_{k-1} x^{k-1}`` with
``v = sum(c_i * p**i)``, so for ``k == 1`` it is the least nonnegative
residue mod p.  Polynomials are coefficient tuples, constant term first.

Scalar arithmetic goes through polynomial multiplication and reduction.
The vectorised helpers (``mul_array``, ``trace_table``) go through
exp/log tables built once per field; tests cross-check the two paths.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .errors import DegreeZero, DivisionByZero, NotPrime, Overflow, TableTooLarge

DEFAULT_MAX_Q = 2**31
# q*q lookup tables above this order would cost hundreds of MB.
TABLE_MAX_Q = 8192


def max_q() -> int:
    env = os.environ.get("PALEY_MAX_Q")
    return int(env) if env else DEFAULT_MAX_Q


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``n == p**k`` or None if n is not a prime power."""
    if n < 2:
        return None
    p = 2
    while p * p <= n and n % p:
        p += 1
    if n % p:
        p = n
    k = 0
    m = n
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


def paley_orders(lo: int, hi: int) -> list[int]:
    """All prime powers q with lo <= q <= hi and q = 1 mod 4, ascending."""
    return [q for q in range(max(lo, 2), hi + 1) if q % 4 == 1 and prime_power(q)]


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over GF(p), coefficient tuples with constant term first ---

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_mod(a, m, p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m."""
    r = _trim([x % p for x in a])
    dm = len(m) - 1
    while len(r) - 1 >= dm:
        lead = r[-1]
        shift = len(r) - 1 - dm
        for i, mi in enumerate(m):
            r[shift + i] = (r[shift + i] - lead * mi) % p
        _trim(r)
    return r


def poly_mul(a, b, p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def is_irreducible(m, p: int) -> bool:
    """Trial factorization: no monic factor of degree 1..deg(m)//2 divides m."""
    k = len(m) - 1
    if k <= 1:
        return k == 1
    if m[0] == 0:
        return False
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not poly_mod(m, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k (compared from c_0 up)."""
    if k == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=k):
        m = list(low) + [1]
        if is_irreducible(m, p):
            return tuple(m)
    raise AssertionError(f"no irreducible polynomial of degree {k} over GF({p})")


@dataclass(frozen=True, eq=False)
class FieldSpec:
    p: int
    k: int
    q: int
    modulus: tuple[int, ...]
    char_table: np.ndarray = field(repr=False)
    squares: frozenset = field(repr=False)

    @property
    def t(self) -> int | None:
        """``(q - 1) / 4`` when q = 1 mod 4, else None."""
        return (self.q - 1) // 4 if self.q % 4 == 1 else None

    @property
    def is_paley(self) -> bool:
        return self.q % 4 == 1

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})"

    # -- encoding --

    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.k or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"{coeffs!r} is not a coefficient vector of {self!r}")
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def decode(self, v: int) -> tuple[int, ...]:
        self._check(v)
        out = []
        for _ in range(self.k):
            v, c = divmod(v, self.p)
            out.append(c)
        return tuple(out)

    def _check(self, v) -> None:
        if not 0 <= v < self.q:
            raise ValueError(f"{v} is not an element of {self!r}")

    # -- scalar arithmetic --

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self.encode([(x + y) % self.p for x, y in zip(self.decode(a), self.decode(b))])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        return self.encode([-x % self.p for x in self.decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        prod = poly_mul(_trim(list(self.decode(a))), _trim(list(self.decode(b))), self.p)
        r = poly_mod(prod, self.modulus, self.p)
        return self.encode(r + [0] * (self.k - len(r)))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        self._check(a)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self!r}")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    # -- tables --

    @cached_property
    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    @cached_property
    def digits(self) -> np.ndarray:
        """(q, k) array of base-p digits of every element."""
        return _digits(self.elements, self.p, self.k)

    @cached_property
    def neg_table(self) -> np.ndarray:
        return _undigits(-self.digits % self.p, self.p)

    @cached_property
    def square_array(self) -> np.ndarray:
        """Sorted array of the nonzero squares."""
        return np.flatnonzero(self.char_table == 1).astype(np.int64)

    @cached_property
    def nonsquare(self) -> int:
        """Smallest nonsquare (by encoding)."""
        return int(np.flatnonzero(self.char_table == -1)[0])

    @cached_property
    def square_counts(self) -> np.ndarray:
        """``square_counts[v]`` is the number of y with y*y == v, from squaring every y."""
        ys = self.elements
        return np.bincount(_mul_digits(ys, ys, self), minlength=self.q).astype(np.int64)

    @cached_property
    def exp_log(self) -> tuple[np.ndarray, np.ndarray]:
        """Discrete exp/log tables for the smallest primitive element g.

        ``exp[i] = g**i`` for ``0 <= i < 2(q-1)`` (doubled so sums of two logs
        need no reduction) and ``log[g**i] = i``; ``log[0]`` is -1.
        """
        q = self.q
        g = _primitive_element(self)
        exp = np.empty(2 * (q - 1), dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            x = self.mul(x, g)
        exp[q - 1:] = exp[: q - 1]
        log = np.full(q, -1, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1)
        return exp, log

    def add_array(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a + b) % self.p
        return _undigits((_digits(a, self.p, self.k) + _digits(b, self.p, self.k)) % self.p, self.p)

    def sub_array(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a - b) % self.p
        return _undigits((_digits(a, self.p, self.k) - _digits(b, self.p, self.k)) % self.p, self.p)

    def mul_array(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return a * b % self.p
        exp, log = self.exp_log
        out = exp[(log[a] + log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    @cached_property
    def sub_table(self) -> np.ndarray:
        """``sub_table[x, y] == x - y`` for all pairs."""
        self._table_guard()
        xs = self.elements
        dtype = np.int16 if self.q < 2**15 else np.int32
        return self.sub_array(xs[:, None], xs[None, :]).astype(dtype)

    @cached_property
    def add_table(self) -> np.ndarray:
        self._table_guard()
        xs = self.elements
        dtype = np.int16 if self.q < 2**15 else np.int32
        return self.add_array(xs[:, None], xs[None, :]).astype(dtype)

    def _table_guard(self) -> None:
        if self.q > TABLE_MAX_Q:
            raise TableTooLarge(f"q*q table for q={self.q} exceeds TABLE_MAX_Q={TABLE_MAX_Q}")

    @cached_property
    def trace_table(self) -> np.ndarray:
        """Absolute trace of every element, via the exp/log tables."""
        if self.k == 1:
            return self.elements.copy()
        exp, log = self.exp_log
        xs = self.elements
        total = np.zeros((self.q, self.k), dtype=np.int64)
        nz = xs != 0
        for i in range(self.k):
            frob = np.zeros(self.q, dtype=np.int64)
            frob[nz] = exp[(log[xs[nz]] * self.p**i) % (self.q - 1)]
            total = (total + _digits(frob, self.p, self.k)) % self.p
        if np.any(total[:, 1:]):
            raise AssertionError("trace left the prime subfield")
        return total[:, 0].copy()


def _digits(v: np.ndarray, p: int, k: int) -> np.ndarray:
    v = np.asarray(v, dtype=np.int64)
    return (v[..., None] // (p ** np.arange(k, dtype=np.int64))) % p


def _undigits(d: np.ndarray, p: int) -> np.ndarray:
    k = d.shape[-1]
    return (d * (p ** np.arange(k, dtype=np.int64))).sum(axis=-1)


def _mul_digits(a: np.ndarray, b: np.ndarray, spec: FieldSpec) -> np.ndarray:
    """Vectorised polynomial product mod the modulus (no exp/log tables)."""
    p, k = spec.p, spec.k
    if k == 1:
        return a * b % p
    da, db = _digits(a, p, k), _digits(b, p, k)
    prod = np.zeros(da.shape[:-1] + (2 * k - 1,), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            prod[..., i + j] += da[..., i] * db[..., j]
    prod %= p
    m = spec.modulus
    for d in range(2 * k - 2, k - 1, -1):
        lead = prod[..., d].copy()
        for i in range(k):
            prod[..., d - k + i] = (prod[..., d - k + i] - lead * m[i]) % p
        prod[..., d] = 0
    return _undigits(prod[..., :k], p)


def _pow_all(spec: FieldSpec, e: int) -> np.ndarray:
    """x**e for every element x, by vectorised square-and-multiply."""
    base = spec.elements.copy()
    result = np.ones(spec.q, dtype=np.int64)
    while e:
        if e & 1:
            result = _mul_digits(result, base, spec)
        base = _mul_digits(base, base, spec)
        e >>= 1
    return result


def _primitive_element(spec: FieldSpec) -> int:
    n = spec.q - 1
    if n == 1:
        return 1
    factors = prime_factors(n)
    for g in range(2, spec.q):
        if all(spec.pow(g, n // r) != 1 for r in factors):
            return g
    raise AssertionError("no primitive element found")


def make_field(p: int, k: int = 1, cap: int | None = None) -> FieldSpec:
    """Construct GF(p^k) with its quadratic character table.

    >>> F = make_field(3, 2)
    >>> F.q, F.modulus
    (9, (1, 0, 1))
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(p)
    if k < 1:
        raise DegreeZero(k)
    q = p**k
    cap = max_q() if cap is None else cap
    if q > cap:
        raise Overflow(f"q={q} exceeds the maximum order {cap}")
    modulus = smallest_irreducible(p, k)
    proto = FieldSpec(p, k, q, modulus, np.zeros(0, dtype=np.int8), frozenset())

    squared = _mul_digits(proto.elements, proto.elements, proto)
    squares = np.unique(squared[squared != 0])
    char = np.zeros(q, dtype=np.int8)
    if p == 2:
        char[1:] = 1
    else:
        euler = _pow_all(proto, (q - 1) // 2)
        minus_one = p - 1
        bad = (euler != 1) & (euler != minus_one) & (proto.elements != 0)
        if bad.any():
            raise AssertionError("Euler criterion produced a value outside {0, 1, -1}")
        char[euler == 1] = 1
        char[(euler == minus_one) & (proto.elements != 0)] = -1
        if not np.array_equal(np.flatnonzero(char == 1), squares):
            raise AssertionError("Euler criterion disagrees with the set of squares")
    char.setflags(write=False)
    return FieldSpec(p, k, q, modulus, char, frozenset(int(s) for s in squares))


@lru_cache(maxsize=8)
def field_of_order(q: int) -> FieldSpec:
    """Memoised ``make_field`` keyed by the order (a few fields only: tables are large)."""
    pk = prime_power(q)
    if pk is None:
        raise NotPrime(f"{q} is not a prime power")
    return make_field(*pk)


def field_arith(spec: FieldSpec, op: str, *operands: int) -> int:
    """Dispatch one of add, sub, mul, neg, inv, pow on canonical elements."""
    for x in operands[:1] if op == "pow" else operands:
        spec._check(x)
    if op == "pow":
        return spec.pow(*operands)
    try:
        fn = {"add": spec.add, "sub": spec.sub, "mul": spec.mul, "neg": spec.neg, "inv": spec.inv}[op]
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None
    return fn(*operands)


def quadratic_character(spec: FieldSpec, x: int) -> int:
    return int(spec.char_table[x])


def trace_to_prime(spec: FieldSpec, x: int) -> int:
    """Tr(x) = x + x^p + ... + x^(p^(k-1)), computed with scalar field arithmetic."""
    spec._check(x)
    total, y = 0, x
    for _ in range(spec.k):
        total = spec.add(total, y)
        y = spec.pow(y, spec.p)
    if total >= spec.p:
        raise AssertionError("trace left the prime subfield")
    return total
