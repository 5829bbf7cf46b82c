"""Partial additive characters on the nonzero squares plus zero.

A partial character psi is stored as exponents of a fixed primitive p-th
root of unity: ``psi(a) = zeta_p ** exponents[a]``.  Values never leave
exponent form, so every comparison is exact integer arithmetic mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import DomainMismatch, NotExtendable, NotFound, PreconditionViolated
from .ff import FieldSpec
from .graph import require_paley
from .snf import invariant_factors, rank_mod_p

# exhaustive pairwise checks up to this order, random sampling above
EXHAUSTIVE_Q = 289
RANDOM_PAIRS = 100_000


def domain(spec: FieldSpec) -> np.ndarray:
    """Zero followed by the nonzero squares, ascending."""
    return np.concatenate([[0], spec.square_array]).astype(np.int64)


@dataclass
class PartialCharacter:
    spec: FieldSpec
    exponents: dict  # element of the domain -> exponent mod p

    def as_array(self) -> tuple[np.ndarray, np.ndarray]:
        D = domain(self.spec)
        if set(self.exponents) != set(D.tolist()):
            raise DomainMismatch("exponent keys differ from the nonzero squares plus zero")
        return D, np.array([self.exponents[int(d)] % self.spec.p for d in D], dtype=np.int64)


class ConditionResult(NamedTuple):
    ok: bool
    quadruple: tuple | None = None  # (a, b, c, d) with a + b = c + d and psi(a)psi(b) != psi(c)psi(d)
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def restrict_additive_character(spec: FieldSpec, t: int) -> PartialCharacter:
    """Restriction of x -> zeta_p^Tr(t x) to the domain."""
    spec._check(t)
    D = domain(spec)
    vals = spec.trace_table[spec.mul_array(np.full(len(D), t), D)]
    return PartialCharacter(spec, {int(d): int(v) for d, v in zip(D, vals)})


@lru_cache(maxsize=4)
def _sum_classes(spec: FieldSpec) -> np.ndarray:
    """For each flattened pair (a, b) of the domain, the first pair with the same sum."""
    D = domain(spec)
    sums = spec.add_array(D[:, None], D[None, :]).ravel()
    _, first, inverse = np.unique(sums, return_index=True, return_inverse=True)
    return first[inverse.ravel()]


def check_conditions(psi: PartialCharacter) -> ConditionResult:
    """psi(0) = 1, and psi(a)psi(b) = psi(c)psi(d) whenever a + b = c + d.

    Pairs are grouped by their sum, so each class is compared against its
    first member instead of enumerating quadruples.
    """
    spec = psi.spec
    D, e = psi.as_array()
    if e[0] != 0:
        return ConditionResult(False, None, "psi(0) != 1")
    n = len(D)
    vals = ((e[:, None] + e[None, :]) % spec.p).ravel()
    class_ref = _sum_classes(spec)
    bad = np.flatnonzero(vals != vals[class_ref])
    if len(bad):
        i = bad[0]
        ref = class_ref[i]
        quad = tuple(int(D[k]) for k in (i // n, i % n, ref // n, ref % n))
        return ConditionResult(False, quad, "psi(a)psi(b) != psi(c)psi(d)")
    return ConditionResult(True)


def find_c(spec: FieldSpec, a: int, b: int) -> int:
    """Smallest c with c, a - c and b + c all nonzero squares."""
    require_paley(spec)
    if a == 0 or b == 0:
        raise PreconditionViolated("a and b must be nonzero")
    S = spec.square_array
    chi = spec.char_table
    ok = (chi[spec.sub_array(a, S)] == 1) & (chi[spec.add_array(b, S)] == 1)
    hits = S[ok]
    if not len(hits):
        raise NotFound(f"no c for a={a}, b={b} in GF({spec.q})")
    return int(hits[0])


def find_c_failures(spec: FieldSpec) -> int:
    """Number of pairs (a, b) of nonzero elements with no valid c."""
    require_paley(spec)
    table = kernels.find_c_table(spec.char_table, spec.sub_table, spec.neg_table, spec.square_array)
    return int(np.count_nonzero(table[1:, 1:] < 0))


@dataclass
class Extension:
    values: np.ndarray  # exponent of psi-hat(x) for every element x
    t: int  # psi-hat(x) = zeta_p^Tr(t x)


@lru_cache(maxsize=4)
def _sum_representations(spec: FieldSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Every nonsquare x as u + v over nonzero squares u, v.

    Returns (xs, V, valid) with ``V[i, j] = xs[i] - S[j]`` and ``valid``
    marking where that difference is a nonzero square.
    """
    S = spec.square_array
    xs = np.flatnonzero(spec.char_table == -1)
    V = spec.sub_array(xs[:, None], S[None, :])
    valid = spec.char_table[V] == 1
    return xs, np.where(valid, V, 0), valid


def _solve_mod_p(A: list[list[int]], y: list[int], p: int) -> list[int] | None:
    """Solve the square system A z = y over GF(p)."""
    n = len(A)
    M = [row[:] + [v] for row, v in zip(A, y)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] % p), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        inv = pow(M[col][col], p - 2, p)
        M[col] = [v * inv % p for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] % p:
                f = M[r][col]
                M[r] = [(a - f * b) % p for a, b in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


def identify_t(spec: FieldSpec, values: np.ndarray) -> int | None:
    """The t with values[x] == Tr(t x) for all x, or None."""
    p, k = spec.p, spec.k
    basis = [p**i for i in range(k)]  # encodings of 1, x, ..., x^(k-1)
    tr = spec.trace_table
    form = [[int(tr[spec.mul(bi, bj)]) for bj in basis] for bi in basis]
    coords = _solve_mod_p(form, [int(values[b]) for b in basis], p)
    if coords is None:
        return None
    t = spec.encode(coords)
    expect = tr[spec.mul_array(np.full(spec.q, t), spec.elements)]
    return t if np.array_equal(expect, values) else None


def extend_psi(psi: PartialCharacter, seed: int = 0) -> Extension:
    """Extend psi to all of the field by psi-hat(u + v) = psi(u) psi(v)."""
    spec = psi.spec
    require_paley(spec)
    if not check_conditions(psi):
        raise PreconditionViolated("psi does not satisfy conditions (i) and (ii)")
    D, e = psi.as_array()
    p, q = spec.p, spec.q
    ext = np.full(q, -1, dtype=np.int64)
    ext[D] = e

    rest, V, valid = _sum_representations(spec)
    if not valid.any(axis=1).all():
        raise NotExtendable("some element is not a sum of two nonzero squares")
    S = spec.square_array
    reps = (ext[S][None, :] + ext[V]) % p
    first = reps[np.arange(len(rest)), valid.argmax(axis=1)]
    if np.any(valid & (reps != first[:, None])):
        raise NotExtendable("psi-hat depends on the chosen representation")
    ext[rest] = first

    if q <= EXHAUSTIVE_Q:
        lhs = ext[spec.add_table]
        rhs = (ext[:, None] + ext[None, :]) % p
    else:
        rng = np.random.default_rng(seed)
        x, y = rng.integers(0, q, (2, RANDOM_PAIRS))
        lhs, rhs = ext[spec.add_array(x, y)], (ext[x] + ext[y]) % p
    if not np.array_equal(lhs, rhs):
        raise NotExtendable("psi-hat is not additive")

    t = identify_t(spec, ext)
    if t is None:
        raise NotExtendable("psi-hat matches no additive character")
    return Extension(ext, t)


def relation_matrix(spec: FieldSpec) -> np.ndarray:
    """Integer relations on generators e_d, d in the domain.

    One row pins e_0; then for each sum class {a + b = s} every pair is
    tied to the class's first pair, which generates all relations
    e_a + e_b = e_c + e_d.
    """
    require_paley(spec)
    D = domain(spec)
    n = len(D)
    iu, ju = np.triu_indices(n)
    sums = spec.add_array(D[iu], D[ju])
    order = np.lexsort((ju, iu, sums))
    iu, ju, sums = iu[order], ju[order], sums[order]
    starts = np.r_[True, sums[1:] != sums[:-1]]
    rep = np.maximum.accumulate(np.where(starts, np.arange(len(sums)), 0))
    rows = np.flatnonzero(~starts)
    M = np.zeros((len(rows) + 1, n), dtype=np.int64)
    M[0, 0] = 1
    r = np.arange(1, len(rows) + 1)
    np.add.at(M, (r, iu[rows]), 1)
    np.add.at(M, (r, ju[rows]), 1)
    np.add.at(M, (r, iu[rep[rows]]), -1)
    np.add.at(M, (r, ju[rep[rows]]), -1)
    return M[np.any(M != 0, axis=1)]


def relation_snf(spec: FieldSpec) -> list[int]:
    """Invariant factors of the group presented by the relations (0 = free)."""
    return invariant_factors(relation_matrix(spec))


def solution_count_mod_p(spec: FieldSpec) -> int:
    """Number of exponent maps mod p satisfying (i) and (ii)."""
    M = relation_matrix(spec)
    return spec.p ** (M.shape[1] - rank_mod_p(M, spec.p))
