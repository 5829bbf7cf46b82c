"""Point counts on y^2 = (x-a)(x-b)(x-c) and the Hasse bound.

Every count is made twice: as ``1 + sum_x #{y : y^2 = f(x)}`` (squaring all
y, no character table) and as ``q + 1 + S`` from the quadratic character.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InvariantViolation, NotDistinct, NotSquareOrder
from .ff import FieldSpec, prime_power
from .graph import canonical_111, canonical_triples, require_paley


@dataclass(frozen=True)
class CurveReport:
    q: int
    roots: tuple[int, int, int]
    S: int
    m: int
    N: int
    supersingular_flag: bool

    @property
    def hasse_slack(self) -> int:
        return 4 * self.q - self.S**2


def _distinct(a, b, c):
    if len({a, b, c}) != 3:
        raise NotDistinct((a, b, c))


def _cubic(spec: FieldSpec, a: int, b: int, c: int) -> np.ndarray:
    xs = spec.elements
    return spec.mul_array(spec.mul_array(spec.sub_array(xs, a), spec.sub_array(xs, b)), spec.sub_array(xs, c))


def char_sum_S(spec: FieldSpec, a: int, b: int, c: int) -> int:
    """S = sum over x of chi((x-a)(x-b)(x-c))."""
    _distinct(a, b, c)
    return int(spec.char_table[_cubic(spec, a, b, c)].sum(dtype=np.int64))


def check_curve_identities(q: int, S, m, N) -> None:
    S, m, N = (np.asarray(v) for v in (S, m, N))
    if np.any(N != 4 + 2 * m):
        raise InvariantViolation("N != 4 + 2m")
    if np.any(S != 2 * m + 3 - q):
        raise InvariantViolation("S != 2m + 3 - q")
    if np.any(N != q + 1 + S):
        raise InvariantViolation("N != q + 1 + S")
    if np.any(N % 4):
        raise InvariantViolation("N is not 0 mod 4")
    if np.any(S * S > 4 * q):
        raise InvariantViolation("Hasse bound S^2 <= 4q fails")


def count_points(spec: FieldSpec, a: int, b: int, c: int) -> CurveReport:
    _distinct(a, b, c)
    f = _cubic(spec, a, b, c)
    N = 1 + int(spec.square_counts[f].sum())
    chi = spec.char_table[f]
    m = int(np.count_nonzero(chi == 1))
    if np.count_nonzero(f == 0) != 3:
        raise InvariantViolation("cubic with distinct roots must vanish exactly three times")
    S = int(chi.sum(dtype=np.int64))
    check_curve_identities(spec.q, S, m, N)
    return CurveReport(spec.q, (a, b, c), S, m, N, N % spec.p == 1)


def hasse_margin(spec: FieldSpec, a: int, b: int, c: int) -> tuple[int, int]:
    """(|S|, 4q - S^2); the slack is never negative."""
    S = char_sum_S(spec, a, b, c)
    return abs(S), 4 * spec.q - S * S


@dataclass
class CurveScan:
    """Curve data over every canonical triple of a field."""
    q: int
    b: np.ndarray
    w: np.ndarray
    shape: np.ndarray
    S: np.ndarray
    m: np.ndarray
    N: np.ndarray
    n111: np.ndarray
    R: np.ndarray

    @property
    def slack(self) -> np.ndarray:
        return 4 * self.q - self.S * self.S


def scan_curves(spec: FieldSpec) -> CurveScan:
    require_paley(spec)
    ct = canonical_triples(spec)
    exp, log = spec.exp_log
    S = np.empty(len(ct.w), dtype=np.int64)
    m = np.empty_like(S)
    N = np.empty_like(S)
    for b in np.unique(ct.b):
        sel = ct.b == b
        S[sel], m[sel], N[sel] = kernels.curve_stats(
            spec.char_table, spec.square_counts, spec.sub_table, exp, log, 0, int(b), ct.w[sel]
        )
    dab, daw, dbw = ct.dist == 1
    R = (dab & daw).astype(np.int64) + (dab & dbw) + (daw & dbw)
    return CurveScan(spec.q, ct.b, ct.w, ct.shape, S, m, N, canonical_111(spec, ct), R)


def square_order(q: int) -> tuple[int, int] | None:
    """(s, r) with q = r^2 and r = 4s + 1, s >= 1, q a prime power; else None."""
    r = math.isqrt(q)
    if r * r != q or r % 4 != 1 or r < 5 or prime_power(q) is None:
        return None
    return (r - 1) // 4, r


@dataclass
class ExtremalReport:
    q: int
    s: int
    r: int
    lam: int  # Legendre-form lambda: {0, 1, lam} is a minimising triangle
    min_triangle_111: int
    max_cotriangle_111: int
    cotriangle: tuple[int, int, int]
    targets: tuple[int, int]  # (2(s^2 - 1), 2s(s + 1))
    lam_curve: CurveReport
    cotriangle_curve: CurveReport

    @property
    def attained(self) -> bool:
        return (self.min_triangle_111, self.max_cotriangle_111) == self.targets


def find_extremal(spec: FieldSpec) -> ExtremalReport:
    """Exhaustive search for the extreme [1 1 1] on triangles and cotriangles."""
    require_paley(spec)
    sr = square_order(spec.q)
    if sr is None:
        raise NotSquareOrder(f"q={spec.q} is not (4s+1)^2 for a prime power with s >= 1")
    s, r = sr
    ct = canonical_triples(spec)
    n111 = canonical_111(spec, ct)
    tri = np.flatnonzero((ct.shape == 3) & (ct.b == 1))
    cot = np.flatnonzero(ct.shape == 0)
    lo = int(n111[tri].min())
    hi = int(n111[cot].max())
    lam = int(ct.w[tri[n111[tri] == lo][0]])  # smallest w, since w ascends
    j = cot[n111[cot] == hi][0]
    cot_triple = (0, int(ct.b[j]), int(ct.w[j]))
    return ExtremalReport(
        q=spec.q,
        s=s,
        r=r,
        lam=lam,
        min_triangle_111=lo,
        max_cotriangle_111=hi,
        cotriangle=cot_triple,
        targets=(2 * (s * s - 1), 2 * s * (s + 1)),
        lam_curve=count_points(spec, 0, 1, lam),
        cotriangle_curve=count_points(spec, *cot_triple),
    )
