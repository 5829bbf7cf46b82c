"""Paley graphs: adjacency, distance spheres and intersection numbers.

Vertices are canonical field elements.  ``cells[h][i][j]`` of a triple
(a, b, c) counts the x with d(a, x) = h, d(b, x) = i, d(c, x) = j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import InvalidRing, InvariantViolation, NonIntegral, NotDistinct, PaleyIneligible
from .ff import FieldSpec

SHAPES = ("cotriangle", "copath", "path", "triangle")  # indexed by number of edges


def require_paley(spec: FieldSpec) -> None:
    if spec.q % 4 != 1:
        raise PaleyIneligible(f"q={spec.q} is not 1 mod 4")


def _distinct(*vs) -> None:
    if len(set(vs)) != len(vs):
        raise NotDistinct(vs)


def adjacent(spec: FieldSpec, a: int, b: int) -> bool:
    require_paley(spec)
    return spec.char_table[spec.sub(a, b)] == 1


def distance(spec: FieldSpec, a: int, b: int) -> int:
    require_paley(spec)
    if a == b:
        return 0
    return 1 if spec.char_table[spec.sub(a, b)] == 1 else 2


def distances_from(spec: FieldSpec, a: int) -> np.ndarray:
    """d(a, x) for every vertex x."""
    c = spec.char_table[spec.sub_array(spec.elements, a)]
    return np.where(c == 1, 1, 2) - (spec.elements == a) * 2


def multi_intersection(spec: FieldSpec, targets) -> int:
    """Number of x with d(x, a_m) == i_m for every (a_m, i_m) in targets."""
    require_paley(spec)
    targets = list(targets)
    if not targets:
        raise ValueError("targets must be nonempty")
    mask = np.ones(spec.q, dtype=bool)
    for a, ring in targets:
        if ring not in (0, 1, 2):
            raise InvalidRing(ring)
        mask &= distances_from(spec, a) == ring
    return int(mask.sum())


def pair_value(spec: FieldSpec, h: int, i: int, j: int) -> int:
    """|Gamma_i(a) & Gamma_j(b)| for a pair at distance h (all in {1, 2})."""
    require_paley(spec)
    for r in (h, i, j):
        if r not in (1, 2):
            raise InvalidRing(r)
    return (spec.q - 1) // 4 - (h == i == j)


def _pair(q, h, i, j):
    # vectorised pair_value; h may be an array
    return (q - 1) // 4 - ((h == i) & (h == j) & (i == j)).astype(np.int64)


def shape_index(dab, dac, dbc):
    """Number of edges among the three pairs (0..3); works on arrays."""
    return (np.asarray(dab) == 1).astype(int) + (np.asarray(dac) == 1) + (np.asarray(dbc) == 1)


@dataclass
class TripleProfile:
    vertices: tuple[int, int, int]
    dist: tuple[int, int, int]  # (d(a,b), d(a,c), d(b,c))
    cells: np.ndarray = field(repr=False)
    aggregate: tuple[int, int, int, int]  # (n3, n2, n1, n0)

    @property
    def shape(self) -> str:
        return SHAPES[int(shape_index(*self.dist))]


def fill_cells(q: int, dab, dac, dbc, n111) -> np.ndarray:
    """All 27 cells from [1 1 1], the pair formula and the sum rules.

    Arguments may be equal-length arrays; the result then has shape
    (3, 3, 3, n).
    """
    dab, dac, dbc, n111 = np.broadcast_arrays(*(np.asarray(v, dtype=np.int64) for v in (dab, dac, dbc, n111)))
    C = np.zeros((3, 3, 3) + dab.shape, dtype=np.int64)
    # x = a, x = b, x = c
    for h in (1, 2):
        for i in (1, 2):
            C[0, h, i] += (dab == h) & (dac == i)
            C[h, 0, i] += (dab == h) & (dbc == i)
            C[h, i, 0] += (dac == h) & (dbc == i)
    C[1, 1, 1] = n111
    C[1, 1, 2] = _pair(q, dab, 1, 1) - C[1, 1, 0] - C[1, 1, 1]
    C[1, 2, 1] = _pair(q, dac, 1, 1) - C[1, 0, 1] - C[1, 1, 1]
    C[2, 1, 1] = _pair(q, dbc, 1, 1) - C[0, 1, 1] - C[1, 1, 1]
    C[1, 2, 2] = _pair(q, dab, 1, 2) - C[1, 2, 0] - C[1, 2, 1]
    C[2, 1, 2] = _pair(q, dab, 2, 1) - C[2, 1, 0] - C[2, 1, 1]
    C[2, 2, 1] = _pair(q, dac, 2, 1) - C[2, 0, 1] - C[2, 1, 1]
    C[2, 2, 2] = _pair(q, dab, 2, 2) - C[2, 2, 0] - C[2, 2, 1]
    return C


def aggregate(C: np.ndarray) -> np.ndarray:
    """(n3, n2, n1, n0) along a new leading axis."""
    return np.stack([
        C[1, 1, 1],
        C[1, 1, 2] + C[1, 2, 1] + C[2, 1, 1],
        C[1, 2, 2] + C[2, 1, 2] + C[2, 2, 1],
        C[2, 2, 2],
    ])


def check_cells(q: int, dab, dac, dbc, C: np.ndarray) -> None:
    """Every pair sum rule and the total; raises on any mismatch."""
    if np.any(C < 0) or np.any(C.sum(axis=(0, 1, 2)) != q):
        raise InvariantViolation("cell table has negative entries or wrong total")
    for axis, d in ((2, dab), (1, dac), (0, dbc)):
        pairs = C.sum(axis=axis)
        for i in (1, 2):
            for j in (1, 2):
                if np.any(pairs[i, j] != _pair(q, np.asarray(d), i, j)):
                    raise InvariantViolation("pair sum rule failed")


def brute_force_cells(spec: FieldSpec, a: int, b: int, c: int) -> np.ndarray:
    da, db, dc = (distances_from(spec, v) for v in (a, b, c))
    C = np.zeros((3, 3, 3), dtype=np.int64)
    np.add.at(C, (da, db, dc), 1)
    return C


def triple_charsum_terms(spec: FieldSpec, a: int, b: int, c: int) -> tuple[int, int]:
    """(S, R) for a distinct triple, S = sum_x chi((x-a)(x-b)(x-c))."""
    xs = spec.elements
    f = spec.mul_array(spec.mul_array(spec.sub_array(xs, a), spec.sub_array(xs, b)), spec.sub_array(xs, c))
    S = int(spec.char_table[f].sum(dtype=np.int64))
    dab, dac, dbc = distance(spec, a, b), distance(spec, a, c), distance(spec, b, c)
    # [0 1 1] is 1 iff a is adjacent to both b and c, and so on
    R = int(dab == 1 and dac == 1) + int(dab == 1 and dbc == 1) + int(dac == 1 and dbc == 1)
    return S, R


def triple_via_charsum(spec: FieldSpec, a: int, b: int, c: int) -> int:
    """[1 1 1] from q - 3 + S = 8 [1 1 1] + 4 R."""
    require_paley(spec)
    _distinct(a, b, c)
    S, R = triple_charsum_terms(spec, a, b, c)
    num = spec.q - 3 + S - 4 * R
    if num % 8:
        raise NonIntegral(f"(q - 3 + S - 4R) = {num} is not divisible by 8")
    return num // 8


def complete_triple_table(spec: FieldSpec, a: int, b: int, c: int) -> TripleProfile:
    require_paley(spec)
    _distinct(a, b, c)
    dist = (distance(spec, a, b), distance(spec, a, c), distance(spec, b, c))
    C = fill_cells(spec.q, *dist, triple_via_charsum(spec, a, b, c))
    check_cells(spec.q, *dist, C)
    agg = tuple(int(v) for v in aggregate(C))
    return TripleProfile((a, b, c), dist, C, agg)


def common_neighbor_witness(spec: FieldSpec, a: int, b: int, c: int) -> int | None:
    require_paley(spec)
    _distinct(a, b, c)
    mask = np.ones(spec.q, dtype=bool)
    for v in (a, b, c):
        mask &= spec.char_table[spec.sub_array(spec.elements, v)] == 1
    hits = np.flatnonzero(mask)
    return int(hits[0]) if len(hits) else None


# --- orbit-reduced scans ---

class CanonicalTriples(NamedTuple):
    """Representatives (0, b, w) of every orbit of distinct triples.

    ``b`` is 1 for triples with an edge and the smallest nonsquare for
    triples without one; scaling by nonzero squares and translating maps
    every distinct triple onto one of these.
    """
    a: int
    b: np.ndarray
    w: np.ndarray
    dist: np.ndarray  # (3, n): d(a,b), d(a,w), d(b,w)
    shape: np.ndarray  # number of edges, 0..3


def canonical_triples(spec: FieldSpec) -> CanonicalTriples:
    require_paley(spec)
    chi = spec.char_table
    bs, ws = [], []
    for b in (1, spec.nonsquare):
        w = spec.elements[(spec.elements != 0) & (spec.elements != b)]
        bs.append(np.full(len(w), b))
        ws.append(w)
    b = np.concatenate(bs)
    w = np.concatenate(ws)
    dab = np.where(chi[b] == 1, 1, 2)
    daw = np.where(chi[w] == 1, 1, 2)
    dbw = np.where(chi[spec.sub_array(b, w)] == 1, 1, 2)
    dist = np.stack([dab, daw, dbw])
    return CanonicalTriples(0, b, w, dist, shape_index(dab, daw, dbw))


def canonical_111(spec: FieldSpec, ct: CanonicalTriples | None = None) -> np.ndarray:
    """[1 1 1] for every canonical triple, counted by enumeration."""
    ct = ct or canonical_triples(spec)
    out = np.empty(len(ct.w), dtype=np.int64)
    sub = spec.sub_table
    for b in np.unique(ct.b):
        sel = ct.b == b
        out[sel] = kernels.count111(spec.char_table, sub, 0, int(b), ct.w[sel])
    return out


def bound_interval(q: int) -> tuple[int, int]:
    """Smallest and largest integer n with |8n - (q - 9)| <= 2 sqrt(q) + 6."""
    center = (q - 9) // 8
    lo = hi = center
    while within_bound(q, lo - 1):
        lo -= 1
    while within_bound(q, hi + 1):
        hi += 1
    if not within_bound(q, lo):  # center itself may sit outside for tiny q
        raise InvariantViolation("empty bound interval")
    return lo, hi


def within_bound(q: int, n111: int) -> bool:
    """|8 n - (q - 9)| <= 2 sqrt(q) + 6, in integer arithmetic."""
    dev = abs(8 * n111 - (q - 9))
    if dev <= 6:
        return True
    return (dev - 6) ** 2 <= 4 * q


@dataclass
class BoundReport:
    q: int
    triples_scanned: int
    min111: dict  # shape -> min over canonical triples of that shape
    max111: dict
    bound_lo: int  # ceil of the lower endpoint
    bound_hi: int  # floor of the upper endpoint
    center: tuple[int, int]  # (q - 9, 8): the interval midpoint as a fraction
    violations: list = field(default_factory=list)
    no_common_neighbor: int = 0


def scan_bound(spec: FieldSpec) -> BoundReport:
    require_paley(spec)
    ct = canonical_triples(spec)
    n111 = canonical_111(spec, ct)
    lo, hi = bound_interval(spec.q)
    mins, maxs = {}, {}
    for s, name in enumerate(SHAPES):
        sel = ct.shape == s
        if sel.any():
            mins[name] = int(n111[sel].min())
            maxs[name] = int(n111[sel].max())
    violations = [
        (ct.a, int(b), int(w), int(n))
        for b, w, n in zip(ct.b, ct.w, n111)
        if not within_bound(spec.q, int(n))
    ]
    return BoundReport(
        q=spec.q,
        triples_scanned=len(n111),
        min111=mins,
        max111=maxs,
        bound_lo=lo,
        bound_hi=hi,
        center=(spec.q - 9, 8),
        violations=violations,
        no_common_neighbor=int(np.count_nonzero(n111 == 0)),
    )


def table_rows(spec: FieldSpec) -> dict:
    """Per shape, the (min, max) of each aggregate column over all triples.

    Returns ``{shape: [(lo, hi)] * 4}``; shapes that do not occur are absent.
    """
    ct = canonical_triples(spec)
    n111 = canonical_111(spec, ct)
    C = fill_cells(spec.q, *ct.dist, n111)
    check_cells(spec.q, *ct.dist, C)
    agg = aggregate(C)
    rows = {}
    for s, name in enumerate(SHAPES):
        sel = ct.shape == s
        if sel.any():
            rows[name] = [(int(col[sel].min()), int(col[sel].max())) for col in agg]
    return rows
