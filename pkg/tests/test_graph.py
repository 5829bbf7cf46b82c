import itertools

import numpy as np
import pytest

from paley.errors import InvalidRing, NotDistinct, PaleyIneligible
from paley.ff import field_of_order, make_field, paley_orders
from paley.graph import (
    SHAPES,
    adjacent,
    brute_force_cells,
    canonical_111,
    canonical_triples,
    common_neighbor_witness,
    complete_triple_table,
    distance,
    fill_cells,
    multi_intersection,
    pair_value,
    scan_bound,
    table_rows,
    triple_charsum_terms,
    triple_via_charsum,
    within_bound,
)
from paley import kernels

UP_TO_289 = paley_orders(5, 289)


def test_adjacency_examples():
    F5, F13 = field_of_order(5), field_of_order(13)
    assert adjacent(F5, 0, 1)
    assert sorted(F13.squares) == [1, 3, 4, 9, 10, 12]
    assert not adjacent(F13, 0, 2)
    assert adjacent(F13, 0, 4) and adjacent(F13, 4, 0)
    assert distance(F13, 7, 7) == 0
    assert distance(F13, 0, 2) == 2
    assert distance(F5, 0, 1) == 1


def test_ineligible():
    F7 = make_field(7, 1)
    F27 = make_field(3, 3)
    for F in (F7, F27):
        with pytest.raises(PaleyIneligible):
            adjacent(F, 0, 1)
        with pytest.raises(PaleyIneligible):
            scan_bound(F)


def test_multi_intersection_examples():
    F13 = field_of_order(13)
    for a in range(13):
        for ring in (1, 2):
            assert multi_intersection(F13, [(a, ring)]) == 6
    assert multi_intersection(F13, [(0, 1), (1, 1), (4, 1)]) == 0
    F29 = field_of_order(29)
    triangles = [t for t in itertools.combinations(range(29), 3)
                 if all(adjacent(F29, u, v) for u, v in itertools.combinations(t, 2))]
    assert triangles
    for t in triangles[:40]:
        assert multi_intersection(F29, [(v, 1) for v in t]) == 2
    with pytest.raises(InvalidRing):
        multi_intersection(F13, [(0, 3)])


def test_pair_value_examples():
    assert pair_value(field_of_order(13), 1, 1, 1) == 2
    assert pair_value(field_of_order(13), 2, 1, 1) == 3
    assert pair_value(field_of_order(9), 1, 1, 2) == 2
    with pytest.raises(InvalidRing):
        pair_value(field_of_order(13), 1, 0, 1)


@pytest.mark.parametrize("q", [5, 9, 13, 17, 25, 29, 49, 81, 125])
def test_pair_value_matches_enumeration(q):
    F = field_of_order(q)
    for b in range(1, q):
        h = distance(F, 0, b)
        for i in (1, 2):
            for j in (1, 2):
                assert multi_intersection(F, [(0, i), (b, j)]) == pair_value(F, h, i, j)


def test_triple_via_charsum_examples():
    F13 = field_of_order(13)
    assert triple_charsum_terms(F13, 0, 1, 4) == (2, 3)
    assert triple_via_charsum(F13, 0, 1, 4) == 0
    F5 = field_of_order(5)
    S, R = triple_charsum_terms(F5, 0, 1, 4)
    assert S == 2
    n = triple_via_charsum(F5, 0, 1, 4)
    assert 5 - 3 + S == 8 * n + 4 * R
    for perm in itertools.permutations((0, 1, 4)):
        assert triple_via_charsum(F13, *perm) == 0
    with pytest.raises(NotDistinct):
        triple_via_charsum(F13, 0, 0, 4)


def test_complete_table_examples():
    F13 = field_of_order(13)
    prof = complete_triple_table(F13, 0, 1, 4)
    assert prof.shape == "triangle"
    assert prof.aggregate == (0, 3, 6, 1)
    F29 = field_of_order(29)
    tri = next(t for t in itertools.combinations(range(29), 3)
               if all(adjacent(F29, u, v) for u, v in itertools.combinations(t, 2)))
    assert complete_triple_table(F29, *tri).aggregate == (2, 9, 12, 3)
    assert sum(complete_triple_table(F29, 3, 17, 20).aggregate) == 26


@pytest.mark.parametrize("q", UP_TO_289)
def test_oracle_equivalence_on_canonical_triples(q):
    F = field_of_order(q)
    ct = canonical_triples(F)
    n111 = canonical_111(F, ct)
    C = fill_cells(q, *ct.dist, n111)
    step = 1 if q <= 61 else max(1, q // 40)
    for i in range(0, len(ct.w), step):
        b, w = int(ct.b[i]), int(ct.w[i])
        brute = brute_force_cells(F, 0, b, w)
        assert triple_via_charsum(F, 0, b, w) == n111[i] == brute[1, 1, 1]
        assert np.array_equal(C[..., i], brute)
    assert np.all(C.sum(axis=(0, 1, 2)) == q)


def test_random_noncanonical_triples_match_brute_force():
    rng = np.random.default_rng(7)
    for q in (13, 25, 49, 81, 125):
        F = field_of_order(q)
        for _ in range(25):
            a, b, c = (int(v) for v in rng.choice(q, 3, replace=False))
            prof = complete_triple_table(F, a, b, c)
            assert np.array_equal(prof.cells, brute_force_cells(F, a, b, c))
            assert sum(prof.aggregate) == q - 3
            assert prof.cells[1, 1, 1] == multi_intersection(F, [(a, 1), (b, 1), (c, 1)])


@pytest.mark.parametrize("q", [5, 9, 13, 17, 25, 29])
def test_orbit_reduction_covers_every_triple(q):
    """Values over canonical triples equal values over all triples, per shape."""
    F = field_of_order(q)
    every = {s: set() for s in SHAPES}
    for t in itertools.combinations(range(q), 3):
        C = brute_force_cells(F, *t)
        edges = sum(adjacent(F, u, v) for u, v in itertools.combinations(t, 2))
        every[SHAPES[edges]].add(int(C[1, 1, 1]))
    ct = canonical_triples(F)
    n111 = canonical_111(F, ct)
    canon = {s: set(n111[ct.shape == i].tolist()) for i, s in enumerate(SHAPES)}
    assert canon == every


def test_common_neighbor_examples():
    F29 = field_of_order(29)
    rng = np.random.default_rng(0)
    for _ in range(50):
        t = rng.choice(29, 3, replace=False)
        x = common_neighbor_witness(F29, *map(int, t))
        assert x is not None and all(adjacent(F29, x, int(v)) for v in t)
    for q in (9, 17):
        F = field_of_order(q)
        tri = next(t for t in itertools.combinations(range(q), 3)
                   if all(adjacent(F, u, v) for u, v in itertools.combinations(t, 2)))
        assert common_neighbor_witness(F, *tri) is None


def test_scan_bound_examples():
    r29 = scan_bound(field_of_order(29))
    assert (r29.min111["triangle"], r29.max111["triangle"]) == (2, 2)
    assert (r29.min111["path"], r29.max111["path"]) == (2, 4)
    r25 = scan_bound(field_of_order(25))
    assert (r25.min111["triangle"], r25.max111["triangle"]) == (0, 2)
    r9 = scan_bound(field_of_order(9))
    assert not r9.violations and r9.max111["triangle"] == 0


def test_within_bound_matches_float_bound():
    for q in range(5, 3000, 4):
        for n in range(0, q // 4):
            exact = within_bound(q, n)
            slack = abs(n - (q - 9) / 8) - (np.sqrt(q) / 4 + 0.75)
            if abs(slack) > 1e-9:
                assert exact == (slack < 0)


@pytest.mark.parametrize("q", UP_TO_289)
def test_complementation(q):
    """[2 2 2](a, b, c) == [1 1 1](ea, eb, ec) for nonsquares e."""
    F = field_of_order(q)
    ct = canonical_triples(F)
    C = fill_cells(q, *ct.dist, canonical_111(F, ct))
    nonsq = np.flatnonzero(F.char_table == -1)
    for e in nonsq[:: max(1, len(nonsq) // 4)]:
        for b in np.unique(ct.b):
            sel = ct.b == b
            eb = int(F.mul(int(e), int(b)))
            ew = F.mul_array(np.full(sel.sum(), e), ct.w[sel])
            got = kernels.count111(F.char_table, F.sub_table, 0, eb, ew)
            assert np.array_equal(got, C[2, 2, 2][sel])


@pytest.mark.parametrize("q", UP_TO_289)
def test_triangle_cotriangle_sum(q):
    F = field_of_order(q)
    ct = canonical_triples(F)
    C = fill_cells(q, *ct.dist, canonical_111(F, ct))
    sel = (ct.shape == 3) | (ct.shape == 0)
    assert np.all(4 * (C[1, 1, 1][sel] + C[2, 2, 2][sel]) == q - 9)


@pytest.mark.parametrize("q", [13, 25, 81, 125, 289, 1009])
def test_automorphism_soundness(q):
    F = field_of_order(q)
    ct = canonical_triples(F)
    base = canonical_111(F, ct)
    rng = np.random.default_rng(q)
    squares = F.square_array
    checked = 0
    while checked < 10_000:
        s = int(rng.choice(squares))
        t = int(rng.integers(q))
        for b in np.unique(ct.b):
            sel = ct.b == b
            a2 = t
            b2 = F.add(F.mul(s, int(b)), t)
            w2 = F.add_array(F.mul_array(np.full(sel.sum(), s), ct.w[sel]), t)
            got = kernels.count111(F.char_table, F.sub_table, a2, b2, w2)
            assert np.array_equal(got, base[sel])
            checked += int(sel.sum())


@pytest.mark.parametrize("q", UP_TO_289)
def test_self_complementary(q):
    F = field_of_order(q)
    e = F.nonsquare
    A = F.char_table[F.sub_table] == 1
    img = F.mul_array(np.full(q, e), F.elements)
    B = A[np.ix_(img, img)]
    off = ~np.eye(q, dtype=bool)
    assert np.array_equal(B[off], ~A[off])


def test_table_rows_are_backend_independent(monkeypatch):
    ref = table_rows(field_of_order(25))
    monkeypatch.setenv("PALEY_BACKEND", "numpy")
    assert table_rows(field_of_order(25)) == ref


def test_not_distinct():
    F = field_of_order(13)
    for fn in (triple_via_charsum, complete_triple_table, common_neighbor_witness):
        with pytest.raises(NotDistinct):
            fn(F, 1, 1, 2)
