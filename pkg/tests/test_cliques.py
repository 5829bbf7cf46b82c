import itertools
import math

import pytest

from paley.cliques import (
    check_k4,
    common_neighbors,
    k4_closed_form,
    k4_on_edge,
    sample_edges,
    sum_two_squares,
)
from paley.errors import NotAnEdge, NotOneModFour, NotPrime, PaleyIneligible
from paley.ff import field_of_order, is_prime, make_field
from paley.graph import triple_via_charsum

PRIMES = [p for p in range(5, 500) if is_prime(p) and p % 4 == 1]


def k4_by_quadruples(F, a, b):
    rest = [x for x in range(F.q) if x not in (a, b)]
    adj = lambda u, v: F.char_table[F.sub(u, v)] == 1  # noqa: E731
    return sum(
        1 for c, d in itertools.combinations(rest, 2)
        if adj(a, c) and adj(a, d) and adj(b, c) and adj(b, d) and adj(c, d)
    )


def test_sum_two_squares_examples():
    assert sum_two_squares(13)[1:] == (2, 3)
    assert sum_two_squares(29)[1:] == (2, 5)
    assert sum_two_squares(17)[1:] == (4, 1)
    with pytest.raises(NotOneModFour):
        sum_two_squares(7)
    with pytest.raises(NotPrime):
        sum_two_squares(25)


@pytest.mark.parametrize("p", PRIMES)
def test_sum_two_squares_unique(p):
    found = {
        frozenset((m, math.isqrt(p - m * m)))
        for m in range(math.isqrt(p) + 1)
        if math.isqrt(p - m * m) ** 2 == p - m * m
    }
    assert len(found) == 1
    _, m, n = sum_two_squares(p)
    assert m * m + n * n == p and n % 2 == 1 and m % 2 == 0 and m >= 0
    assert {m, n} == set(found.pop())


def test_k4_examples():
    assert k4_on_edge(field_of_order(13), 0, 1) == 0
    assert k4_on_edge(field_of_order(17), 0, 1) == 0
    F29 = field_of_order(29)
    for a, b in sample_edges(F29, 10):
        assert k4_on_edge(F29, a, b) == 6
    assert [k4_closed_form(p) for p in (13, 29, 37)] == [0, 6, 10]
    assert k4_on_edge(field_of_order(37), 0, 1) == 10


def test_k4_errors():
    F = field_of_order(13)
    with pytest.raises(NotAnEdge):
        k4_on_edge(F, 0, 2)
    with pytest.raises(NotAnEdge):
        k4_on_edge(F, 3, 3)
    with pytest.raises(PaleyIneligible):
        k4_on_edge(make_field(7), 0, 1)


@pytest.mark.parametrize("p", [13, 17, 29, 37, 41])
def test_k4_matches_quadruple_enumeration(p):
    F = field_of_order(p)
    for a, b in sample_edges(F, 4, seed=1):
        assert k4_on_edge(F, a, b) == k4_by_quadruples(F, a, b)


@pytest.mark.parametrize("p", [13, 29, 37, 53, 101])
def test_k4_is_half_the_triangle_sum(p):
    F = field_of_order(p)
    nb = common_neighbors(F, 0, 1)
    assert len(nb) == (p - 5) // 4
    total = sum(triple_via_charsum(F, 0, 1, int(c)) for c in nb)
    assert total == 2 * k4_on_edge(F, 0, 1)


@pytest.mark.parametrize("p", PRIMES)
def test_closed_form_and_edge_transitivity(p):
    r = check_k4(field_of_order(p), edges=20)
    assert r["edges"] == 20
    assert r["min"] == r["max"] == r["closed_form"]


def test_prime_power_has_no_closed_form_entry():
    r = check_k4(field_of_order(25), edges=5)
    assert "closed_form" not in r and r["min"] == r["max"]


def test_sample_edges_are_edges_and_deterministic():
    F = field_of_order(101)
    edges = sample_edges(F, 20, seed=3)
    assert edges == sample_edges(F, 20, seed=3)
    assert edges[0] == (0, 1)
    assert all(F.char_table[F.sub(a, b)] == 1 for a, b in edges)
