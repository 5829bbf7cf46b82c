import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from paley.charext import (
    PartialCharacter,
    _sum_representations,
    check_conditions,
    domain,
    extend_psi,
    find_c,
    find_c_failures,
    relation_matrix,
    relation_snf,
    restrict_additive_character,
    solution_count_mod_p,
)
from paley.errors import DomainMismatch, NotFound, PreconditionViolated
from paley.ff import field_of_order, paley_orders


def brute_conditions(psi):
    """O(|D|^4) check of psi(0) = 1 and psi(a)psi(b) = psi(c)psi(d) when a + b = c + d."""
    F, e = psi.spec, psi.exponents
    if e[0] % F.p:
        return False
    D = sorted(e)
    for a, b, c, d in itertools.product(D, repeat=4):
        if F.add(a, b) == F.add(c, d) and (e[a] + e[b] - e[c] - e[d]) % F.p:
            return False
    return True


def test_restrict_examples():
    F13 = field_of_order(13)
    assert domain(F13).tolist() == [0, 1, 3, 4, 9, 10, 12]
    psi = restrict_additive_character(F13, 1)
    assert psi.exponents == {a: a for a in [0, 1, 3, 4, 9, 10, 12]}
    assert set(restrict_additive_character(F13, 0).exponents.values()) == {0}


@pytest.mark.parametrize("q", [9, 13, 17, 25, 29, 49])
def test_distinct_t_give_distinct_restrictions(q):
    F = field_of_order(q)
    seen = {tuple(restrict_additive_character(F, t).as_array()[1]) for t in range(q)}
    assert len(seen) == q


@pytest.mark.parametrize("q", [5, 9, 13, 25, 49, 81])
def test_restrictions_satisfy_invariants(q):
    F = field_of_order(q)
    for t in range(0, q, max(1, q // 10)):
        psi = restrict_additive_character(F, t)
        assert check_conditions(psi)
        e = psi.exponents
        for a in e:
            assert (e[a] + e[F.neg(a)]) % F.p == 0


def test_perturbation_is_detected():
    F13 = field_of_order(13)
    psi = restrict_additive_character(F13, 1)
    psi.exponents[4] += 1
    res = check_conditions(psi)
    assert not res
    a, b, c, d = res.quadruple
    assert F13.add(a, b) == F13.add(c, d)
    e = psi.exponents
    assert (e[a] + e[b] - e[c] - e[d]) % 13
    with pytest.raises(PreconditionViolated):
        extend_psi(psi)


def test_psi_zero_must_vanish():
    F = field_of_order(13)
    psi = restrict_additive_character(F, 2)
    psi.exponents[0] = 5
    assert check_conditions(psi).reason == "psi(0) != 1"


@given(st.sampled_from([5, 9, 13]), st.data())
@settings(max_examples=60, deadline=None)
def test_conditions_match_quadruple_oracle(q, data):
    F = field_of_order(q)
    D = domain(F).tolist()
    if data.draw(st.booleans()):
        psi = restrict_additive_character(F, data.draw(st.integers(0, q - 1)))
        for d in data.draw(st.lists(st.sampled_from(D), max_size=2)):
            psi.exponents[d] += data.draw(st.integers(1, F.p - 1))
    else:
        psi = PartialCharacter(F, {d: data.draw(st.integers(0, F.p - 1)) for d in D})
    assert bool(check_conditions(psi)) == brute_conditions(psi)


def test_domain_mismatch():
    F = field_of_order(13)
    with pytest.raises(DomainMismatch):
        check_conditions(PartialCharacter(F, {0: 0, 1: 1}))
    with pytest.raises(DomainMismatch):
        check_conditions(PartialCharacter(F, {d: 0 for d in [0, 1, 2, 3, 4, 9, 10, 12]}))


def test_find_c_examples():
    F29 = field_of_order(29)
    assert find_c(F29, 1, 1) == 5
    with pytest.raises(NotFound):
        find_c(field_of_order(13), 1, 1)
    with pytest.raises(PreconditionViolated):
        find_c(F29, 0, 3)
    for a in range(1, 29):
        for b in range(1, 29):
            c = find_c(F29, a, b)
            assert all(F29.char_table[v] == 1 for v in (c, F29.sub(a, c), F29.add(b, c)))
    assert find_c_failures(F29) == 0


def test_find_c_failures_only_small():
    assert all(find_c_failures(field_of_order(q)) > 0 for q in (5, 9, 13, 17, 25))
    assert all(find_c_failures(field_of_order(q)) == 0 for q in paley_orders(29, 400))


def test_extend_examples():
    F29 = field_of_order(29)
    ext = extend_psi(restrict_additive_character(F29, 7))
    assert ext.t == 7
    assert ext.values.tolist() == [(7 * x) % 29 for x in range(29)]
    assert extend_psi(restrict_additive_character(F29, 0)).t == 0
    F9 = field_of_order(9)
    assert [extend_psi(restrict_additive_character(F9, t)).t for t in range(9)] == list(range(9))


def test_q5_failure_is_not_torsion():
    """Mod 5 every solution is a character; the extra freedom lives only over C*."""
    F5 = field_of_order(5)
    assert [extend_psi(restrict_additive_character(F5, t)).t for t in range(5)] == list(range(5))
    assert solution_count_mod_p(F5) == 5
    assert 0 in relation_snf(F5)


@pytest.mark.parametrize("q", [9, 13, 25, 49, 81, 121])
def test_choice_independence(q):
    F = field_of_order(q)
    xs, V, valid = _sum_representations(F)
    S = F.square_array
    for t in range(0, q, max(1, q // 8)):
        ext = extend_psi(restrict_additive_character(F, t)).values
        every = (ext[S][None, :] + ext[V]) % F.p
        assert np.all(np.where(valid, every, ext[xs][:, None]) == ext[xs][:, None])
        assert np.all(valid.any(axis=1))


def test_relation_snf_examples():
    assert relation_snf(field_of_order(5)) == [0]
    assert relation_snf(field_of_order(9)) == [3, 3]
    assert relation_snf(field_of_order(13)) == [13]
    assert relation_snf(field_of_order(25)) == [5, 5]


@pytest.mark.parametrize("q", [9, 13, 17, 25, 29, 37, 49])
def test_solution_count_equals_q(q):
    F = field_of_order(q)
    assert solution_count_mod_p(F) == q
    M = relation_matrix(F)
    assert M.shape[1] == len(domain(F))
    assert M[0].tolist() == [1] + [0] * (M.shape[1] - 1)


def test_relation_matrix_kernel_contains_characters():
    F = field_of_order(25)
    M = relation_matrix(F)
    for t in range(25):
        _, e = restrict_additive_character(F, t).as_array()
        assert np.all((M @ e) % F.p == 0)
