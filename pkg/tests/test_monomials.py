import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apolar.monomials import (
    decrement_at,
    decrement_last,
    delete_at,
    enumerate_exponents,
    iter_exponents,
    last_support_index,
    last_variable_multiples,
    lex_compare,
    lex_min_preimage,
    lift_image,
    lift_image_positions,
    monomial_count,
)


def test_monomial_count_values():
    assert monomial_count(2, 3) == 4
    assert monomial_count(5, 0) == 1
    assert monomial_count(3, 2) == 6


def test_monomial_count_rejects_no_variables():
    with pytest.raises(ValueError):
        monomial_count(0, 2)


def test_recurrence_full_grid():
    for n in range(2, 13):
        for d in range(1, 13):
            assert monomial_count(n, d) == monomial_count(n - 1, d) + monomial_count(
                n, d - 1
            )


def test_enumerate_small_cases():
    assert enumerate_exponents(2, 2) == ((0, 2), (1, 1), (2, 0))
    assert enumerate_exponents(1, 5) == ((5,),)
    assert len(enumerate_exponents(3, 3)) == 10 == monomial_count(3, 3)


def test_enumerate_strictly_increasing():
    for n, d in [(2, 4), (3, 3), (4, 2)]:
        basis = enumerate_exponents(n, d)
        assert all(
            lex_compare(a, b) == -1 for a, b in zip(basis, basis[1:])
        )


def test_lex_compare_golden():
    assert lex_compare((1, 2), (2, 1)) == -1
    assert lex_compare((2, 1), (2, 0)) == 1
    assert lex_compare((1, 1), (1, 1)) == 0


def test_lex_compare_rejects_length_mismatch():
    with pytest.raises(ValueError):
        lex_compare((1,), (1, 2))


vectors = st.lists(st.integers(min_value=0, max_value=6), min_size=3, max_size=3).map(
    tuple
)


@settings(max_examples=200)
@given(vectors, vectors, vectors)
def test_lex_is_a_total_order(a, b, c):
    # antisymmetry
    assert lex_compare(a, b) == -lex_compare(b, a)
    # totality: one of the three outcomes always holds, and 0 only on equality
    assert (lex_compare(a, b) == 0) == (a == b)
    # transitivity
    if lex_compare(a, b) <= 0 and lex_compare(b, c) <= 0:
        assert lex_compare(a, c) <= 0


def test_decrement_at():
    assert decrement_at((2, 1), 2) == (2, 0)
    assert decrement_at((2, 0), 2) is None
    assert decrement_at((1, 1, 1), 1) == (0, 1, 1)
    with pytest.raises(ValueError):
        decrement_at((1, 1), 3)


@settings(max_examples=100)
@given(vectors, st.integers(min_value=1, max_value=3))
def test_decrement_lowers_degree_by_one(vec, k):
    out = decrement_at(vec, k)
    if out is not None:
        assert sum(out) == sum(vec) - 1


def test_delete_at():
    assert delete_at((2, 1, 3), 2) == (2, 3)
    assert delete_at((0, 5), 1) == (5,)
    assert delete_at((1, 1, 0), 3) == (1, 1)
    with pytest.raises(ValueError):
        delete_at((4,), 1)


def test_last_support_index():
    assert last_support_index((1, 0, 2)) == 3
    assert last_support_index((4, 0, 0)) == 1
    assert last_support_index((0, 1, 0)) == 2
    with pytest.raises(ValueError):
        last_support_index((0, 0))


def test_decrement_last():
    assert decrement_last((1, 0, 2)) == (1, 0, 1)
    assert decrement_last((0, 3)) == (0, 2)
    assert decrement_last((2, 1, 0)) == (2, 0, 0)


def test_lex_min_preimage_golden():
    assert lex_min_preimage((1, 0, 1)) == (1, 0, 2)
    assert lex_min_preimage((0, 2)) == (0, 3)
    assert lex_min_preimage((4,)) == (5,)


def test_lex_min_preimage_is_a_section():
    for n, d in [(2, 3), (3, 3), (3, 4)]:
        for j in enumerate_exponents(n, d - 1):
            assert decrement_last(lex_min_preimage(j)) == j


def test_last_variable_multiples_golden():
    # degree-2 basis in 2 variables is u2^2, u1*u2, u1^2
    assert last_variable_multiples(2, 3) == (1, 2)
    assert last_variable_multiples(2, 2) == (1,)


@pytest.mark.parametrize("n,d", [(2, 2), (2, 3), (3, 2), (3, 4), (4, 3)])
def test_last_variable_multiples_count(n, d):
    count = len(last_variable_multiples(n, d))
    assert count == monomial_count(n, d - 1) - monomial_count(n - 1, d - 1)


def test_lift_image_positions_golden():
    assert lift_image_positions(2, 3) == (1, 2)


@pytest.mark.parametrize("n,d", [(2, 3), (2, 4), (3, 3), (3, 4), (3, 6), (2, 6)])
def test_lift_image_positions_count(n, d):
    # the lift is injective, so its image has one element per lower monomial
    assert len(lift_image_positions(n, d)) == monomial_count(n, d - 2)


def test_lift_image_matches_bruteforce_minima():
    for n, d in [(2, 3), (3, 3), (3, 4)]:
        image = lift_image(n, d)
        expected = {
            lex_min_preimage(j) for j in enumerate_exponents(n, d - 1)
        }
        assert image == frozenset(expected)


def test_lift_image_positions_not_always_initial_segment():
    # in 3 variables at degree 2 the image skips position 3
    assert lift_image_positions(3, 3) == (1, 2, 4)


def test_iter_matches_enumerate():
    for n, d in [(1, 0), (2, 5), (4, 3)]:
        assert tuple(iter_exponents(n, d)) == enumerate_exponents(n, d)
