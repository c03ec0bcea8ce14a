from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tsmult.errors import DimensionMismatch, InclusionError, InfiniteQuotient
from tsmult.monomial import (MonomialIdeal, colength, external_product, ideal_sum,
                             minimal_antichain, quotient_basis)

from bruteforce import bf_member, bf_minimal

points_2d = st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), max_size=12)
points_3d = st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4),
                               st.integers(0, 4)), max_size=10)


@given(points_2d)
def test_minimal_antichain_matches_bruteforce_2d(pts):
    assert list(minimal_antichain(pts)) == bf_minimal(pts)


@given(points_3d)
def test_minimal_antichain_matches_bruteforce_3d(pts):
    assert list(minimal_antichain(pts)) == bf_minimal(pts)


def test_minimal_antichain_large_input_numpy_path():
    pts = [(i, j) for i in range(12) for j in range(12) if i + j >= 8]
    assert list(minimal_antichain(pts)) == bf_minimal(pts)


def test_unit_and_zero():
    unit = MonomialIdeal.unit(2)
    zero = MonomialIdeal.zero(2)
    assert unit.is_unit and not unit.is_zero
    assert zero.is_zero and not zero.is_unit
    assert unit.contains((0, 0)) and unit.contains((3, 1))
    assert not zero.contains((0, 0))
    assert zero.contained_in(unit)
    assert not unit.contained_in(zero)


@given(points_2d, st.tuples(st.integers(0, 8), st.integers(0, 8)))
def test_contains_matches_bruteforce(pts, nu):
    ideal = MonomialIdeal(2, pts)
    assert ideal.contains(nu) == bf_member(pts, nu)


@given(points_2d, points_2d)
def test_containment_and_sum(pts_a, pts_b):
    a = MonomialIdeal(2, pts_a)
    b = MonomialIdeal(2, pts_b)
    s = ideal_sum(a, b)
    assert a.contained_in(s) and b.contained_in(s)
    assert s == ideal_sum(b, a)
    assert s == MonomialIdeal(2, list(pts_a) + list(pts_b))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        ideal_sum(MonomialIdeal.unit(2), MonomialIdeal.unit(3))
    with pytest.raises(DimensionMismatch):
        MonomialIdeal(2, [(1, 2, 3)])


def test_external_product():
    a = MonomialIdeal(1, [(2,)])
    b = MonomialIdeal(2, [(0, 1), (3, 0)])
    p = external_product(a, b)
    assert p.dim == 3
    assert set(p.gens) == {(2, 0, 1), (2, 3, 0)}
    assert external_product(a, MonomialIdeal.zero(2)).is_zero
    lifted = external_product(MonomialIdeal.unit(1), b)
    assert set(lifted.gens) == {(0, 0, 1), (0, 3, 0)}


def test_quotient_basis_golden_finite():
    big = MonomialIdeal(2, [(1, 0), (0, 1)])
    small = MonomialIdeal(2, [(1, 0), (0, 2)])
    q = quotient_basis(big, small)
    assert q.finite
    assert q.exponents == ((0, 1),)
    assert q.dim == 1
    assert colength(big, small) == 1


def test_quotient_basis_infinite_with_witness():
    big = MonomialIdeal(2, [(1, 0)])
    small = MonomialIdeal(2, [(1, 1)])
    q = quotient_basis(big, small)
    assert not q.finite
    assert q.witness_axis == 0
    with pytest.raises(InfiniteQuotient):
        q.dim


def test_quotient_requires_inclusion():
    big = MonomialIdeal(2, [(2, 0)])
    small = MonomialIdeal(2, [(0, 2)])
    with pytest.raises(InclusionError):
        quotient_basis(big, small)


def test_colength_of_unit_by_powers():
    unit = MonomialIdeal.unit(2)
    small = MonomialIdeal(2, [(2, 0), (0, 3)])
    q = quotient_basis(unit, small)
    assert q.finite and q.dim == 6
    assert set(q.exponents) == {(i, j) for i in range(2) for j in range(3)}


@given(points_2d, st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=40)
def test_quotient_counts_match_bruteforce(pts, a, b):
    big = MonomialIdeal.unit(2)
    small = MonomialIdeal(2, [(p[0] + a, p[1] + b) for p in pts])
    q = quotient_basis(big, small)
    if small.is_zero:
        assert not q.finite
        return
    if q.finite:
        count = sum(1 for i in range(12) for j in range(12)
                    if not small.contains((i, j)))
        assert q.dim == count
    else:
        axis = q.witness_axis
        # the coordinate line along the witness axis never enters small
        probe = [0, 0]
        probe[axis] = 11
        assert not small.contains(tuple(probe))


def test_permuted():
    ideal = MonomialIdeal(3, [(1, 2, 0), (0, 0, 3)])
    rotated = ideal.permuted((2, 0, 1))
    assert set(rotated.gens) == {(0, 1, 2), (3, 0, 0)}


def test_json_round_trip():
    ideal = MonomialIdeal(2, [(1, 0), (0, 2)])
    assert MonomialIdeal.from_json(ideal.to_json()) == ideal
    assert ideal.to_json() == {"dim": 2, "gens": [[0, 2], [1, 0]]}
