from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from blowups.exactgeom import (
    GeneratingPoint,
    MembershipClass,
    OracleCapExceeded,
    ShrunkSimplex,
    WeightVector,
    _translate_range,
    brute_force_lattice_points,
    classify_point,
    frac_point,
    lattice_points_in_shrunk_simplex,
    to_integer_lattice,
)
from blowups.search import enumerate_blowups

from conftest import weight_vectors

F = Fraction


def simplex(n, eps=1):
    return ShrunkSimplex(GeneratingPoint(WeightVector(n)), F(eps))


# ---------------------------------------------------------------- types


def test_weight_vector_invariants():
    w = WeightVector((6, 10, 15, 7))
    assert (w.d, w.V, w.n_min) == (4, 37, 6)
    with pytest.raises(ValueError):
        WeightVector((2, 2, 2))  # imprimitive
    with pytest.raises(ValueError):
        WeightVector((1,))  # d < 2
    with pytest.raises(ValueError):
        WeightVector((1, -1, 1))
    with pytest.raises(ValueError):
        WeightVector((0, 1))  # V = 0
    # zero entries are allowed at type level when primitive and V >= 1
    assert not WeightVector((0, 1, 2)).all_positive()


def test_generating_point_identities():
    g = GeneratingPoint(WeightVector((1, 1, 2, 2)))
    assert sum(g.p) == 1 + F(1, g.V)
    assert all(pi == F(ni, g.V) for pi, ni in zip(g.p, g.weights.n))


def test_shrunk_simplex_eps_one_is_standard_simplex():
    s = simplex((1, 2), 1)
    apex, v1, v2 = s.vertices()
    assert apex == (0, 0) and v1 == (1, 0) and v2 == (0, 1)


def test_shrunk_simplex_rejects_bad_eps():
    for eps in (0, -1, F(3, 2), 2):
        with pytest.raises(ValueError):
            simplex((1, 2), eps)


def test_shrunk_simplex_coordinate_ranges():
    s = simplex((1, 1, 2, 2), F(1, 3))
    lo = [(1 - s.eps) * pi for pi in s.point.p]
    for v in s.vertices():
        assert all(l <= c <= l + s.eps for l, c in zip(lo, v))


# ---------------------------------------------------------------- frac_point


def test_frac_point_examples():
    assert frac_point(WeightVector((1, 2, 3)), 1) == (F(1, 5), F(2, 5), F(3, 5))
    assert frac_point(WeightVector((1, 1, 2, 2)), 3) == (F(3, 5), F(3, 5), F(1, 5), F(1, 5))
    assert frac_point(WeightVector((6, 10, 15, 7)), 36) == (
        F(31, 37), F(27, 37), F(22, 37), F(30, 37),
    )


def test_frac_point_range_errors():
    w = WeightVector((1, 2, 3))
    for k in (0, 5, -1):
        with pytest.raises(ValueError):
            frac_point(w, k)


@given(weight_vectors(max_index=30))
def test_frac_point_nonzero_in_range(w):
    for k in range(1, w.V):
        fp = frac_point(w, k)
        assert all(0 <= c < 1 for c in fp)
        assert any(c != 0 for c in fp)  # primitivity forbids k*p integral


# ---------------------------------------------------------------- classify_point


def test_classify_point_apex_is_vertex():
    s = simplex((1, 2), F(1, 2))
    apex = s.vertices()[0]
    assert classify_point(apex, s) is MembershipClass.VERTEX


def test_classify_point_examples():
    s1 = simplex((1, 2), 1)
    assert classify_point((F(1, 2), 0), s1) is MembershipClass.BOUNDARY_NONVERTEX
    s2 = simplex((1, 2), F(1, 2))
    assert classify_point((F(1, 2), 1), s2) is MembershipClass.OUTSIDE


def test_classify_point_interior():
    s = simplex((1, 2), 1)
    assert classify_point((F(1, 4), F(1, 4)), s) is MembershipClass.INTERIOR


def test_classify_point_dimension_mismatch():
    with pytest.raises(ValueError):
        classify_point((F(1, 2),), simplex((1, 2), 1))


# ---------------------------------------------------------------- enumeration


def test_enumeration_example_1_2():
    got = lattice_points_in_shrunk_simplex(simplex((1, 2), 1), "closed")
    nonvertex = [w for w in got if w.membership is not MembershipClass.VERTEX]
    assert len(nonvertex) == 1
    w = nonvertex[0]
    assert (w.k, w.z, w.point) == (1, (0, 0), (F(1, 2), F(0)))
    assert w.membership is MembershipClass.BOUNDARY_NONVERTEX
    assert not any(w.membership is MembershipClass.INTERIOR for w in got)


def test_enumeration_example_1_1_1():
    got = lattice_points_in_shrunk_simplex(simplex((1, 1, 1), 1), "closed")
    assert all(w.membership is MembershipClass.VERTEX for w in got)


def test_enumeration_v1_has_no_nonzero_cosets():
    got = lattice_points_in_shrunk_simplex(simplex((1, 1), 1), "closed")
    assert all(w.k == 0 for w in got)


def test_enumeration_open_mode_subset_of_closed():
    s = simplex((2, 3, 5), 1)
    open_pts = lattice_points_in_shrunk_simplex(s, "open")
    closed_pts = lattice_points_in_shrunk_simplex(s, "closed")
    assert all(w.membership is MembershipClass.INTERIOR for w in open_pts)
    closed_keys = {(w.k, w.z) for w in closed_pts}
    assert all((w.k, w.z) in closed_keys for w in open_pts)


def test_enumeration_bad_mode():
    with pytest.raises(ValueError):
        lattice_points_in_shrunk_simplex(simplex((1, 2), 1), "half-open")


def test_enumeration_order_is_k_then_lex_z():
    got = lattice_points_in_shrunk_simplex(simplex((3, 4, 5), 1), "closed")
    keys = [(w.k, w.z) for w in got]
    assert keys == sorted(keys)


@given(weight_vectors(max_index=25), st.sampled_from([F(1), F(1, 2), F(1, 3)]))
@settings(max_examples=120, deadline=None)
def test_coset_soundness_and_recheck(w, eps):
    s = ShrunkSimplex(GeneratingPoint(w), eps)
    for wit in lattice_points_in_shrunk_simplex(s, "closed"):
        kp = tuple(F(wit.k * ni, w.V) for ni in w.n)
        assert all((c - r).denominator == 1 for c, r in zip(wit.point, kp))
        assert classify_point(wit.point, s) is wit.membership


# ---------------------------------------------------------------- brute force


def test_brute_force_examples():
    got = dict(brute_force_lattice_points(WeightVector((1, 2)), 1))
    assert got == {
        (1, 0): MembershipClass.VERTEX,
        (0, 1): MembershipClass.VERTEX,
        (1, 2): MembershipClass.VERTEX,
        (1, 1): MembershipClass.BOUNDARY_NONVERTEX,
    }
    got = brute_force_lattice_points(WeightVector((1, 1, 1)), 1)
    assert sorted(p for p, _ in got) == [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]
    assert all(c is MembershipClass.VERTEX for _, c in got)
    got = brute_force_lattice_points(WeightVector((1, 2, 3)), 1)
    assert all(c is MembershipClass.VERTEX for _, c in got) and len(got) == 4


def test_brute_force_cap():
    with pytest.raises(OracleCapExceeded):
        brute_force_lattice_points(WeightVector((30, 31)), 1, cap=59)
    assert brute_force_lattice_points(WeightVector((30, 31)), 1, cap=60)


def test_brute_force_rejects_bad_eps():
    with pytest.raises(ValueError):
        brute_force_lattice_points(WeightVector((1, 2)), F(5, 4))


# -------------------------------------------------- oracle equivalence (small)


def _class_multiset(witnesses):
    return sorted(w.membership.value for w in witnesses)


@pytest.mark.parametrize("d,vmax", [(2, 14), (3, 12)])
@pytest.mark.parametrize("eps", [F(1), F(1, 2), F(1, 3)])
def test_oracle_equivalence_exhaustive(d, vmax, eps):
    for V in range(1, vmax + 1):
        for w in enumerate_blowups(d, V):
            s = ShrunkSimplex(GeneratingPoint(w), eps)
            coset = lattice_points_in_shrunk_simplex(s, "closed")
            brute = brute_force_lattice_points(w, eps)
            assert _class_multiset(coset) == sorted(c.value for _, c in brute)
            # point-level correspondence through the coordinate change
            mapped = {to_integer_lattice(wit.point, w): wit.membership for wit in coset}
            assert mapped == {tuple(map(F, p)): c for p, c in brute}


# ---------------------------------------------------- per-axis translate span


@given(weight_vectors(max_index=30), st.sampled_from([F(1), F(1, 2), F(2, 3), F(1, 3)]))
@settings(max_examples=100, deadline=None)
def test_translate_candidates_at_most_two(w, eps):
    # an interval of length eps <= 1 holds at most 2 integers, at most 1 for
    # eps < 1, and 2 only when eps = 1 with integral endpoints
    V = w.V
    a, b = eps.numerator, eps.denominator
    den, span = b * V, a * V
    for k in range(V):
        for j, nj in enumerate(w.n):
            num = (b - a) * nj - b * ((k * nj) % V)
            r = _translate_range(num, den, span)
            assert len(r) <= 2
            if eps < 1:
                assert len(r) <= 1
            if len(r) == 2:
                assert eps == 1 and num % den == 0


def test_exactness_everything_is_fraction():
    s = simplex((1, 1, 2, 2), F(2, 3))
    for v in s.vertices():
        assert all(isinstance(c, F) for c in v)
    for wit in lattice_points_in_shrunk_simplex(s, "closed"):
        assert all(isinstance(c, F) for c in wit.point)
