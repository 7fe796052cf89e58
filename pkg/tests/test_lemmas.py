from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadbeta.algebra import AlgebraError, MPoly
from quadbeta.elliptic import (
    E_CURVE,
    INFINITY,
    EllipticCurve,
    c_points_check,
    count_points_mod,
    ec_add,
    ec_mul,
    good_primes,
    phi_map_check,
    point,
    point_order,
    torsion_points,
    torsion_report,
)
from quadbeta.lemmas import compare, lemma1_identities, lemma2_identities


def test_all_identities_hold():
    ids = lemma1_identities() + lemma2_identities()
    assert len(ids) == 17
    for ident in ids:
        assert ident.holds, ident.name
        assert ident.sign == 1


def _mutations(poly: MPoly):
    for exp, coef in poly.terms.items():
        terms = dict(poly.terms)
        terms[exp] = coef + 1
        yield MPoly(poly.vars, terms)


def test_every_single_coefficient_mutation_breaks_identity():
    for ident in lemma1_identities() + lemma2_identities():
        for mutated in _mutations(ident.rhs):
            assert not compare(ident.name, ident.lhs, mutated).holds


def test_compare_reports_sign():
    p = MPoly.var("t") + 1
    assert compare("x", -p, p).sign == -1
    assert not compare("x", -p, p, allow_sign=False).holds


def test_phi_map():
    assert phi_map_check()
    assert not phi_map_check(a2=7)


def test_c_points():
    rep = c_points_check()
    assert rep.holds
    assert rep.values == {0: 64, 2: 64}
    assert {str(P) for P in rep.images} == {"(-2,8)", "(-2,-8)"}
    assert rep.t_values == {0: [0], 2: [0]}
    assert not rep.stated_points_on_curve


def test_group_law_examples():
    P = point(-2, 8)
    assert ec_mul(E_CURVE, 2, P) == point(2, 0)
    assert ec_add(E_CURVE, point(2, 0), point(2, 0)) == INFINITY
    assert ec_add(E_CURVE, P, INFINITY) == P
    assert ec_mul(E_CURVE, -1, P) == point(-2, -8)
    with pytest.raises(AlgebraError):
        ec_add(E_CURVE, point(0, 0), P)


def test_torsion_of_E():
    rep = torsion_report()
    assert [str(P) for P in rep.points] == ["O", "(-2,-8)", "(-2,8)", "(2,0)"]
    assert rep.order == 4 and rep.orders == (1, 4, 4, 2)
    assert len(rep.point_counts) == 3 and rep.divides_counts


def test_sanity_curve():
    E = EllipticCurve(0, -1, 0)
    assert {str(P) for P in torsion_points(E)} == {"O", "(0,0)", "(1,0)", "(-1,0)"}


def test_non_integral_and_singular_curves_rejected():
    with pytest.raises(AlgebraError):
        torsion_points(EllipticCurve(Fraction(1, 2), 1, 1))
    with pytest.raises(AlgebraError):
        EllipticCurve(0, 0, 0)


def test_point_counting_on_known_curve():
    # y^2 = x^3 - x over F_5 has 8 points
    assert count_points_mod(EllipticCurve(0, -1, 0), 5) == 8
    assert good_primes(E_CURVE) == sorted(good_primes(E_CURVE))


def _curve_points(E, bound=30):
    pts = []
    for x in range(-bound, bound + 1):
        v = E.cubic(Fraction(x))
        if v >= 0:
            r = int(v**0.5)
            for y in (r - 1, r, r + 1):
                if y >= 0 and y * y == v:
                    pts.append(point(x, y))
    return pts


E_PTS = _curve_points(E_CURVE) + [INFINITY]


@given(st.sampled_from(E_PTS), st.sampled_from(E_PTS), st.sampled_from(E_PTS))
@settings(max_examples=40, deadline=None)
def test_group_law_properties(P, Q, R):
    assert E_CURVE.contains(ec_add(E_CURVE, P, Q))
    assert ec_add(E_CURVE, P, Q) == ec_add(E_CURVE, Q, P)
    assert ec_add(E_CURVE, ec_add(E_CURVE, P, Q), R) == ec_add(E_CURVE, P, ec_add(E_CURVE, Q, R))


@given(st.sampled_from(E_PTS), st.integers(0, 12))
@settings(max_examples=30, deadline=None)
def test_mul_matches_repeated_addition(P, n):
    acc = INFINITY
    for _ in range(n):
        acc = ec_add(E_CURVE, acc, P)
    assert ec_mul(E_CURVE, n, P) == acc


def test_non_torsion_point_has_no_small_order():
    # (0, ±2*sqrt2) is not rational; (1, ±sqrt(-5)) neither, so pick a rational point
    for P in _curve_points(E_CURVE):
        if P not in set(torsion_points(E_CURVE)):
            assert point_order(E_CURVE, P) is None
