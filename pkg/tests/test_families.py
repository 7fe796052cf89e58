from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadbeta.algebra import AlgebraError, mpoly
from quadbeta.families import (
    CSV_HEADER,
    PoleError,
    c_branch,
    cbranch_report,
    circle_family,
    family1,
    family2,
    remark2_split,
    remark2_symbolic_holds,
    s_integer_examples,
)

F = Fraction
params = st.fractions(min_value=-20, max_value=20, max_denominator=30)


def test_family1_values():
    r = family1(F(1, 2))
    assert tuple(r.coeffs) == (2, F(5, 2), 1, F(1, 2))
    assert (r.p, r.q, r.disc) == (-2, -1, 8)
    r = family1(2)
    assert (r.p, r.q, r.disc) == (F(-13, 2), F(85, 8), F(-1, 4))


def test_family2_values():
    assert tuple(family2(3).coeffs) == (6, 17, 24, 22)
    assert tuple(family2(-15).coeffs) == (-30, 197, 420, 706)


def test_circle_values():
    r = circle_family(0)
    assert tuple(r.coeffs) == (2, 5, 4, 2) and (r.p, r.q) == (-4, 2)
    r = circle_family(1)
    assert tuple(r.coeffs) == (2, F(13, 3), F(4, 3), F(4, 3)) and (r.p, r.q) == (F(-12, 5), F(-12, 5))


@pytest.mark.parametrize("fam, t", [(family1, 0), (family1, 1), (family2, 0)])
def test_poles_raise(fam, t):
    with pytest.raises(PoleError, match="factors as"):
        fam(t)


@given(params)
@settings(max_examples=40, deadline=None)
def test_families_solve_the_e_system(t):
    for fam in (family1, family2, circle_family):
        try:
            rec = fam(t)
        except PoleError:
            continue
        assert not any(rec.residuals())


def test_remark2_split():
    first, second = remark2_split(1)
    assert first.to_str() == "x^2 + 4/3*x + 11/3"
    assert second.to_str() == "x^2 + 2/3*x + 1/3"
    assert remark2_symbolic_holds()
    with pytest.raises(AlgebraError):
        remark2_split(0)


@given(st.fractions(min_value=-10, max_value=10, max_denominator=10).filter(bool))
@settings(max_examples=30, deadline=None)
def test_remark2_split_everywhere(s):
    remark2_split(s)


def test_cbranch_example_and_report():
    rec = c_branch(0, 2)
    assert tuple(rec.coeffs) == (0, -1, -2, 0)
    assert not rec.irreducible and rec.p is None
    report = cbranch_report()
    assert report.factor_identity
    assert report.curve_residual.is_zero()
    assert not report.printed_d_factor_residual.is_zero()
    assert not report.printed_d_curve_residual.is_zero()


@given(params, params)
@settings(max_examples=30, deadline=None)
def test_cbranch_identities_hold_pointwise(a, u):
    rec = c_branch(a, u)
    a_, b, c, _ = rec.coeffs
    assert c == 2 * b - a_


def test_s_integers():
    assert [r.t for r in s_integer_examples([2], 4)] == [F(1, 2), F(3, 2), F(1, 4), F(3, 4)]
    assert [r.t for r in s_integer_examples([3], 1)] == [F(1, 3)]
    assert [r.t for r in s_integer_examples([], 3)] == [F(1)]
    for r in s_integer_examples([2, 5], 12):
        assert 0 < r.t < 2 and r.disc > 0
        den = r.t.denominator
        for p in (2, 5):
            while den % p == 0:
                den //= p
        assert den == 1
    with pytest.raises(AlgebraError):
        s_integer_examples([4], 2)


def test_csv_row():
    assert CSV_HEADER.count(",") == family1(F(1, 2)).csv_row().count(",")
    assert family1(F(1, 2)).csv_row() == "F1,1/2,2,5/2,1,1/2,-2,-1,8,true"
    assert c_branch(0, 2).csv_row() == "CBRANCH,2,0,-1,-2,0,-,-,-,false"


def test_family_polynomials_match_lemma_forms():
    assert family1(7).coeffs.poly() == mpoly(
        "x^4 + 2*x^3 + (2*t^2 + 2)*x^2 + (4*t^2 - 4*t + 2)*x + 6*t^2 - 4*t + 1"
    ).subs({"t": 7}).to_upoly("x")
