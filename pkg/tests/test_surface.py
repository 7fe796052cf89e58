import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadbeta.algebra import AlgebraError, discriminant, mpoly
from quadbeta.surface import (
    A2_FIRST,
    A2_SECOND,
    F_eval,
    F_factor_a2_check,
    P1,
    P1_reversed,
    P1_disc_check,
    disc_sign_check,
    param_eval,
    param_residuals,
    param_tables,
    region_csv,
    region_grid,
    region_svg,
    search_box,
    search_csv,
    surface_F,
)

F = Fraction
GOLDEN = Path(__file__).parent / "golden"
rats = st.fractions(min_value=-30, max_value=30, max_denominator=9)


def test_surface_polynomial_shape():
    poly = surface_F()
    assert len(poly) == 34
    assert poly.degree() == 4
    assert poly.terms[(4, 0, 0)] == 233 and poly.terms[(3, 1, 0)] == -352


@pytest.mark.parametrize("abc, value", [((2, 5, 4), 0), ((6, 17, 24), 0), ((0, 0, 0), -256)])
def test_F_values(abc, value):
    assert F_eval(*abc) == value


def test_a2_factorization():
    assert F_factor_a2_check()
    assert not F_factor_a2_check(second=A2_SECOND.replace("+ 20", "+ 21"))
    assert mpoly(A2_FIRST).eval({"b": 4, "c": 2}) == 0


@given(rats, rats)
@settings(max_examples=20, deadline=None)
def test_a2_transcription_guard(b, c):
    env = {"b": b, "c": c}
    assert F_eval(2, b, c) == mpoly(A2_FIRST).eval(env) * mpoly(A2_SECOND).eval(env)


def _rows(sols):
    return [(s.a, s.b, s.c, tuple((x.d, x.status) for x in s.d_candidates)) for s in sols]


def test_numeric_and_exact_search_agree():
    numeric = search_box(-6, 6, -25, 25)
    exact = search_box(-6, 6, -25, 25, exact=True)
    assert _rows(numeric) == _rows(exact)


def test_search_is_thread_invariant():
    assert _rows(search_box(-8, 8, -30, 30, threads=1)) == _rows(search_box(-8, 8, -30, 30, threads=2))


def test_search_small_box_rows():
    sols = search_box(-10, 10, -200, 200)
    rows = {(s.a, s.b, s.c, c.d) for s in sols for c in s.d_candidates}
    table = {(-10, 17, 40, 86), (-8, 10, 24, 57), (-6, 5, 12, 34), (-4, 2, 4, 17), (-2, 1, 0, 6),
             (0, 2, 0, 1), (2, 5, 4, 2), (4, 10, 12, 9), (6, 17, 24, 22), (8, 26, 40, 41), (10, 37, 60, 66)}
    assert table <= rows
    assert {(2, 4, 2, 3), (2, 2, 2, -7)} <= rows
    for s in sols:
        assert F_eval(s.a, s.b, s.c) == 0
        if s.a % 2 == 0 and s.a != 2 and s.d_candidates:
            assert s.family2_match
        if s.family2_match:
            t = s.a // 2
            assert s.d_candidates[0].d == 3 * t * t - 2 * t + 1


def test_search_rejects_empty_box():
    with pytest.raises(AlgebraError):
        search_box(1, 0, 0, 0)


def test_search_csv_golden():
    text = search_csv(search_box(-6, 6, -20, 20))
    assert text == (GOLDEN / "search_small.csv").read_text()
    assert text.splitlines()[0] == "a,b,c,d,p,q,family2_match"


def test_param_tables_shape():
    tables = param_tables()
    assert sorted(tables) == sorted(f"{n}{k}" for n in "bcdpq" for k in "nd")
    assert max(tables["qn"]) == 9 and max(tables["qd"]) == 9
    assert max(param_tables(complete=False)["qn"]) == 8


def test_param_printed_points():
    pe = param_eval(1, 1)
    assert (pe.b, pe.c, pe.d, pe.p, pe.q) == (F(97, 24), F(3, 4), F(17, 8), F(-6, 13), F(-51, 5))
    pe = param_eval(4, 1)
    assert (pe.b, pe.c, pe.d, pe.q) == (F(46, 3), 20, 25, F(525, 52))
    # the table itself gives p = -165/26 at a = 4
    assert pe.p == F(-165, 26)


@pytest.mark.parametrize("t", [F(-3), F(1, 7), F(2), F(9, 2)])
def test_param_constant_at_a4(t):
    pe = param_eval(4, t)
    assert (pe.b, pe.c, pe.d, pe.p, pe.q) == (F(46, 3), 20, 25, F(-165, 26), F(525, 52))


def test_param_uncompleted_q_misses_variety():
    pe = param_eval(1, 1, complete=False)
    assert pe.q == F(-453, 19)
    _, residuals = param_residuals(pe)
    assert any(residuals)


@pytest.mark.parametrize("a", [F(-3), F(1), F(7, 2), F(6)])
def test_param_varies_with_t_away_from_a4(a):
    assert param_eval(a, F(-1, 3)).coeffs != param_eval(a, F(5, 2)).coeffs


def test_param_zero_denominator_is_named():
    # at a = 2, t = 1 every table denominator vanishes
    with pytest.raises(AlgebraError, match="denominator of b"):
        param_eval(2, 1)


@given(st.fractions(min_value=-6, max_value=8, max_denominator=5),
       st.fractions(min_value=-4, max_value=4, max_denominator=5))
@settings(max_examples=25, deadline=None)
def test_param_lies_on_variety(a, t):
    try:
        pe = param_eval(a, t)
    except AlgebraError:
        return
    f_val, residuals = param_residuals(pe)
    assert f_val == 0 and not any(residuals)


def test_P1_and_its_discriminant():
    assert P1().eval({"a": 1, "t": 1}) == -5
    assert P1_disc_check()


def test_disc_sign_examples():
    rep = disc_sign_check(1, 1)
    assert rep.disc == F(34656, 845) and rep.region_value == 5 and rep.agrees
    # the same-t comparison breaks here; the reversed polynomial does not
    rep = disc_sign_check(F(11, 3), F(-11, 2))
    assert rep.disc > 0 and rep.region_value < 0 and not rep.agrees
    assert rep.agrees_reversed


def test_P1_reversed():
    assert P1_reversed() == mpoly(
        "(9*a^3 - 116*a^2 + 524*a - 800) - 24*(a - 5)*(a - 4)^2*t + 18*(a - 4)^3*t^2"
    )
    assert discriminant(P1_reversed(), "t") == discriminant(P1(), "t")


@given(st.fractions(min_value=-12, max_value=12, max_denominator=6),
       st.fractions(min_value=-12, max_value=12, max_denominator=6))
@settings(max_examples=60, deadline=None)
def test_disc_sign_follows_reversed_P1(a, t):
    if a == 0:
        return
    try:
        rep = disc_sign_check(a, t)
    except AlgebraError:
        return
    assert rep.agrees_reversed
    if a < 0:
        assert rep.reversed_value <= 0 and rep.disc <= 0


def test_region_grid_signs():
    grid = {(a, t): s for a, t, s in region_grid(F(1, 2))}
    assert grid[(F(1), F(1))] == 1
    assert all(s == 0 for (a, _), s in grid.items() if a == 0)
    neg = region_grid(1, a_range=(-5, -1))
    assert all(s < 0 for _, _, s in neg)


def test_region_outputs_golden():
    grid = region_grid(1)
    assert region_csv(grid) == (GOLDEN / "region_step1.csv").read_text()
    assert region_svg(grid) == (GOLDEN / "region_step1.svg").read_text()
    with pytest.raises(AlgebraError):
        region_grid(0)


def test_family2_point_lies_on_surface_over_Qa():
    point = surface_F().subs({"b": mpoly("a^2/4 + a + 2"), "c": mpoly("a^2/2 + a")})
    assert point.is_zero()
