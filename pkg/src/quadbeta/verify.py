"""One-shot verification suites with a JSON-friendly report."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import UPoly, rat_str
from .core import Kind, QuarticCoeffs, build_e_polynomials, decide_beta, min_poly_beta
from .elliptic import E_CURVE, c_points_check, phi_map_check, point, torsion_report
from .families import c_branch, cbranch_report, circle_family, family1, family2, remark2_symbolic_holds
from .lemmas import lemma1_identities, lemma2_identities
from .surface import (
    F_eval,
    F_factor_a2_check,
    P1_disc_check,
    disc_sign_check,
    param_eval,
    param_residuals,
    search_box,
    surface_F,
)

SUITES = ("e-system", "lemmas", "surface", "param", "torsion")


@dataclass(frozen=True)
class Check:
    name: str
    holds: bool
    details: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "holds": self.holds, "details": self.details}


def _e_system() -> list[Check]:
    es = build_e_polynomials()
    out = [Check("e.printed_match", es.scale is not None, f"lambda = {rat_str(es.scale)}")]
    v = decide_beta(QuarticCoeffs.of(2, 5, 4, 2))
    out.append(Check(
        "e.example_2542",
        v.kind is Kind.QUADRATIC and (v.p, v.q) == (-4, 2),
        f"kind={v.kind.value} p={rat_str(v.p)} q={rat_str(v.q)}",
    ))
    r = min_poly_beta(QuarticCoeffs.of(2, 5, 4, 2))
    out.append(Check("e.minpoly_2542", r == UPoly([2, -4, 1]) ** 2, r.to_str("Y")))
    for fid, rec in (("f1", family1(Fraction(1, 2))), ("f2", family2(3)), ("circle", circle_family(1))):
        res = rec.residuals()
        out.append(Check(f"e.family_{fid}_residuals", all(x == 0 for x in res), str([rat_str(x) for x in res])))
    return out


def _lemmas() -> list[Check]:
    out = [Check(i.name, i.holds, i.to_json()["details"]) for i in lemma1_identities() + lemma2_identities()]
    out.append(Check("phi_map", phi_map_check()))
    cp = c_points_check()
    out.append(Check(
        "c_points", cp.holds,
        f"U^2 at s1=0,2: {[rat_str(v) for v in cp.values.values()]}; "
        f"stated (s1,+-4) on C: {cp.stated_points_on_curve}",
    ))
    report = cbranch_report()
    out.append(Check("cbranch.factor_identity", report.factor_identity))
    out.append(Check("cbranch.curve_residual", report.curve_residual.is_zero()))
    out.append(Check(
        "cbranch.printed_d_flagged",
        not report.printed_d_factor_residual.is_zero() and not report.printed_d_curve_residual.is_zero(),
        report.record.notes,
    ))
    out.append(Check("circle.split_identity", remark2_symbolic_holds()))
    rec = c_branch(0, 2)
    out.append(Check("cbranch.example", not rec.irreducible, f"d={rat_str(rec.coeffs.d)}"))
    return out


def _surface() -> list[Check]:
    F = surface_F()
    out = [
        Check("surface.term_count", len(F) == 34, f"{len(F)} terms"),
        Check("surface.constant", F_eval(0, 0, 0) == -256),
        Check("surface.a2_factorization", F_factor_a2_check()),
    ]
    rows = {
        (s.a, s.b, s.c, c.d)
        for s in search_box(-10, 10, -60, 60)
        for c in s.d_candidates
    }
    expected = {(2 * t, t * t + 2 * t + 2, 2 * t * t + 2 * t, 3 * t * t - 2 * t + 1) for t in range(-5, 6)}
    out.append(Check("surface.family2_rows", expected <= rows, f"{len(rows)} rows in |a|<=10, |b|<=60"))
    out.append(Check("surface.a2_extra", {(2, 2, 2, -7), (2, 4, 2, 3)} <= rows))
    return out


def _param() -> list[Check]:
    out = []
    pe = param_eval(1, 1)
    out.append(Check(
        "param.a1_t1",
        (pe.b, pe.c, pe.d, pe.p, pe.q) == (Fraction(97, 24), Fraction(3, 4), Fraction(17, 8),
                                           Fraction(-6, 13), Fraction(-51, 5)),
        str(pe.to_json()),
    ))
    pe = param_eval(4, 1)
    out.append(Check(
        "param.a4_t1",
        (pe.b, pe.c, pe.d, pe.p, pe.q) == (Fraction(46, 3), 20, 25, Fraction(-165, 26), Fraction(525, 52)),
        f"{pe.to_json()}; stated p = 165/26, computed p = {rat_str(pe.p)}",
    ))
    bad = []
    for a in range(-3, 6):
        for t in (Fraction(-2), Fraction(1, 3), Fraction(5, 2)):
            if a == 0:
                continue
            pe = param_eval(a, t)
            f_val, res = param_residuals(pe)
            if f_val or any(res):
                bad.append((a, t))
    out.append(Check("param.on_variety", not bad, f"failures: {bad}"))
    out.append(Check("param.P1_disc", P1_disc_check()))
    reports = [
        disc_sign_check(Fraction(a), Fraction(t))
        for a in (1, 3, Fraction(11, 3), -2)
        for t in (Fraction(1, 2), 3, Fraction(-11, 2))
    ]
    literal = [(rat_str(r.a), rat_str(r.t)) for r in reports if not r.agrees]
    out.append(Check(
        "param.disc_sign",
        all(r.agrees_reversed for r in reports),
        f"sign(p^2-4q) = sign(-a t^2 P1(a,1/t)) at {len(reports)} points; "
        f"the same-t form -a P1(a,t) disagrees at {literal}",
    ))
    return out


def _torsion() -> list[Check]:
    rep = torsion_report()
    expected = {point(2, 0), point(-2, 8), point(-2, -8)}
    affine = {P for P in rep.points if not P.is_infinity}
    return [
        Check("torsion.points", affine == expected, ", ".join(str(P) for P in rep.points)),
        Check("torsion.order_divides_counts", rep.divides_counts, str(rep.point_counts)),
        Check("torsion.curve", str(E_CURVE) == "y^2 = x^3 + 6*x^2 - 20*x + 8"),
    ]


_RUNNERS = {
    "e-system": _e_system,
    "lemmas": _lemmas,
    "surface": _surface,
    "param": _param,
    "torsion": _torsion,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [c for s in SUITES for c in _RUNNERS[s]()]
    if name not in _RUNNERS:
        raise KeyError(name)
    return _RUNNERS[name]()
