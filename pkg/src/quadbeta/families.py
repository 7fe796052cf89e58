"""Closed-form parametric solution families and their degenerate branches."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraError, MPoly, RatLike, UPoly, as_rat, mpoly, rat_str
from .core import QuarticCoeffs, build_e_polynomials
from .quartic import is_irreducible

CSV_HEADER = "family,t,a,b,c,d,p,q,disc,irreducible"

PRINTED_CBRANCH_D = "(9*a^2 + 36*a - 16 + 8*u - u^2)/36"
CBRANCH_D = "(9*a^2 - 12*a + 4 - u^2)/12"
CBRANCH_NOTE = (
    "printed d = (9a^2+36a-16+8u-u^2)/36 contradicts both the linear-factor identity "
    "and the curve equation; using d = (9a^2-12a+4-u^2)/12"
)


class PoleError(AlgebraError):
    """The parameter hits a pole of the family's (p, q) formulas."""


@dataclass(frozen=True)
class FamilyRecord:
    family_id: str
    t: Fraction
    coeffs: QuarticCoeffs
    p: Fraction | None
    q: Fraction | None
    disc: Fraction | None
    irreducible: bool
    notes: str = ""

    def residuals(self) -> list[Fraction]:
        return build_e_polynomials().residuals(self.coeffs, self.p, self.q)

    def to_json(self) -> dict:
        def r(x):
            return None if x is None else rat_str(x)

        a, b, c, d = self.coeffs
        out = {
            "family": self.family_id, "t": r(self.t),
            "a": r(a), "b": r(b), "c": r(c), "d": r(d),
            "p": r(self.p), "q": r(self.q), "disc": r(self.disc),
            "irreducible": self.irreducible,
        }
        if self.notes:
            out["notes"] = self.notes
        return out

    def csv_row(self) -> str:
        vals = self.to_json()
        cells = [vals[k] for k in ("family", "t", "a", "b", "c", "d", "p", "q", "disc")]
        cells = ["-" if v is None else v for v in cells]
        return ",".join(cells + ["true" if self.irreducible else "false"])


def _record(fid: str, t: Fraction, a, b, c, d, p, q, notes: str = "") -> FamilyRecord:
    coeffs = QuarticCoeffs.of(a, b, c, d)
    disc = None if p is None else p * p - 4 * q
    return FamilyRecord(fid, t, coeffs, p, q, disc, is_irreducible(coeffs.poly()), notes)


def family1(t: RatLike) -> FamilyRecord:
    t = as_rat(t)
    if t in (0, 1):
        specialization = "(x + 1)^2*(x^2 + 1)" if t == 0 else "(x^2 + 1)*(x^2 + 2*x + 3)"
        raise PoleError(f"family1 has a pole at t={t}; f factors as {specialization}")
    p = -(6 * t**2 - 6 * t + 1) / (t**2 - t)
    q = (18 * t**3 - 18 * t**2 + 7 * t - 1) / (2 * (t**3 - t**2))
    return _record("F1", t, 2, 2 * t**2 + 2, 4 * t**2 - 4 * t + 2, 6 * t**2 - 4 * t + 1, p, q)


def family2(t: RatLike) -> FamilyRecord:
    t = as_rat(t)
    if t == 0:
        raise PoleError("family2 has a pole at t=0; f factors as (x^2 + 1)^2")
    p = -2 * (3 * t**2 - 5 * t + 4) / (t**2 - 2 * t + 2)
    q = (9 * t**3 - 12 * t**2 + 7 * t - 2) / (t**3 - 2 * t**2 + 2 * t)
    return _record("F2", t, 2 * t, t**2 + 2 * t + 2, 2 * t**2 + 2 * t, 3 * t**2 - 2 * t + 1, p, q)


def circle_family(t: RatLike) -> FamilyRecord:
    """Rational points of ``(c - 2b + 6)^2 + 2(2b - 9)^2 = 2`` at ``a = 2``."""
    t = as_rat(t)
    den = 2 * t**2 + 1
    b = (8 * t**2 + 5) / den
    c = 4 * (t**2 - t + 1) / den
    d = 2 * (3 * t**2 - 2 * t + 1) / den
    p = 4 * (2 * t**3 - 5 * t**2 + t - 1) / (4 * t**2 + 1)
    q = -2 * (4 * t - 1) * (3 * t**2 - 2 * t + 1) / (4 * t**2 + 1)
    return _record("CIRCLE", t, 2, b, c, d, p, q)


def remark2_factors(s: RatLike) -> tuple[UPoly, UPoly]:
    s = as_rat(s)
    if s == 0:
        raise AlgebraError("s must be nonzero")
    den = s**2 + 2
    first = UPoly([(s**2 + 4 * s + 6) / den, 4 / den, 1])
    second = UPoly([(3 * s**2 - 4 * s + 2) / den, 2 * s**2 / den, 1])
    return first, second


def remark2_split(s: RatLike) -> tuple[UPoly, UPoly]:
    """Quadratic factors of the circle quartic at ``t = (2 - s^2)/(4s)``.

    The product identity is checked before returning.
    """
    s = as_rat(s)
    first, second = remark2_factors(s)
    rec = circle_family((2 - s**2) / (4 * s))
    if first * second != rec.coeffs.poly():
        raise AssertionError(f"split identity fails at s={s}")
    return first, second


def remark2_symbolic_holds() -> bool:
    """The split identity as a polynomial identity in ``s``, denominators cleared."""
    s, x = MPoly.var("s"), MPoly.var("x")
    den = s**2 + 2
    tn, td = 2 - s**2, 4 * s
    circ_den = 2 * tn**2 + td**2
    f_scaled = (
        circ_den * (x**4 + 2 * x**3)
        + (8 * tn**2 + 5 * td**2) * x**2
        + 4 * (tn**2 - tn * td + td**2) * x
        + 2 * (3 * tn**2 - 2 * tn * td + td**2)
    )
    first = den * x**2 + 4 * x + (s**2 + 4 * s + 6)
    second = den * x**2 + 2 * s**2 * x + (3 * s**2 - 4 * s + 2)
    return f_scaled * den**2 == first * second * circ_den


@dataclass(frozen=True)
class CBranchReport:
    record: FamilyRecord
    factor_identity: bool
    curve_residual: MPoly
    printed_d_factor_residual: MPoly
    printed_d_curve_residual: MPoly


def cbranch_polys(d_text: str = CBRANCH_D) -> tuple[MPoly, MPoly, MPoly, MPoly]:
    """``(b, c, d, f)`` of the ``c = 2b - a`` branch as polynomials in ``a, u, x``."""
    b = mpoly("(9*a^2 + 36*a - 16 - 8*u - u^2)") / 36
    c = 2 * b - mpoly("a")
    d = mpoly(d_text)
    x = MPoly.var("x")
    f = x**4 + mpoly("a") * x**3 + b * x**2 + c * x + d
    return b, c, d, f


def cbranch_factor_product() -> MPoly:
    x = MPoly.var("x")
    lin = 6 * x + mpoly("u + 3*a - 2")
    cubic = 6 * x**3 + mpoly("3*a - u + 2") * x**2 + 2 * mpoly("3*a - u - 1") * x + 3 * mpoly("3*a - u - 2")
    return lin * cubic / 36


def cbranch_curve_residual(b: MPoly, d: MPoly) -> MPoly:
    a = mpoly("a")
    return (9 * b - 12 * a - 3 * d + 5) ** 2 - 4 * (3 * a - 2) ** 2 + 48 * d


def cbranch_report() -> CBranchReport:
    """Symbolic consistency of the reducible branch, corrected and as printed."""
    b, _, d, f = cbranch_polys()
    _, _, d_printed, f_printed = cbranch_polys(PRINTED_CBRANCH_D)
    product = cbranch_factor_product()
    return CBranchReport(
        c_branch(0, 2),
        factor_identity=(f == product),
        curve_residual=cbranch_curve_residual(b, d),
        printed_d_factor_residual=f_printed - product,
        printed_d_curve_residual=cbranch_curve_residual(b, d_printed),
    )


def c_branch(a: RatLike, u: RatLike) -> FamilyRecord:
    """Reducible solutions on ``c = 2b - a``; no ``(p, q)`` is attached."""
    a, u = as_rat(a), as_rat(u)
    env = {"a": a, "u": u}
    b, c, d, f = cbranch_polys()
    bv, cv, dv = b.eval(env), c.eval(env), d.eval(env)
    fx = f.subs(env).to_upoly("x")
    if fx != cbranch_factor_product().subs(env).to_upoly("x"):
        raise AssertionError("c-branch factorization fails")
    if cbranch_curve_residual(b, d).eval(env) != 0:
        raise AssertionError("c-branch curve equation fails")
    coeffs = QuarticCoeffs(a, bv, cv, dv)
    return FamilyRecord("CBRANCH", u, coeffs, None, None, None, is_irreducible(coeffs.poly()), CBRANCH_NOTE)


def _smooth_numbers(primes: list[int]):
    """Integers > 1 whose prime factors all lie in ``primes``, ascending."""
    heap = list(primes)
    heapq.heapify(heap)
    seen = set()
    while heap:
        n = heapq.heappop(heap)
        if n in seen:
            continue
        seen.add(n)
        yield n
        for p in primes:
            heapq.heappush(heap, n * p)


def s_integer_examples(primes, count: int) -> list[FamilyRecord]:
    """``count`` family2 records with non-integral S-integer ``t`` in (0, 2).

    ``t`` runs through ``k/D`` ordered by denominator ``D`` (an S-smooth
    number) and then numerator.  With an empty prime set only ``t = 1``
    is available.
    """
    primes = sorted(set(primes))
    for p in primes:
        if p < 2 or any(p % k == 0 for k in range(2, math.isqrt(p) + 1)):
            raise AlgebraError(f"{p} is not a prime")
    if count < 1:
        raise AlgebraError("count must be positive")
    if not primes:
        return [family2(1)]
    out = []
    for den in _smooth_numbers(primes):
        for k in range(1, 2 * den):
            if math.gcd(k, den) == 1:
                out.append(family2(Fraction(k, den)))
                if len(out) == count:
                    return out
    return out
