"""Symbolic identities behind the irreducibility of the two integer families.

Each identity is re-derived from a factor ansatz: expand, match coefficients,
eliminate with resultants and discriminants, and compare with the stated
polynomial.  Resultants use the Sylvester matrix with the first argument's
rows on top; a result equal to the negated statement is reported with
``sign = -1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import MPoly, discriminant, mpoly, resultant

F1_TEXT = "x^4 + 2*x^3 + (2*t^2 + 2)*x^2 + (4*t^2 - 4*t + 2)*x + 6*t^2 - 4*t + 1"
F2_TEXT = "x^4 + 2*t*x^3 + (t^2 + 2*t + 2)*x^2 + (2*t^2 + 2*t)*x + 3*t^2 - 2*t + 1"

LINEAR_ANSATZ = "(x + s1)*(x^3 + s2*x^2 + s3*x + s4)"
QUADRATIC_ANSATZ = "(x^2 + s1*x + s2)*(x^2 + s3*x + s4)"

# statements to compare against, keyed by identity name
STATED = {
    "f1.linear.system0": "-s1*s4 + 6*t^2 - 4*t + 1",
    "f1.linear.system1": "-s1^3 - 2*s1*t^2 + 2*s1^2 + 4*t^2 - 2*s1 - s4 - 4*t + 2",
    "f1.linear.disc": "(-8)*(s1 - 1)^2*(s1^4 - 2*s1^3 + 4*s1^2 - 2*s1 + 1)",
    "f1.quadratic.system0": "-s1^2*s2 - 2*s2*t^2 + 2*s1*s2 + s2^2 + 6*t^2 - 2*s2 - 4*t + 1",
    "f1.quadratic.system1": "-s1^3 - 2*s1*t^2 + 2*s1^2 + 2*s1*s2 + 4*t^2 - 2*s1 - 2*s2 - 4*t + 2",
    "f1.quadratic.resultant": "(-1)*(s1^2 + 2*t^2 - 2*s1 - 4*t + 2)"
    "*(s1^4 + 2*s1^2*t^2 - 4*s1^3 + 4*s1^2*t - 4*s1*t^2 + 6*s1^2 - 8*s1*t - 4*s1 + 8*t)",
    "f1.quadratic.first_factor_disc": "-8*s1^2 + 16*s1",
    "f1.quadratic.disc": "(-8)*(s1^2 - 2*s1 + 2)*(s1^4 - 4*s1^3 + 2*s1^2 + 4*s1 - 4)",
    "f2.linear.system0": "-s1*s4 + 3*t^2 - 2*t + 1",
    "f2.linear.system1": "-s1^3 + 2*s1^2*t - s1*t^2 - 2*s1*t + 2*t^2 - 2*s1 - s4 + 2*t",
    "f2.linear.disc": "(-8)*(s1^4 - 2*s1^3 + 4*s1^2 - 2*s1 + 1)",
    "f2.quadratic.system0": "-s1^2*s2 + 2*s1*s2*t - s2*t^2 + s2^2 - 2*s2*t + 3*t^2 - 2*s2 - 2*t + 1",
    "f2.quadratic.system1": "-s1^3 + 2*s1^2*t - s1*t^2 + 2*s1*s2 - 2*s1*t - 2*s2*t + 2*t^2 - 2*s1 + 2*t",
    "f2.quadratic.factored": "(-1)*(-s1 + t)*(-s1^2 + s1*t + 2*s2 - 2*t - 2)",
    "f2.quadratic.diagonal_disc": "(-8)*t*(t - 2)",
    "f2.quadratic.reduced": "(1/4)*(-s1^4 + 4*s1^3*t - 5*s1^2*t^2 + 2*s1*t^3 - 4*s1^2*t"
    " + 8*s1*t^2 - 4*t^3 - 4*s1^2 + 8*s1*t + 4*t^2 - 16*t)",
    "f2.quadratic.reduced_disc": "(-1/32)*t*(t - 2)*(t^4 - 8*t^3 + 40*t^2 - 32*t + 16)^2",
}


@dataclass(frozen=True)
class LemmaIdentity:
    name: str
    lhs: MPoly
    rhs: MPoly
    holds: bool
    sign: int = 1

    def to_json(self) -> dict:
        details = f"derived = {'-' if self.sign < 0 else ''}stated" if self.holds else f"derived: {self.lhs}"
        return {"name": self.name, "holds": self.holds, "details": details}


def compare(name: str, derived: MPoly, stated: MPoly, allow_sign: bool = True) -> LemmaIdentity:
    if derived == stated:
        return LemmaIdentity(name, derived, stated, True, 1)
    if allow_sign and derived == -stated:
        return LemmaIdentity(name, derived, stated, True, -1)
    return LemmaIdentity(name, derived, stated, False)


def _matching(family: str, ansatz: str) -> list[MPoly]:
    """Coefficients (ascending in x) of ``family - ansatz``."""
    return (mpoly(family) - mpoly(ansatz)).collect("x")


def _solve_linear_in(eq: MPoly, var: str) -> MPoly:
    """Solve ``eq = 0`` for ``var`` when ``eq`` is linear in it with constant coefficient."""
    parts = eq.collect(var)
    if len(parts) != 2 or not parts[1].is_constant():
        raise ValueError(f"{eq} is not linear in {var} with constant coefficient")
    return -parts[0] / parts[1].constant_value()


def _linear_case(family: str) -> tuple[MPoly, MPoly]:
    """Remaining two equations of the linear-factor ansatz after eliminating s2, s3."""
    eqs = _matching(family, LINEAR_ANSATZ)
    s2 = _solve_linear_in(eqs[3], "s2")
    s3 = _solve_linear_in(eqs[2].subs({"s2": s2}), "s3")
    env = {"s2": s2, "s3": s3}
    return eqs[0].subs(env), eqs[1].subs(env)


def _quadratic_case(family: str) -> tuple[MPoly, MPoly]:
    """Remaining two equations of the quadratic-factor ansatz after eliminating s3, s4."""
    eqs = _matching(family, QUADRATIC_ANSATZ)
    s3 = _solve_linear_in(eqs[3], "s3")
    s4 = _solve_linear_in(eqs[2].subs({"s3": s3}), "s4")
    env = {"s3": s3, "s4": s4}
    return eqs[0].subs(env), eqs[1].subs(env)


def _stated(name: str) -> MPoly:
    return mpoly(STATED[name])


def lemma1_identities() -> list[LemmaIdentity]:
    out = []
    lin0, lin1 = _linear_case(F1_TEXT)
    out.append(compare("f1.linear.system0", lin0, _stated("f1.linear.system0")))
    out.append(compare("f1.linear.system1", lin1, _stated("f1.linear.system1")))
    res = resultant(lin0, lin1, "s4")
    out.append(compare("f1.linear.disc", discriminant(res, "t"), _stated("f1.linear.disc")))

    quad0, quad1 = _quadratic_case(F1_TEXT)
    out.append(compare("f1.quadratic.system0", quad0, _stated("f1.quadratic.system0")))
    out.append(compare("f1.quadratic.system1", quad1, _stated("f1.quadratic.system1")))
    res = resultant(quad0, quad1, "s2")
    out.append(compare("f1.quadratic.resultant", res, _stated("f1.quadratic.resultant")))
    first = mpoly("s1^2 + 2*t^2 - 2*s1 - 4*t + 2")
    out.append(compare("f1.quadratic.first_factor_disc", discriminant(first, "t"),
                       _stated("f1.quadratic.first_factor_disc")))
    second = mpoly("s1^4 + 2*s1^2*t^2 - 4*s1^3 + 4*s1^2*t - 4*s1*t^2 + 6*s1^2 - 8*s1*t - 4*s1 + 8*t")
    out.append(compare("f1.quadratic.disc", discriminant(second, "t"), _stated("f1.quadratic.disc")))
    return out


def lemma2_identities() -> list[LemmaIdentity]:
    out = []
    lin0, lin1 = _linear_case(F2_TEXT)
    out.append(compare("f2.linear.system0", lin0, _stated("f2.linear.system0")))
    out.append(compare("f2.linear.system1", lin1, _stated("f2.linear.system1")))
    res = resultant(lin0, lin1, "s4")
    out.append(compare("f2.linear.disc", discriminant(res, "t"), _stated("f2.linear.disc")))

    quad0, quad1 = _quadratic_case(F2_TEXT)
    out.append(compare("f2.quadratic.system0", quad0, _stated("f2.quadratic.system0")))
    out.append(compare("f2.quadratic.system1", quad1, _stated("f2.quadratic.system1")))
    out.append(compare("f2.quadratic.factored", quad1, _stated("f2.quadratic.factored"), allow_sign=False))
    diagonal = quad0.subs({"s1": mpoly("t")})
    out.append(compare("f2.quadratic.diagonal_disc", discriminant(diagonal, "s2"),
                       _stated("f2.quadratic.diagonal_disc")))
    s2 = _solve_linear_in(mpoly("-s1^2 + s1*t + 2*s2 - 2*t - 2"), "s2")
    reduced = quad0.subs({"s2": s2})
    out.append(compare("f2.quadratic.reduced", reduced, _stated("f2.quadratic.reduced"), allow_sign=False))
    out.append(compare("f2.quadratic.reduced_disc", discriminant(reduced, "s1"),
                       _stated("f2.quadratic.reduced_disc")))
    return out
