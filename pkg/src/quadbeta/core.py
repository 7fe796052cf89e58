"""Decide whether beta = 4a^4/(a^4-1) - a/(a-1) is quadratic for a quartic root a.

Write ``beta = N0(X)/D0(X)`` with ``N0 = 3X^4 - X^3 - X^2 - X`` and
``D0 = X^4 - 1``.  ``beta`` is a root of ``Y^2 + pY + q`` exactly when
``N0^2 + p N0 D0 + q D0^2`` vanishes at the root; after cancelling the
common factor ``(X-1)^2`` this is a sextic ``W`` in ``X`` which must be
divisible by ``f = X^4 + aX^3 + bX^2 + cX + d``.  The four remainder
coefficients ``e1..e4`` are affine in ``(p, q)``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .algebra import (
    AlgebraError,
    MPoly,
    RatLike,
    UPoly,
    XPoly,
    as_rat,
    is_square_rat,
    mpoly,
    rat_str,
    rational_roots,
    resultant,
    upoly_gcd,
    xpoly_divrem_monic,
)
from .quartic import is_irreducible

N0 = UPoly([0, -1, -1, -1, 3])
D0 = UPoly([-1, 0, 0, 0, 1])

# remainder coefficients as printed, ascending in X
PRINTED_E = (
    "-3*d*p*a^2 + 5*d*p*a + 3*d*p*b - 6*d*p - d*q*a^2 + 2*d*q*a + d*q*b - 3*d*q"
    " - 9*d*a^2 + 12*d*a + 9*d*b - 10*d + q",
    "3*d*p*a - 5*d*p + d*q*a - 2*d*q + 9*d*a - 12*d - 3*p*a^2*c + 5*p*a*c + 3*p*b*c"
    " - 6*p*c + p - q*a^2*c + 2*q*a*c + q*b*c - 3*q*c + 2*q - 9*a^2*c + 12*a*c + 9*b*c - 10*c",
    "-3*d*p - d*q - 9*d - 3*p*a^2*b + 5*p*a*b + 3*p*a*c + 3*p*b^2 - 6*p*b - 5*p*c + 3*p"
    " - q*a^2*b + 2*q*a*b + q*a*c + q*b^2 - 3*q*b - 2*q*c + 3*q - 9*a^2*b + 12*a*b + 9*a*c"
    " + 9*b^2 - 10*b - 12*c + 1",
    "-3*p*a^3 + 5*p*a^2 + 6*p*a*b - 6*p*a - 5*p*b - 3*p*c + 6*p - q*a^3 + 2*q*a^2"
    " + 2*q*a*b - 3*q*a - 2*q*b - q*c + 4*q - 9*a^3 + 12*a^2 + 18*a*b - 10*a - 12*b - 9*c + 4",
)


class PreconditionError(AlgebraError):
    """The quartic violates a precondition (e.g. shares a root with X^4 - 1)."""


@dataclass(frozen=True)
class QuarticCoeffs:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    @classmethod
    def of(cls, a: RatLike, b: RatLike, c: RatLike, d: RatLike) -> QuarticCoeffs:
        return cls(as_rat(a), as_rat(b), as_rat(c), as_rat(d))

    def poly(self) -> UPoly:
        return UPoly([self.d, self.c, self.b, self.a, 1])

    def assignment(self) -> dict[str, Fraction]:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))


@dataclass(frozen=True)
class ESystem:
    e: tuple[MPoly, MPoly, MPoly, MPoly]
    scale: Fraction  # computed = scale * printed, for every coefficient

    def linear_parts(self, values: dict[str, object]) -> list[tuple[MPoly, MPoly, MPoly]]:
        """Rows ``(coef_p, coef_q, constant)`` of each ``e_i`` after substitution."""
        rows = []
        for ei in self.e:
            special = ei.subs(values)
            cp = special.diff("p")
            cq = special.diff("q")
            const = special.subs({"p": 0, "q": 0})
            rows.append((cp, cq, const))
        return rows

    def specialize(self, coeffs: QuarticCoeffs) -> tuple[list[list[Fraction]], list[Fraction]]:
        """Numeric system ``M @ (p, q) = v``."""
        m, v = [], []
        for cp, cq, const in self.linear_parts(coeffs.assignment()):
            m.append([cp.constant_value(), cq.constant_value()])
            v.append(-const.constant_value())
        return m, v

    def residuals(self, coeffs: QuarticCoeffs, p: RatLike, q: RatLike) -> list[Fraction]:
        env = {**coeffs.assignment(), "p": as_rat(p), "q": as_rat(q)}
        return [ei.eval(env) for ei in self.e]


class Kind(str, enum.Enum):
    QUADRATIC = "Quadratic"
    RATIONAL_BETA = "RationalBeta"
    NOT_QUADRATIC = "NotQuadratic"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class BetaVerdict:
    kind: Kind
    f_irreducible: bool
    p: Fraction | None = None
    q: Fraction | None = None
    disc: Fraction | None = None
    beta: Fraction | None = None
    notes: str = ""

    @property
    def real(self) -> bool | None:
        return None if self.disc is None else self.disc > 0

    def to_json(self) -> dict:
        def r(x):
            return None if x is None else rat_str(x)

        out = {
            "kind": self.kind.value,
            "p": r(self.p),
            "q": r(self.q),
            "disc": r(self.disc),
            "real": self.real,
            "f_irreducible": self.f_irreducible,
            "notes": self.notes,
        }
        if self.beta is not None:
            out["beta"] = r(self.beta)
        return out


def build_numerator_W() -> XPoly:
    """``(N0^2 + p N0 D0 + q D0^2) / (X-1)^2`` as a sextic in X over Q[p, q]."""
    n0 = XPoly.from_upoly(N0)
    d0 = XPoly.from_upoly(D0)
    full = n0 * n0 + n0 * d0 * MPoly.var("p") + d0 * d0 * MPoly.var("q")
    square = XPoly.from_upoly(UPoly([1, -2, 1]))
    w, rem = xpoly_divrem_monic(full, square)
    if not rem.is_zero():
        raise AssertionError("(X-1)^2 must divide the numerator")
    return w


def symbolic_quartic() -> XPoly:
    return XPoly([MPoly.var("d"), MPoly.var("c"), MPoly.var("b"), MPoly.var("a"), 1])


def printed_e() -> tuple[MPoly, ...]:
    return tuple(mpoly(s) for s in PRINTED_E)


def common_scale(computed, printed) -> Fraction | None:
    """The scalar ``s`` with ``computed == s * printed`` for all pairs, if any."""
    scale = None
    for comp, ref in zip(computed, printed):
        exp, coef = ref.leading()
        s = comp.terms.get(exp, Fraction(0)) / coef if comp.vars == ref.vars else Fraction(0)
        if s == 0 or comp != ref * s or (scale is not None and s != scale):
            return None
        scale = s
    return scale


@cache
def build_e_polynomials() -> ESystem:
    """Reduce ``W`` modulo the generic monic quartic; cached, immutable."""
    _, rem = xpoly_divrem_monic(build_numerator_W(), symbolic_quartic())
    coeffs = list(rem.coeffs) + [MPoly()] * (4 - len(rem.coeffs))
    e = tuple(coeffs)
    scale = common_scale(e, printed_e())
    if scale is None:
        raise AssertionError("computed remainder does not match the printed coefficients")
    return ESystem(e, scale)


def solve_linear(m: list[list[Fraction]], v: list[Fraction]) -> tuple[int, bool, list[Fraction] | None]:
    """Rank of ``m``, consistency of ``m x = v`` and the solution if unique."""
    rows = [list(r) + [b] for r, b in zip(m, v)]
    ncols = len(m[0])
    rank = 0
    pivots = []
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [x / lead for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    consistent = all(rows[i][-1] == 0 for i in range(rank, len(rows)))
    if consistent and rank == ncols:
        sol = [Fraction(0)] * ncols
        for i, col in enumerate(pivots):
            sol[col] = rows[i][-1]
        return rank, True, sol
    return rank, consistent, None


def check_precondition(coeffs: QuarticCoeffs) -> None:
    g = upoly_gcd(coeffs.poly(), D0)
    if g.degree > 0:
        raise PreconditionError(f"f shares the factor {g} with X^4 - 1; beta is undefined")


def decide_beta(coeffs: QuarticCoeffs) -> BetaVerdict:
    """Classify beta for the root(s) of ``x^4 + ax^3 + bx^2 + cx + d``.

    The specialized 4x2 system is solved exactly; irreducibility of ``f``
    is reported but not required.
    """
    check_precondition(coeffs)
    irreducible = is_irreducible(coeffs.poly())
    m, v = build_e_polynomials().specialize(coeffs)
    rank, consistent, sol = solve_linear(m, v)
    if not consistent:
        return BetaVerdict(Kind.NOT_QUADRATIC, irreducible, notes="linear system inconsistent")
    if rank == 0:
        return BetaVerdict(Kind.DEGENERATE, irreducible, notes="every (p, q) solves the system")
    if rank == 1:
        beta = _common_root_of_pencil(m, v)
        return BetaVerdict(
            Kind.RATIONAL_BETA, irreducible, beta=beta,
            notes="one-parameter family of solutions; beta is rational",
        )
    p, q = sol
    disc = p * p - 4 * q
    if is_square_rat(disc):
        return BetaVerdict(
            Kind.DEGENERATE, irreducible, p=p, q=q, disc=disc,
            notes="unique (p, q) but Y^2 + pY + q splits over Q",
        )
    return BetaVerdict(Kind.QUADRATIC, irreducible, p=p, q=q, disc=disc)


def _common_root_of_pencil(m, v) -> Fraction | None:
    # every Y^2 + pY + q in the solution line vanishes at beta, so the
    # direction (dp, dq) of the line satisfies dp*beta + dq = 0
    row = next(r for r in m if r[0] != 0 or r[1] != 0)
    dp, dq = -row[1], row[0]
    if dp == 0:
        return None
    return -dq / dp


def min_poly_beta(coeffs: QuarticCoeffs) -> UPoly:
    """Characteristic polynomial ``prod (Y - beta(alpha_i))`` via a resultant."""
    f = coeffs.poly()
    if resultant(f, D0, "X").constant_value() == 0:
        raise PreconditionError("f shares a root with X^4 - 1")
    y = MPoly.var("Y")
    g = XPoly([c - y * dc for c, dc in itertools.zip_longest(N0.coeffs, D0.coeffs, fillvalue=Fraction(0))])
    res = resultant(XPoly.from_upoly(f), g, "X")
    return res.to_upoly("Y").monic()


def square_root_quadratic(r: UPoly) -> tuple[Fraction, Fraction] | None:
    """``(p, q)`` with ``r == (Y^2 + pY + q)^2`` for monic quartic ``r``, else None."""
    if r.degree != 4 or r.lc != 1:
        return None
    p = r.coeffs[3] / 2
    q = (r.coeffs[2] - p * p) / 2
    g = UPoly([q, p, 1])
    return (p, q) if g * g == r else None


@dataclass(frozen=True)
class DSolution:
    """A value of ``d`` for given ``(a, b, c)``.

    ``status`` is ``"unique"`` when ``(p, q)`` is determined, ``"pencil"`` when
    the system is consistent with a line of solutions, and ``"pole"`` when
    the augmented matrix drops rank but the system is inconsistent: the
    point is a limit of solutions whose ``(p, q)`` escape to infinity.
    """

    d: Fraction
    p: Fraction | None = None
    q: Fraction | None = None
    status: str = "unique"


def augmented_minors(a: RatLike, b: RatLike, c: RatLike) -> list[UPoly]:
    """The four 3x3 minors of ``[M(d) | v(d)]`` as polynomials in ``d``."""
    values = {"a": as_rat(a), "b": as_rat(b), "c": as_rat(c)}
    rows = []
    for cp, cq, const in build_e_polynomials().linear_parts(values):
        rows.append([cp.to_upoly("d"), cq.to_upoly("d"), -const.to_upoly("d")])
    minors = []
    for pick in itertools.combinations(range(4), 3):
        r = [rows[i] for i in pick]
        det = (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )
        minors.append(det)
    return minors


def recover_d(a: RatLike, b: RatLike, c: RatLike, include_poles: bool = True) -> list[DSolution]:
    """Rational ``d`` for which the e-system at ``(a, b, c, d)`` is solvable.

    Consistency forces every 3x3 minor of the augmented matrix to vanish;
    candidates are the rational roots of their gcd.  Candidates where the
    system is inconsistent are kept as ``"pole"`` entries unless
    ``include_poles`` is false.  If every minor vanishes identically no finite
    candidate list exists and the result is empty.
    """
    minors = [m for m in augmented_minors(a, b, c) if not m.is_zero()]
    if not minors:
        return []
    g = minors[0]
    for m in minors[1:]:
        g = upoly_gcd(g, m)
    if g.degree < 1:
        return []
    es = build_e_polynomials()
    out = []
    for d in rational_roots(g):
        m, v = es.specialize(QuarticCoeffs.of(a, b, c, d))
        rank, consistent, sol = solve_linear(m, v)
        if sol is not None:
            out.append(DSolution(d, sol[0], sol[1]))
        elif consistent:
            out.append(DSolution(d, status="pencil"))
        elif include_poles:
            out.append(DSolution(d, status="pole"))
    return out
