"""Complete factorization over Q of polynomials of degree at most four."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    DIVISOR_LIMIT,
    AlgebraError,
    UPoly,
    divisors,
    is_square_rat,
    rational_roots,
    upoly_divrem,
)


@dataclass(frozen=True)
class Factorization:
    content: Fraction
    factors: tuple[tuple[UPoly, int], ...]

    def expand(self) -> UPoly:
        out = UPoly([self.content])
        for f, k in self.factors:
            out = out * f ** k
        return out

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def __str__(self) -> str:
        parts = [] if self.content == 1 else [str(self.content)]
        for f, k in self.factors:
            base = f"({f})"
            parts.append(base if k == 1 else f"{base}^{k}")
        return "*".join(parts) or "1"


def _quadratic_pair(coeffs: list[int]) -> tuple[UPoly, UPoly] | None:
    """Split a monic integral quartic with nonzero constant into two quadratics.

    ``coeffs`` is ``[D, C, B, A, 1]``.  Solves
    ``(x^2+ux+v)(x^2+wx+z)`` coefficientwise over all signed divisor pairs.
    """
    D, C, B, A, _ = coeffs
    for v in divisors(D):
        for v_signed in (v, -v):
            z = D // v_signed
            disc = A * A - 4 * (B - v_signed - z)
            if disc < 0:
                continue
            s = math.isqrt(disc)
            if s * s != disc or (A + s) % 2:
                continue
            for u, w in (((A + s) // 2, (A - s) // 2), ((A - s) // 2, (A + s) // 2)):
                if u * z + v_signed * w == C:
                    return UPoly([v_signed, u, 1]), UPoly([z, w, 1])
    return None


def _resolvent_pair(coeffs: list[Fraction]) -> tuple[UPoly, UPoly] | None:
    """Quadratic splitting via rational roots of the resolvent cubic.

    ``coeffs`` is ``[D, C, B, A, 1]``.  A splitting ``(x^2+ux+v)(x^2+wx+z)``
    makes ``y = v + z`` a rational root of
    ``y^3 - B y^2 + (AC - 4D) y - (A^2 D - 4BD + C^2)``; ``v, z`` and ``u, w``
    are then roots of quadratics with rational square discriminants.
    """
    D, C, B, A, _ = coeffs
    cubic = UPoly([-(A * A * D - 4 * B * D + C * C), A * C - 4 * D, -B, 1])
    for y in rational_roots(cubic):
        d_vz, d_uw = y * y - 4 * D, A * A - 4 * (B - y)
        if not (is_square_rat(d_vz) and is_square_rat(d_uw)):
            continue
        r_vz, r_uw = _sqrt_rat(d_vz), _sqrt_rat(d_uw)
        v, z = (y + r_vz) / 2, (y - r_vz) / 2
        for u, w in (((A + r_uw) / 2, (A - r_uw) / 2), ((A - r_uw) / 2, (A + r_uw) / 2)):
            if u * z + v * w == C:
                return UPoly([v, u, 1]), UPoly([z, w, 1])
    return None


def _sqrt_rat(r: Fraction) -> Fraction:
    return Fraction(math.isqrt(r.numerator), math.isqrt(r.denominator))


def _split_quartic(monic: UPoly, method: str = "auto") -> tuple[UPoly, UPoly] | None:
    """Quadratic splitting of a monic rational quartic without rational roots.

    ``method`` is ``"divisors"``, ``"resolvent"`` or ``"auto"`` (divisor
    pairs unless the scaled constant term is too large to factor).
    """
    _, ints = monic.primitive_int()
    lead = ints[-1]
    # y = lead * x turns lead^3 * P(y / lead) into a monic integral quartic
    scaled = [ints[k] * lead ** (3 - k) if k < 4 else 1 for k in range(5)]
    if method == "auto":
        method = "divisors" if abs(scaled[0]) <= DIVISOR_LIMIT else "resolvent"
    if method == "divisors":
        pair = _quadratic_pair(scaled)
    else:
        pair = _resolvent_pair([Fraction(v) for v in scaled])
    if pair is None:
        return None
    back = []
    for q in pair:
        v, u, _ = q.coeffs
        back.append(UPoly([v / (lead * lead), u / lead, 1]))
    return back[0], back[1]


def factor_quartic(p: UPoly, method: str = "auto") -> Factorization:
    """Irreducible factorization over Q; factors monic, content in front."""
    if p.degree < 1 or p.degree > 4:
        raise AlgebraError(f"factor_quartic needs degree 1..4, got {p.degree}")
    content = p.lc
    rest = p.monic()
    found: dict[tuple, list] = {}

    def add(f: UPoly, k: int = 1) -> None:
        key = f.coeffs
        if key in found:
            found[key][1] += k
        else:
            found[key] = [f, k]

    for r in rational_roots(rest):
        lin = UPoly([-r, 1])
        while True:
            q, rem = upoly_divrem(rest, lin)
            if rem:
                break
            rest = q
            add(lin)
    if rest.degree == 4:
        pair = _split_quartic(rest, method)
        if pair is None:
            add(rest)
        else:
            add(pair[0])
            add(pair[1])
    elif rest.degree >= 2:
        # no rational roots left, so degree 2 or 3 is irreducible
        add(rest)
    factors = sorted(((f, k) for f, k in found.values()), key=lambda fk: (fk[0].degree, fk[0].coeffs))
    return Factorization(content, tuple((f, k) for f, k in factors))


def is_irreducible(p: UPoly) -> bool:
    return factor_quartic(p).is_irreducible


def quadratic_is_irreducible(p: UPoly) -> bool:
    """True for a degree-2 polynomial whose discriminant is not a rational square."""
    c, b, a = p.coeffs
    return not is_square_rat(b * b - 4 * a * c)
