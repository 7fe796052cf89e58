"""Elliptic curves y^2 = x^3 + a2 x^2 + a4 x + a6 over Q: group law and torsion.

Also hosts the checks tying the genus-two curve
``C: U^2 = -8(s^2 - 2s + 2)(s^4 - 4s^3 + 2s^2 + 4s - 4)`` to
``E: U^2 = X^3 + 6X^2 - 20X + 8`` through ``(s, U) -> (-2(s - 1)^2, U)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AlgebraError,
    RatLike,
    UPoly,
    as_rat,
    divisors,
    is_square_rat,
    mpoly,
    rat_str,
    rational_roots,
    upoly_discriminant,
)

MAZUR_BOUND = 12


@dataclass(frozen=True)
class ECPoint:
    """An affine point, or the point at infinity when ``x`` and ``y`` are None."""

    x: Fraction | None = None
    y: Fraction | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        return "O" if self.is_infinity else f"({rat_str(self.x)},{rat_str(self.y)})"


INFINITY = ECPoint()


def point(x: RatLike, y: RatLike) -> ECPoint:
    return ECPoint(as_rat(x), as_rat(y))


@dataclass(frozen=True)
class EllipticCurve:
    a2: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a2", "a4", "a6"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))
        if self.disc_cubic == 0:
            raise AlgebraError("right-hand side is not squarefree")

    @property
    def cubic(self) -> UPoly:
        return UPoly([self.a6, self.a4, self.a2, 1])

    @property
    def disc_cubic(self) -> Fraction:
        return upoly_discriminant(self.cubic)

    def contains(self, P: ECPoint) -> bool:
        return P.is_infinity or P.y * P.y == self.cubic(P.x)

    def __str__(self) -> str:
        return f"y^2 = {self.cubic.to_str('x')}"


E_CURVE = EllipticCurve(6, -20, 8)
C_RIGHT_SIDE = "-8*(s1^2 - 2*s1 + 2)*(s1^4 - 4*s1^3 + 2*s1^2 + 4*s1 - 4)"
PHI_X = "-2*(s1 - 1)^2"


def _check(E: EllipticCurve, P: ECPoint) -> None:
    if not E.contains(P):
        raise AlgebraError(f"{P} is not on {E}")


def ec_neg(E: EllipticCurve, P: ECPoint) -> ECPoint:
    _check(E, P)
    return P if P.is_infinity else ECPoint(P.x, -P.y)


def ec_add(E: EllipticCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    """Chord-and-tangent addition."""
    _check(E, P)
    _check(E, Q)
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x and P.y == -Q.y:
        return INFINITY
    if P == Q:
        slope = (3 * P.x**2 + 2 * E.a2 * P.x + E.a4) / (2 * P.y)
    else:
        slope = (Q.y - P.y) / (Q.x - P.x)
    x3 = slope * slope - E.a2 - P.x - Q.x
    y3 = slope * (P.x - x3) - P.y
    return ECPoint(x3, y3)


def ec_mul(E: EllipticCurve, n: int, P: ECPoint) -> ECPoint:
    """``n * P`` by double-and-add; negative ``n`` multiplies ``-P``."""
    _check(E, P)
    if n < 0:
        return ec_mul(E, -n, ec_neg(E, P))
    acc, base = INFINITY, P
    while n:
        if n & 1:
            acc = ec_add(E, acc, base)
        base = ec_add(E, base, base)
        n >>= 1
    return acc


def point_order(E: EllipticCurve, P: ECPoint, bound: int = MAZUR_BOUND) -> int | None:
    """Order of ``P`` if it is at most ``bound``, else None."""
    acc = P
    for n in range(1, bound + 1):
        if acc.is_infinity:
            return n
        acc = ec_add(E, acc, P)
    return None


def _require_integral(E: EllipticCurve) -> None:
    if any(v.denominator != 1 for v in (E.a2, E.a4, E.a6)):
        raise AlgebraError("torsion search needs an integral model")


def torsion_points(E: EllipticCurve) -> list[ECPoint]:
    """Rational torsion by Nagell-Lutz: ``y = 0`` or ``y^2`` divides the discriminant.

    Candidates are kept only if their order is at most the Mazur bound.
    Output is sorted with infinity first.
    """
    _require_integral(E)
    disc = abs(int(E.disc_cubic))
    ys = [0] + [y for y in divisors(disc) if disc % (y * y) == 0]
    found = {INFINITY}
    for y in ys:
        for x in rational_roots(E.cubic - y * y):
            if x.denominator != 1:
                continue
            for yy in {y, -y}:
                P = point(x, yy)
                if point_order(E, P) is not None:
                    found.add(P)
    return sorted(found, key=lambda P: (not P.is_infinity, P.x or 0, P.y or 0))


def count_points_mod(E: EllipticCurve, p: int) -> int:
    """``#E(F_p)`` by direct counting, including the point at infinity."""
    coeffs = [int(v) % p for v in (E.a6, E.a4, E.a2)]
    squares = [0] * p
    for y in range(p):
        squares[y * y % p] += 1
    total = 1
    for x in range(p):
        total += squares[(x * x * x + coeffs[2] * x * x + coeffs[1] * x + coeffs[0]) % p]
    return total


def good_primes(E: EllipticCurve, count: int = 3) -> list[int]:
    """The smallest odd primes not dividing the discriminant."""
    _require_integral(E)
    disc = int(E.disc_cubic)
    out, n = [], 3
    while len(out) < count:
        if all(n % k for k in range(2, math.isqrt(n) + 1)) and disc % n:
            out.append(n)
        n += 2
    return out


@dataclass(frozen=True)
class TorsionReport:
    curve: EllipticCurve
    points: tuple[ECPoint, ...]
    orders: tuple[int, ...]
    point_counts: dict[int, int]

    @property
    def order(self) -> int:
        return len(self.points)

    @property
    def divides_counts(self) -> bool:
        return all(n % self.order == 0 for n in self.point_counts.values())

    def to_json(self) -> dict:
        return {
            "curve": str(self.curve),
            "points": [str(P) for P in self.points],
            "orders": list(self.orders),
            "group_order": self.order,
            "point_counts": {str(p): n for p, n in self.point_counts.items()},
            "divides_counts": self.divides_counts,
            "rank": "not computed; rank 0 is taken as an external fact",
        }


def torsion_report(E: EllipticCurve = E_CURVE) -> TorsionReport:
    pts = torsion_points(E)
    orders = tuple(point_order(E, P) for P in pts)
    counts = {p: count_points_mod(E, p) for p in good_primes(E)}
    return TorsionReport(E, tuple(pts), orders, counts)


def phi_map_check(a2: RatLike = 6, a4: RatLike = -20, a6: RatLike = 8) -> bool:
    """The cubic of ``E`` at ``X = -2(s1 - 1)^2`` equals the right side of ``C``."""
    X = mpoly(PHI_X)
    cubic = X**3 + as_rat(a2) * X**2 + as_rat(a4) * X + as_rat(a6)
    return cubic == mpoly(C_RIGHT_SIDE)


STATED_C_POINTS = ((0, 4), (0, -4), (2, 4), (2, -4))


@dataclass(frozen=True)
class CPointsReport:
    values: dict[int, Fraction]
    points: tuple[tuple[int, Fraction], ...]
    images: tuple[ECPoint, ...]
    images_are_torsion: bool
    t_values: dict[int, list[Fraction]]
    stated_points_on_curve: bool

    @property
    def holds(self) -> bool:
        return (
            all(is_square_rat(v) for v in self.values.values())
            and self.images_are_torsion
            and all(ts == [0] for ts in self.t_values.values())
        )

    def to_json(self) -> dict:
        return {
            "values": {str(s): rat_str(v) for s, v in self.values.items()},
            "points": [f"({s},{rat_str(u)})" for s, u in self.points],
            "images": [str(P) for P in self.images],
            "images_are_torsion": self.images_are_torsion,
            "t_values": {str(s): [rat_str(t) for t in ts] for s, ts in self.t_values.items()},
            "stated_points_on_curve": self.stated_points_on_curve,
        }


def c_points_check() -> CPointsReport:
    """Rational points of ``C`` above the torsion of ``E`` and the resulting ``t``."""
    rhs = mpoly(C_RIGHT_SIDE)
    phi_x = mpoly(PHI_X)
    torsion = set(torsion_points(E_CURVE))
    sextic_factor = mpoly(
        "s1^4 + 2*s1^2*t^2 - 4*s1^3 + 4*s1^2*t - 4*s1*t^2 + 6*s1^2 - 8*s1*t - 4*s1 + 8*t"
    )
    values, pts, images, t_values = {}, [], [], {}
    for s in (0, 2):
        v = rhs.eval({"s1": s})
        values[s] = v
        if not is_square_rat(v):
            continue
        root = Fraction(math.isqrt(v.numerator), math.isqrt(v.denominator))
        for u in (root, -root):
            pts.append((s, u))
            images.append(point(phi_x.eval({"s1": s}), u))
        t_values[s] = rational_roots(sextic_factor.subs({"s1": s}).to_upoly("t"))
    stated_ok = all(rhs.eval({"s1": s}) == u * u for s, u in STATED_C_POINTS)
    return CPointsReport(
        values, tuple(pts), tuple(images), all(P in torsion for P in images), t_values, stated_ok
    )
