"""The quartic surface F(a, b, c) = 0 and its rational parametrization.

Every quartic ``x^4 + ax^3 + bx^2 + cx + d`` with quadratic ``beta`` and
``c != 2b - a`` has ``(a, b, c)`` on this surface.  The module evaluates F,
checks its splitting at ``a = 2``, searches integer boxes for points,
evaluates the one-parameter family over ``Q(a)`` stored in ``data/`` and
analyses the sign of the discriminant of ``x^2 + px + q`` along it.
"""

from __future__ import annotations

import hashlib
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from importlib import resources

import numpy as np

from .algebra import (
    AlgebraError,
    MPoly,
    RatLike,
    UPoly,
    as_rat,
    discriminant,
    integer_roots_exact,
    mpoly,
    rat_str,
    sign,
)
from .core import DSolution, QuarticCoeffs, build_e_polynomials, recover_d

F_TEXT = (
    "233*a^4 - 352*a^3*b + 108*a^3*c + 168*a^3 + 368*a^2*b^2 - 264*a^2*b*c"
    " - 624*a^2*b + 46*a^2*c^2 - 184*a^2*c - 544*a^2 - 160*a*b^3 + 128*a*b^2*c"
    " + 352*a*b^2 - 16*a*b*c^2 + 64*a*b*c + 128*a*b - 4*a*c^3 - 8*a*c^2 + 768*a*c"
    " + 640*a + 48*b^4 - 64*b^3*c - 256*b^3 + 32*b^2*c^2 + 288*b^2*c + 384*b^2"
    " - 8*b*c^3 - 144*b*c^2 - 512*b*c + c^4 + 24*c^3 + 96*c^2 - 640*c - 256"
)
A2_FIRST = "12*b^2 - 4*b*c - 96*b + c^2 + 12*c + 196"
A2_SECOND = "4*b^2 - 4*b*c - 16*b + c^2 + 4*c + 20"

P1_TEXT = "(9*a^3 - 116*a^2 + 524*a - 800)*t^2 - 24*(a - 5)*(a - 4)^2*t + 18*(a - 4)^3"
P1_DISC_TEXT = "-72*(a - 4)^3*(a - 2)^2*a"

PARAM_FILE = "param_tables.txt"
PARAM_SHA256 = "81cfc4404a690171452606bb09fe1850cc1e2dbc0bd0ace244c074cd1591ae28"
# the printed q sums stop at a^8; the a^9 terms below complete them
Q_COMPLETION_FILE = "param_q_completion.txt"
Q_COMPLETION_SHA256 = "b1da7b2e57c206924c04233398c7204aae7a2c4ca8d320a405850a12881dfcab"
PARAM_NAMES = ("b", "c", "d", "p", "q")

SEARCH_CSV_HEADER = "a,b,c,d,p,q,family2_match"
REGION_CSV_HEADER = "a,t,sign"


@cache
def surface_F() -> MPoly:
    return mpoly(F_TEXT)


def F_eval(a: RatLike, b: RatLike, c: RatLike) -> Fraction:
    return surface_F().eval({"a": a, "b": b, "c": c})


def F_factor_a2_check(first: str = A2_FIRST, second: str = A2_SECOND) -> bool:
    """Whether ``F(2, b, c)`` equals the product of the two quadrics."""
    return surface_F().subs({"a": 2}) == mpoly(first) * mpoly(second)


# ---------------------------------------------------------------------------
# Integer points
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SurfaceSolution:
    a: int
    b: int
    c: int
    d_candidates: tuple[DSolution, ...]
    family2_match: bool

    def csv_rows(self, integral: bool = False) -> list[str]:
        cands = [s for s in self.d_candidates if not integral or s.d.denominator == 1]
        head = f"{self.a},{self.b},{self.c}"
        flag = "true" if self.family2_match else "false"
        if not cands:
            return [f"{head},-,-,-,{flag}"]
        rows = []
        for s in cands:
            p = "-" if s.p is None else rat_str(s.p)
            q = "-" if s.q is None else rat_str(s.q)
            rows.append(f"{head},{rat_str(s.d)},{p},{q},{flag}")
        return rows


@cache
def _c_coefficients() -> tuple[MPoly, ...]:
    """Coefficients of F as a monic quartic in ``c``, ascending."""
    return tuple(surface_F().collect("c"))


def _row_coefficients(a: int) -> list[list[int]]:
    """For fixed ``a``: integer coefficient lists (ascending in ``b``) of each ``c^k``."""
    out = []
    for coef in _c_coefficients():
        up = coef.subs({"a": a}).to_upoly("b") if coef.vars else UPoly([coef.constant_value()])
        out.append([int(v) for v in up.coeffs])
    return out


def _horner(coeffs: list[int], x: int) -> int:
    acc = 0
    for v in reversed(coeffs):
        acc = acc * x + v
    return acc


# eigenvalues closer than this (relative) to the real axis are treated as real
_IMAG_TOL = 1e-3
# numeric candidate windows wider than this trigger the exact fallback
_MAX_WINDOW = 8


def _numeric_candidates(eig: np.ndarray) -> list[int] | None:
    """Integer candidates near real eigenvalues, or None if estimates are ambiguous."""
    cands: set[int] = set()
    for z in eig:
        if not np.isfinite(z):
            return None
        scale = 1.0 + abs(z)
        if abs(z.imag) > _IMAG_TOL * scale:
            continue
        radius = 1.0 + abs(z.imag) + 1e-6 * scale
        if radius > _MAX_WINDOW:
            return None
        cands.update(range(math.floor(z.real - radius), math.ceil(z.real + radius) + 1))
    return sorted(cands)


def _integer_c_roots(coeffs: list[int], eig: np.ndarray | None) -> list[int]:
    """Distinct integer roots of the monic quartic ``coeffs`` (ascending)."""
    cands = None if eig is None else _numeric_candidates(eig)
    if cands is None:
        return integer_roots_exact(UPoly(coeffs))
    return [c for c in cands if _horner(coeffs, c) == 0]


def _family2_match(a: int, b: int, c: int, cands: tuple[DSolution, ...]) -> bool:
    if a % 2:
        return False
    t = a // 2
    return (
        b == t * t + 2 * t + 2
        and c == 2 * t * t + 2 * t
        and bool(cands)
        and cands[0].d == 3 * t * t - 2 * t + 1
    )


def _solve_row(args: tuple[int, int, int, bool]) -> list[SurfaceSolution]:
    a, b_min, b_max, exact = args
    poly_rows = _row_coefficients(a)
    bs = list(range(b_min, b_max + 1))
    quartics = [[_horner(pr, b) for pr in poly_rows] for b in bs]
    eigs: list[np.ndarray | None] = [None] * len(bs)
    if not exact:
        numeric = [i for i, q in enumerate(quartics) if max(abs(v) for v in q) < 2**52]
        if numeric:
            comp = np.zeros((len(numeric), 4, 4))
            comp[:, 1, 0] = comp[:, 2, 1] = comp[:, 3, 2] = 1.0
            comp[:, :, 3] = -np.array([quartics[i][:4] for i in numeric], dtype=float)
            for i, ev in zip(numeric, np.linalg.eigvals(comp)):
                eigs[i] = ev
    out = []
    for b, q, ev in zip(bs, quartics, eigs):
        if exact:
            roots = integer_roots_exact(UPoly(q))
        else:
            roots = _integer_c_roots(q, ev)
        for c in roots:
            cands = tuple(recover_d(a, b, c))
            out.append(SurfaceSolution(a, b, c, cands, _family2_match(a, b, c, cands)))
    return out


def search_box(
    a_min: int, a_max: int, b_min: int, b_max: int, threads: int = 1, exact: bool = False
) -> list[SurfaceSolution]:
    """All integer ``(a, b, c)`` on F with ``a, b`` in the box; ``c`` is unbounded.

    Roots in ``c`` are estimated from companion-matrix eigenvalues and each
    nearby integer is confirmed exactly; ambiguous estimates fall back to
    exact Sturm bisection.  ``exact=True`` uses bisection throughout.
    """
    if a_min > a_max or b_min > b_max:
        raise AlgebraError("empty search box")
    if threads < 1:
        raise AlgebraError("threads must be positive")
    jobs = [(a, b_min, b_max, exact) for a in range(a_min, a_max + 1)]
    if threads == 1:
        rows = [_solve_row(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_solve_row, jobs, chunksize=max(1, len(jobs) // (4 * threads))))
    found = [s for row in rows for s in row]
    return sorted(found, key=lambda s: (s.a, s.b, s.c))


def default_threads() -> int:
    return os.cpu_count() or 1


def search_csv(solutions: list[SurfaceSolution], integral: bool = False) -> str:
    lines = [SEARCH_CSV_HEADER]
    for s in solutions:
        lines.extend(s.csv_rows(integral))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Parametrization over Q(a)
# ---------------------------------------------------------------------------


def _read_table(name: str, digest: str) -> dict[str, dict[int, MPoly]]:
    raw = resources.files("quadbeta").joinpath("data", name).read_bytes()
    if hashlib.sha256(raw).hexdigest() != digest:
        raise AlgebraError(f"checksum mismatch for {name}")
    tables: dict[str, dict[int, MPoly]] = {}
    for line in raw.decode().splitlines():
        if not line.strip():
            continue
        key, idx, text = line.split(" ", 2)
        tables.setdefault(key, {})[int(idx)] = mpoly(text)
    return tables


@cache
def param_tables(complete: bool = True) -> dict[str, dict[int, MPoly]]:
    """Coefficient tables ``{"bn": {i: poly in t}, ...}`` for the five functions.

    With ``complete`` the ``a^9`` terms of ``q`` are added; without them the
    printed ``q`` does not satisfy the e-system.
    """
    tables = _read_table(PARAM_FILE, PARAM_SHA256)
    if complete:
        for key, rows in _read_table(Q_COMPLETION_FILE, Q_COMPLETION_SHA256).items():
            tables[key].update(rows)
    return tables


@dataclass(frozen=True)
class ParamEval:
    a: Fraction
    t: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    p: Fraction
    q: Fraction

    @property
    def coeffs(self) -> QuarticCoeffs:
        return QuarticCoeffs(self.a, self.b, self.c, self.d)

    def to_json(self) -> dict:
        return {k: rat_str(getattr(self, k)) for k in ("a", "t", "b", "c", "d", "p", "q")}


def _table_value(rows: dict[int, MPoly], a: Fraction, t: Fraction) -> Fraction:
    return sum((poly.eval({"t": t}) if poly.vars else poly.constant_value()) * a**i
               for i, poly in rows.items())


def param_eval(a: RatLike, t: RatLike, complete: bool = True) -> ParamEval:
    a, t = as_rat(a), as_rat(t)
    tables = param_tables(complete)
    vals = {}
    for name in PARAM_NAMES:
        den = _table_value(tables[name + "d"], a, t)
        if den == 0:
            raise AlgebraError(f"denominator of {name} vanishes at a={rat_str(a)}, t={rat_str(t)}")
        vals[name] = _table_value(tables[name + "n"], a, t) / den
    return ParamEval(a, t, **vals)


@cache
def P1() -> MPoly:
    return mpoly(P1_TEXT)


def P1_disc_check() -> bool:
    """``Disc_t(P1)`` against the printed factorization."""
    return discriminant(P1(), "t") == mpoly(P1_DISC_TEXT)


@cache
def P1_reversed() -> MPoly:
    """``t^2 P1(a, 1/t)``: the sign factor of ``p^2 - 4q`` in the tables' own parameter."""
    parts = P1().collect("t")
    t = MPoly.var("t")
    return sum((c * t ** (2 - k) for k, c in enumerate(parts)), MPoly.const(0))


@dataclass(frozen=True)
class DiscSignReport:
    """Signs of ``p^2 - 4q`` and of the two candidate region functions at one point.

    ``region_value`` is ``-a P1(a, t)``; ``reversed_value`` is ``-a t^2 P1(a, 1/t)``.
    An ``agrees`` flag is true when the signs match or either side vanishes.
    """

    a: Fraction
    t: Fraction
    disc: Fraction
    region_value: Fraction
    reversed_value: Fraction

    @staticmethod
    def _match(x: Fraction, y: Fraction) -> bool:
        return x == 0 or y == 0 or sign(x) == sign(y)

    @property
    def agrees(self) -> bool:
        return self._match(self.disc, self.region_value)

    @property
    def agrees_reversed(self) -> bool:
        return self._match(self.disc, self.reversed_value)


def disc_sign_check(a: RatLike, t: RatLike) -> DiscSignReport:
    """Evaluate ``p^2 - 4q`` and both region functions on the parametrization."""
    a, t = as_rat(a), as_rat(t)
    if a == 0:
        raise AlgebraError("a must be nonzero")
    pe = param_eval(a, t)
    disc = pe.p * pe.p - 4 * pe.q
    env = {"a": a, "t": t}
    return DiscSignReport(a, t, disc, -a * P1().eval(env), -a * P1_reversed().eval(env))


def _frange(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    n = math.floor((hi - lo) / step)
    return [lo + k * step for k in range(n + 1)]


def region_grid(
    step: RatLike,
    a_range: tuple[RatLike, RatLike] = (0, 10),
    t_range: tuple[RatLike, RatLike] = (-10, 10),
) -> list[tuple[Fraction, Fraction, int]]:
    """Exact sign of ``-a P1(a, t)`` on a lattice, rows ordered by ``a`` then ``t``."""
    step = as_rat(step)
    if step <= 0:
        raise AlgebraError("step must be positive")
    coeffs = [c.to_upoly("a") if c.vars else UPoly([c.constant_value()]) for c in P1().collect("t")]
    a_vals = _frange(as_rat(a_range[0]), as_rat(a_range[1]), step)
    t_vals = _frange(as_rat(t_range[0]), as_rat(t_range[1]), step)
    out = []
    for a in a_vals:
        ct = UPoly([-a * c(a) for c in coeffs])
        out.extend((a, t, sign(ct(t))) for t in t_vals)
    return out


def region_csv(grid: list[tuple[Fraction, Fraction, int]]) -> str:
    lines = [REGION_CSV_HEADER] + [f"{rat_str(a)},{rat_str(t)},{s}" for a, t, s in grid]
    return "\n".join(lines) + "\n"


CELL = 4
FILL = "#4a7ab5"


def region_svg(grid: list[tuple[Fraction, Fraction, int]]) -> str:
    """One square per lattice point, shaded where the sign is positive.

    ``a`` runs left to right and ``t`` bottom to top.
    """
    a_vals = sorted({a for a, _, _ in grid})
    t_vals = sorted({t for _, t, _ in grid})
    col = {a: i for i, a in enumerate(a_vals)}
    row = {t: len(t_vals) - 1 - i for i, t in enumerate(t_vals)}
    width, height = CELL * len(a_vals), CELL * len(t_vals)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" shape-rendering="crispEdges">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for a, t, s in grid:
        if s > 0:
            parts.append(
                f'<rect x="{col[a] * CELL}" y="{row[t] * CELL}" width="{CELL}" height="{CELL}" fill="{FILL}"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def param_residuals(pe: ParamEval) -> tuple[Fraction, list[Fraction]]:
    """``F(a, b, c)`` and the four e-values at a parametrization point."""
    return F_eval(pe.a, pe.b, pe.c), build_e_polynomials().residuals(pe.coeffs, pe.p, pe.q)
