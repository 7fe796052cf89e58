"""Exact rational polynomial algebra.

Coefficients are :class:`fractions.Fraction` throughout.  Three polynomial
carriers are provided:

* :class:`UPoly` -- dense univariate polynomial, ascending coefficients.
* :class:`MPoly` -- sparse multivariate polynomial keyed by exponent vectors.
* :class:`XPoly` -- univariate polynomial in a distinguished variable whose
  coefficients are :class:`MPoly`; this is what resultants and symbolic
  division operate on.

All values are immutable after construction.
"""

from __future__ import annotations

import ast
import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence, Union

Rat = Fraction
RatLike = Union[int, Fraction, str]

# Fixed global variable order used for canonical printing.
VAR_ORDER = (
    "d", "p", "q", "a", "b", "c", "t", "u", "v", "s",
    "s1", "s2", "s3", "s4", "m", "X", "Y", "U", "x", "y",
)
_RANK = {name: i for i, name in enumerate(VAR_ORDER)}


class AlgebraError(ValueError):
    """Raised for invalid algebraic operations (zero divisor, bad input)."""


def _var_key(name: str):
    return (0, _RANK[name], "") if name in _RANK else (1, 0, name)


def sort_vars(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=_var_key))


def as_rat(value: RatLike) -> Fraction:
    """Coerce an int, Fraction or ``"n/d"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise AlgebraError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        if not _is_int_literal(num) or (sep and not den.strip().isdigit()):
            raise AlgebraError(f"malformed rational: {value!r}")
        if sep and int(den) == 0:
            raise AlgebraError(f"zero denominator: {value!r}")
        return Fraction(int(num), int(den) if sep else 1)
    raise AlgebraError(f"not a rational: {value!r}")


def _is_int_literal(text: str) -> bool:
    text = text.strip()
    if text[:1] in "+-":
        text = text[1:]
    return text.isdigit()


def rat_str(r: Fraction) -> str:
    """Canonical text: ``"n"`` for integers, ``"n/d"`` otherwise."""
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def divisors(n: int) -> list[int]:
    """Positive divisors of ``|n|`` in increasing order (``n != 0``)."""
    n = abs(n)
    if n == 0:
        raise AlgebraError("divisors of 0 are unbounded")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def is_square_rat(r: Fraction) -> bool:
    r = Fraction(r)
    if r < 0:
        return False
    n, d = r.numerator, r.denominator
    return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d


def sign(r) -> int:
    return (r > 0) - (r < 0)


# ---------------------------------------------------------------------------
# Univariate polynomials
# ---------------------------------------------------------------------------


class UPoly:
    """Dense univariate polynomial over Q, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> UPoly:
        return cls([0, 1])

    @classmethod
    def const(cls, c: RatLike) -> UPoly:
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UPoly([other])
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UPoly({self.to_str()!r})"

    def to_str(self, var: str = "x") -> str:
        return str(MPoly.from_upoly(self, var))

    __str__ = to_str

    @staticmethod
    def _coerce(other) -> UPoly:
        if isinstance(other, UPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> UPoly:
        return UPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UPoly:
        if n < 0:
            raise AlgebraError("negative power")
        result, base = UPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, (UPoly, MPoly)) else x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other: UPoly):
        return upoly_divrem(self, other)

    def __floordiv__(self, other: UPoly) -> UPoly:
        return upoly_divrem(self, other)[0]

    def __mod__(self, other: UPoly) -> UPoly:
        return upoly_divrem(self, other)[1]

    def derivative(self) -> UPoly:
        return UPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> UPoly:
        if not self.coeffs:
            raise AlgebraError("zero polynomial has no monic form")
        return UPoly(c / self.lc for c in self.coeffs)

    def primitive_int(self) -> tuple[Fraction, list[int]]:
        """Return ``(content, ints)`` with ``self == content * ints``.

        ``ints`` is primitive with a positive leading coefficient.
        """
        if not self.coeffs:
            raise AlgebraError("zero polynomial has no primitive form")
        den = reduce(math.lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(math.gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        ints = [v // g for v in ints]
        return Fraction(g, den), ints

    def compose(self, inner: UPoly) -> UPoly:
        acc = UPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc


def upoly_divrem(dividend: UPoly, divisor: UPoly) -> tuple[UPoly, UPoly]:
    """Exact Euclidean division over Q."""
    if divisor.is_zero():
        raise AlgebraError("division by the zero polynomial")
    rem = list(dividend.coeffs)
    dn = divisor.degree
    if len(rem) - 1 < dn:
        return UPoly(), dividend
    quot = [Fraction(0)] * (len(rem) - dn)
    lc = divisor.lc
    for k in range(len(rem) - 1 - dn, -1, -1):
        coef = rem[k + dn] / lc
        quot[k] = coef
        if coef:
            for j, dc in enumerate(divisor.coeffs):
                rem[k + j] -= coef * dc
    return UPoly(quot), UPoly(rem[:dn])


def upoly_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd (zero if both inputs are zero)."""
    while g:
        f, g = g, f % g
    return f.monic() if f else f


# divisor enumeration by trial division is used below this size
DIVISOR_LIMIT = 10**9


def rational_roots(p: UPoly) -> list[Fraction]:
    """All distinct rational roots of ``p``, sorted ascending.

    Small inputs enumerate candidates ``n/d`` from the divisor lattice of the
    primitive integer form (``n | a_0``, ``d | a_n``).  When either end
    coefficient is too large to factor by trial division, the integer roots
    of the monic scaling ``A^(n-1) P(y/A)`` are isolated by Sturm bisection
    instead.  Every root is confirmed by exact evaluation.
    """
    if p.is_zero():
        raise AlgebraError("the zero polynomial has every number as a root")
    _, ints = p.primitive_int()
    roots = []
    k = 0
    while ints[k] == 0:
        k += 1
    if k:
        roots.append(Fraction(0))
        ints = ints[k:]
    if len(ints) == 1:
        return roots
    if abs(ints[0]) <= DIVISOR_LIMIT and abs(ints[-1]) <= DIVISOR_LIMIT:
        roots.extend(_roots_by_divisors(ints))
    else:
        roots.extend(_roots_by_scaling(ints))
    return sorted(set(roots))


def _roots_by_divisors(ints: list[int]) -> list[Fraction]:
    reduced = UPoly(ints)
    found = []
    for num in divisors(ints[0]):
        for den in divisors(ints[-1]):
            if math.gcd(num, den) != 1:
                continue
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if reduced(cand) == 0:
                    found.append(cand)
    return found


def _roots_by_scaling(ints: list[int]) -> list[Fraction]:
    n = len(ints) - 1
    lead = ints[-1]
    monic = UPoly([c * lead ** (n - 1 - i) if i < n else 1 for i, c in enumerate(ints)])
    reduced = UPoly(ints)
    found = []
    for y in integer_roots_exact(monic):
        r = Fraction(y, lead)
        if reduced(r) == 0:
            found.append(r)
    return found


def squarefree_part(p: UPoly) -> UPoly:
    g = upoly_gcd(p, p.derivative())
    return (p // g).monic() if g.degree > 0 else p.monic()


def sturm_sequence(p: UPoly) -> list[UPoly]:
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _positive_int_coeffs(p: UPoly) -> list[int]:
    """Coefficients of ``k * p`` for some rational ``k > 0``, as integers."""
    den = math.lcm(*(c.denominator for c in p.coeffs))
    return [int(c * den) for c in p.coeffs]


def _int_sign_changes(seq: Sequence[list[int]], x: int) -> int:
    last, changes = 0, 0
    for coeffs in seq:
        acc = 0
        for c in reversed(coeffs):
            acc = acc * x + c
        s = (acc > 0) - (acc < 0)
        if s:
            if last and s != last:
                changes += 1
            last = s
    return changes


def cauchy_bound(p: UPoly) -> int:
    """Integer ``B`` with every real root in ``[-B, B]``."""
    lc = abs(p.lc)
    return 1 + math.ceil(max((abs(c) / lc for c in p.coeffs[:-1]), default=0))


def integer_roots_exact(p: UPoly) -> list[int]:
    """Distinct integer roots by Sturm-sequence bisection over integer cells.

    Purely exact; used as the authoritative fallback for numeric root
    estimation.  Cells are half-open ``(lo, hi]`` with integer endpoints.
    """
    if p.degree < 1:
        raise AlgebraError("need a polynomial of positive degree")
    sq = squarefree_part(p)
    seq = [_positive_int_coeffs(q) for q in sturm_sequence(sq)]
    bound = cauchy_bound(sq)
    found = []
    stack = [(-bound - 1, bound)]
    while stack:
        lo, hi = stack.pop()
        if _int_sign_changes(seq, lo) - _int_sign_changes(seq, hi) == 0:
            continue
        if hi - lo == 1:
            if sq(Fraction(hi)) == 0:
                found.append(hi)
            continue
        mid = (lo + hi) // 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(found)


# ---------------------------------------------------------------------------
# Multivariate polynomials
# ---------------------------------------------------------------------------

Exponent = tuple[int, ...]


class MPoly:
    """Sparse multivariate polynomial over Q.

    ``vars`` holds exactly the variables that occur, in the global order, so
    structurally equal polynomials compare equal regardless of history.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str] = (), terms: Mapping[Exponent, RatLike] | None = None):
        vars = tuple(vars)
        clean: dict[Exponent, Fraction] = {}
        for exp, coef in (terms or {}).items():
            if len(exp) != len(vars):
                raise AlgebraError("exponent vector length does not match arity")
            coef = as_rat(coef)
            if coef:
                clean[tuple(exp)] = clean.get(tuple(exp), Fraction(0)) + coef
                if not clean[tuple(exp)]:
                    del clean[tuple(exp)]
        used = [i for i, _ in enumerate(vars) if any(e[i] for e in clean)]
        canon = sort_vars(vars[i] for i in used)
        if canon != vars:
            pos = [vars.index(v) for v in canon]
            clean = {tuple(e[i] for i in pos): c for e, c in clean.items()}
        self.vars: tuple[str, ...] = canon
        self.terms: dict[Exponent, Fraction] = clean

    # construction -------------------------------------------------------

    @classmethod
    def const(cls, c: RatLike) -> MPoly:
        return cls((), {(): c})

    @classmethod
    def var(cls, name: str) -> MPoly:
        return cls((name,), {(1,): 1})

    @classmethod
    def from_upoly(cls, p: UPoly, var: str) -> MPoly:
        return cls((var,), {(i,): c for i, c in enumerate(p.coeffs)})

    @classmethod
    def parse(cls, text: str) -> MPoly:
        """Parse ``"233*a^4 - 352*a^3*b + 1/2*c"`` style text (``^`` or ``**``)."""
        try:
            tree = ast.parse(text.replace("^", "**"), mode="eval")
        except SyntaxError as exc:
            raise AlgebraError(f"cannot parse polynomial {text!r}") from exc
        return _eval_ast(tree.body)

    # basic queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self) -> Fraction:
        if self.vars:
            raise AlgebraError(f"not a constant: {self}")
        return self.terms.get((), Fraction(0))

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree if ``None``); -1 for zero."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def leading(self) -> tuple[Exponent, Fraction]:
        """Lex-leading term in the global variable order."""
        exp = max(self.terms)
        return exp, self.terms[exp]

    # arithmetic ------------------------------------------------------------

    def _embed(self, target: tuple[str, ...]) -> dict[Exponent, Fraction]:
        if target == self.vars:
            return self.terms
        pos = [self.vars.index(v) if v in self.vars else -1 for v in target]
        return {tuple(e[i] if i >= 0 else 0 for i in pos): c for e, c in self.terms.items()}

    @staticmethod
    def _coerce(other) -> MPoly:
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        target = sort_vars(self.vars + other.vars)
        out = dict(self._embed(target))
        for e, c in other._embed(target).items():
            out[e] = out.get(e, Fraction(0)) + c
        return MPoly(target, out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        target = sort_vars(self.vars + other.vars)
        a, b = self._embed(target), other._embed(target)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MPoly(target, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise AlgebraError("division by zero")
            return MPoly(self.vars, {e: c / other for e, c in self.terms.items()})
        if isinstance(other, MPoly):
            return self.exact_div(other)
        return NotImplemented

    def __pow__(self, n: int) -> MPoly:
        if n < 0:
            raise AlgebraError("negative power")
        result, base = MPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def exact_div(self, divisor: MPoly) -> MPoly:
        """Quotient of an exact division; raises if ``divisor`` does not divide."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise AlgebraError("division by the zero polynomial")
        if divisor.is_constant():
            return self / divisor.constant_value()
        target = sort_vars(self.vars + divisor.vars)
        rem = MPoly(target, self._embed(target))
        g_exp, g_coef = max(divisor._embed(target).items())
        quot: dict[Exponent, Fraction] = {}
        while rem:
            r_exp, r_coef = max(rem._embed(target).items())
            diff = tuple(x - y for x, y in zip(r_exp, g_exp))
            if min(diff) < 0:
                raise AlgebraError(f"{divisor} does not divide {self}")
            mono = MPoly(target, {diff: r_coef / g_coef})
            quot[diff] = r_coef / g_coef
            rem = rem - mono * divisor
        return MPoly(target, quot)

    # substitution and evaluation ------------------------------------------

    def subs(self, mapping: Mapping[str, object]) -> MPoly:
        """Substitute variables by MPoly or rational values (simultaneously)."""
        if not mapping:
            return self
        values = {k: (v if isinstance(v, MPoly) else MPoly.const(as_rat(v))) for k, v in mapping.items()}
        keep = [i for i, v in enumerate(self.vars) if v not in values]
        keep_vars = tuple(self.vars[i] for i in keep)
        powers: dict[tuple[str, int], MPoly] = {}
        out = MPoly()
        for exp, coef in self.terms.items():
            term = MPoly(keep_vars, {tuple(exp[i] for i in keep): coef})
            for i, v in enumerate(self.vars):
                if v in values and exp[i]:
                    key = (v, exp[i])
                    if key not in powers:
                        powers[key] = values[v] ** exp[i]
                    term = term * powers[key]
            out = out + term
        return out

    def eval(self, assignment: Mapping[str, RatLike]) -> Fraction:
        """Evaluate at a full assignment; unknown/missing names raise."""
        missing = [v for v in self.vars if v not in assignment]
        if missing:
            raise AlgebraError(f"assignment misses variables {missing}")
        vals = [as_rat(assignment[v]) for v in self.vars]
        total = Fraction(0)
        for exp, coef in self.terms.items():
            term = coef
            for x, k in zip(vals, exp):
                if k:
                    term *= x ** k
            total += term
        return total

    def collect(self, var: str) -> list[MPoly]:
        """Coefficients with respect to ``var``, ascending degree."""
        if var not in self.vars:
            return [self] if self else []
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        buckets: dict[int, dict[Exponent, Fraction]] = {}
        for exp, coef in self.terms.items():
            buckets.setdefault(exp[i], {})[exp[:i] + exp[i + 1:]] = coef
        top = max(buckets)
        return [MPoly(rest, buckets.get(k, {})) for k in range(top + 1)]

    def to_upoly(self, var: str | None = None) -> UPoly:
        if not self.vars:
            return UPoly([self.constant_value()])
        if len(self.vars) > 1 or (var is not None and self.vars[0] != var):
            raise AlgebraError(f"not univariate in {var}: {self}")
        return UPoly(c.constant_value() for c in self.collect(self.vars[0]))

    def diff(self, var: str) -> MPoly:
        if var not in self.vars:
            return MPoly()
        i = self.vars.index(var)
        out = {}
        for exp, coef in self.terms.items():
            if exp[i]:
                e = list(exp)
                e[i] -= 1
                out[tuple(e)] = coef * exp[i]
        return MPoly(self.vars, out)

    # printing --------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            coef = self.terms[exp]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, exp) if k
            )
            mag = abs(coef)
            if not mono:
                body = rat_str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{rat_str(mag)}*{mono}"
            if not parts:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r})"


def _eval_ast(node) -> MPoly:
    if isinstance(node, ast.BinOp):
        left, right = _eval_ast(node.left), _eval_ast(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left.exact_div(right)
        if isinstance(node.op, ast.Pow):
            n = right.constant_value()
            if n.denominator != 1 or n < 0:
                raise AlgebraError("exponents must be non-negative integers")
            return left ** int(n)
    elif isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _eval_ast(node.operand)
        return -inner if isinstance(node.op, ast.USub) else inner
    elif isinstance(node, ast.Constant) and isinstance(node.value, int):
        return MPoly.const(node.value)
    elif isinstance(node, ast.Name):
        return MPoly.var(node.id)
    raise AlgebraError(f"unsupported syntax in polynomial: {ast.dump(node)}")


def mpoly(text: str) -> MPoly:
    """Shorthand for :meth:`MPoly.parse`."""
    return MPoly.parse(text)


# ---------------------------------------------------------------------------
# Polynomials in one distinguished variable over MPoly coefficients
# ---------------------------------------------------------------------------


class XPoly:
    """Univariate polynomial in ``var`` with :class:`MPoly` coefficients."""

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs: Iterable[MPoly | RatLike], var: str = "X"):
        cs = [c if isinstance(c, MPoly) else MPoly.const(as_rat(c)) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        for c in cs:
            if var in c.vars:
                raise AlgebraError(f"coefficient {c} contains the main variable {var}")
        self.var = var
        self.coeffs: tuple[MPoly, ...] = tuple(cs)

    @classmethod
    def from_mpoly(cls, p: MPoly, var: str) -> XPoly:
        return cls(p.collect(var), var)

    @classmethod
    def from_upoly(cls, p: UPoly, var: str = "X") -> XPoly:
        return cls(p.coeffs, var)

    def to_mpoly(self) -> MPoly:
        x = MPoly.var(self.var)
        out = MPoly()
        for k, c in enumerate(self.coeffs):
            out = out + c * x ** k
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> MPoly:
        return self.coeffs[-1] if self.coeffs else MPoly()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"XPoly({self.to_mpoly()!s}, var={self.var!r})"

    def _check(self, other: XPoly) -> None:
        if self.var != other.var:
            raise AlgebraError(f"main variable mismatch: {self.var} vs {other.var}")

    def __add__(self, other: XPoly) -> XPoly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = MPoly()
        return XPoly(
            ((self.coeffs[i] if i < len(self.coeffs) else z) + (other.coeffs[i] if i < len(other.coeffs) else z)
             for i in range(n)),
            self.var,
        )

    def __neg__(self) -> XPoly:
        return XPoly((-c for c in self.coeffs), self.var)

    def __sub__(self, other: XPoly) -> XPoly:
        return self + (-other)

    def __mul__(self, other) -> XPoly:
        if isinstance(other, (MPoly, int, Fraction)):
            return XPoly((c * other for c in self.coeffs), self.var)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return XPoly((), self.var)
        out = [MPoly()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return XPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> XPoly:
        result = XPoly([1], self.var)
        for _ in range(n):
            result = result * self
        return result

    def derivative(self) -> XPoly:
        return XPoly((c * i for i, c in enumerate(self.coeffs) if i), self.var)

    def subs(self, mapping: Mapping[str, object]) -> XPoly:
        """Substitute coefficient variables (not the main variable)."""
        return XPoly((c.subs(mapping) for c in self.coeffs), self.var)


def xpoly_divrem_monic(dividend: XPoly, divisor: XPoly) -> tuple[XPoly, XPoly]:
    """Division by a divisor whose leading coefficient is the constant 1.

    No fractions are introduced: every step subtracts an MPoly multiple of
    the divisor.
    """
    dividend._check(divisor)
    if divisor.is_zero() or divisor.lc != 1:
        raise AlgebraError("divisor must be monic in the main variable")
    rem = list(dividend.coeffs)
    dn = divisor.degree
    if len(rem) - 1 < dn:
        return XPoly((), dividend.var), dividend
    quot = [MPoly()] * (len(rem) - dn)
    for k in range(len(rem) - 1 - dn, -1, -1):
        coef = rem[k + dn]
        quot[k] = coef
        if coef:
            for j, dc in enumerate(divisor.coeffs):
                rem[k + j] = rem[k + j] - coef * dc
    return XPoly(quot, dividend.var), XPoly(rem[:dn], dividend.var)


# ---------------------------------------------------------------------------
# Resultants and discriminants
# ---------------------------------------------------------------------------


def bareiss_det(matrix: Sequence[Sequence[MPoly]]) -> MPoly:
    """Determinant by fraction-free (Bareiss) elimination over Q[vars]."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return MPoly.const(1)
    flip = False
    prev = MPoly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return MPoly()
            m[k], m[swap] = m[swap], m[k]
            flip = not flip
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = MPoly()
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if flip else det


def sylvester_matrix(f: XPoly, g: XPoly) -> list[list[MPoly]]:
    """Sylvester matrix; ``f``'s coefficient rows come first."""
    f._check(g)
    m, n = f.degree, g.degree
    size = m + n
    zero = MPoly()
    rows = []
    fd, gd = f.coeffs[::-1], g.coeffs[::-1]
    for i in range(n):
        rows.append([zero] * i + list(fd) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(gd) + [zero] * (size - n - 1 - i))
    return rows


def _as_xpoly(p, var: str) -> XPoly:
    if isinstance(p, XPoly):
        if p.var != var:
            raise AlgebraError(f"expected a polynomial in {var}, got one in {p.var}")
        return p
    if isinstance(p, UPoly):
        return XPoly.from_upoly(p, var)
    if isinstance(p, MPoly):
        return XPoly.from_mpoly(p, var)
    raise AlgebraError(f"cannot interpret {p!r} as a polynomial in {var}")


def resultant(f, g, var: str) -> MPoly:
    """Resultant with respect to ``var`` as the Sylvester determinant.

    Sign convention: ``f`` occupies the top rows, so for monic ``f`` with roots
    ``r_i`` the value is ``prod g(r_i)``; e.g. ``Res(x - u, x - v) = u - v``.
    """
    F, G = _as_xpoly(f, var), _as_xpoly(g, var)
    if F.is_zero() or G.is_zero():
        raise AlgebraError("resultant with the zero polynomial")
    if F.degree == 0 and G.degree == 0:
        raise AlgebraError(f"both inputs are constant in {var}")
    return bareiss_det(sylvester_matrix(F, G))


def discriminant(f, var: str) -> MPoly:
    """``(-1)^(n(n-1)/2) * Res(f, f') / lc(f)``."""
    F = _as_xpoly(f, var)
    n = F.degree
    if n < 1:
        raise AlgebraError(f"discriminant of a polynomial constant in {var}")
    res = resultant(F, F.derivative(), var)
    if (n * (n - 1) // 2) % 2:
        res = -res
    return res.exact_div(F.lc)


def upoly_resultant(f: UPoly, g: UPoly) -> Fraction:
    return resultant(f, g, "x").constant_value()


def upoly_discriminant(f: UPoly) -> Fraction:
    return discriminant(f, "x").constant_value()
