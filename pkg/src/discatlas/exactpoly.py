"""Exact polynomial arithmetic over the rationals.

Everything downstream (membership tests, classification, path
certificates) reduces to sign questions about polynomials with rational
coefficients, so this module keeps all arithmetic exact.  Rationals are
``fractions.Fraction``; no floating point enters any decision.

Two polynomial carriers:

``UniPoly``
    dense univariate polynomial, coefficients stored constant term
    upward.  The zero polynomial has an empty coefficient tuple and
    degree -1; otherwise the leading coefficient is nonzero.

``MultiPoly``
    sparse multivariate polynomial over an ordered variable tuple,
    terms keyed by exponent tuples.  Stored terms have nonzero
    coefficients.

Real root machinery is Sturm-based.  Chains are computed over the
integers with a signed pseudo-remainder sequence, stripping integer
content at every step so coefficient growth stays linear rather than
exponential.  Interval endpoints may be infinite; openness flags are
honoured exactly, and rational roots sitting on an endpoint are handled
by exact deflation instead of epsilon nudging.

Multivariate resultants use fraction-free Bareiss elimination on the
Sylvester matrix after clearing denominators, so every intermediate
division is exact integer (or integer-polynomial) division.

Values are immutable and operations are pure: nothing here mutates an
argument or caches behind the caller's back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _igcd
from math import lcm as _ilcm
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int]


class ZeroPolynomial(ValueError):
    """Raised when an operation is undefined for the zero polynomial."""


class DegreeZero(ValueError):
    """Raised when an operation needs positive degree in the main variable."""


class ArityMismatch(ValueError):
    """Raised when a point or variable list does not match the polynomial."""


def _frac(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def _sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


# ---------------------------------------------------------------------------
# univariate polynomials


class UniPoly:
    """Univariate polynomial with exact rational coefficients.

    Coefficients run from the constant term upward.  Trailing zeros are
    stripped on construction, so ``degree()`` is ``len(coeffs) - 1`` and
    the leading coefficient is nonzero unless the polynomial is zero
    (empty tuple, degree -1).

    >>> p = UniPoly("x", [-1, 0, 1])        # x^2 - 1
    >>> p.degree(), p(Fraction(3))
    (2, Fraction(8, 1))
    >>> (p * p).derivative() == UniPoly("x", [0, -4, 0, 4])
    True
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Iterable[RationalLike]):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("UniPoly is immutable")

    # -- basic structure

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UniPoly)
            and self.var == other.var
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.var, self.coeffs))

    def _check_var(self, other: "UniPoly") -> None:
        if self.var != other.var:
            raise ArityMismatch(
                f"variable mismatch: {self.var!r} vs {other.var!r}"
            )

    # -- ring operations

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check_var(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return UniPoly(self.var, [x + y for x, y in zip(a, b)])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.var, [-c for c in self.coeffs])

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (Fraction, int)):
            return UniPoly(self.var, [c * other for c in self.coeffs])
        self._check_var(other)
        if self.is_zero() or other.is_zero():
            return UniPoly(self.var, [])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(self.var, out)

    __rmul__ = __mul__

    def scale(self, c: RationalLike) -> "UniPoly":
        return self * _frac(c)

    def derivative(self) -> "UniPoly":
        return UniPoly(self.var, [i * c for i, c in enumerate(self.coeffs)][1:])

    def shift_argument(self, a: RationalLike) -> "UniPoly":
        """Return p(x + a)."""
        out = UniPoly(self.var, [])
        lin = UniPoly(self.var, [a, 1])
        for c in reversed(self.coeffs):
            out = out * lin + UniPoly(self.var, [c])
        return out

    def divide_exact(self, d: "UniPoly") -> "UniPoly":
        """Quotient self / d, requiring a zero remainder."""
        self._check_var(d)
        if d.is_zero():
            raise ZeroPolynomial("division by zero polynomial")
        rem = list(self.coeffs)
        dlc = d.leading_coefficient()
        dd = d.degree()
        q = [Fraction(0)] * max(len(rem) - dd, 1)
        while len(rem) - 1 >= dd and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dd:
                break
            k = len(rem) - 1 - dd
            f = rem[-1] / dlc
            q[k] = f
            for i, c in enumerate(d.coeffs):
                rem[k + i] -= f * c
            rem.pop()
        if any(c != 0 for c in rem):
            raise ValueError("inexact polynomial division")
        return UniPoly(self.var, q)

    def text(self) -> str:
        """Canonical ASCII form, terms sorted by descending exponent."""
        return _terms_text(
            [((e,), c) for e, c in enumerate(self.coeffs) if c != 0],
            (self.var,),
        )

    def __repr__(self) -> str:
        return f"UniPoly({self.var!r}, {self.text()!r})"

    # -- integer scaling (internal)

    def _int_coeffs(self) -> tuple[list[int], int]:
        """Integer coefficient list and the denominator that was cleared."""
        if not self.coeffs:
            return [], 1
        den = _ilcm(*[c.denominator for c in self.coeffs])
        return [int(c * den) for c in self.coeffs], den


def poly_from_roots(var: str, roots: Sequence[RationalLike],
                    lead: RationalLike = 1) -> UniPoly:
    """Monic-up-to-lead product of (var - r) over the given roots."""
    p = UniPoly(var, [lead])
    for r in roots:
        p = p * UniPoly(var, [-_frac(r), 1])
    return p


# ---------------------------------------------------------------------------
# intervals


@dataclass(frozen=True)
class Interval:
    """Real interval with rational or infinite endpoints.

    ``lo`` / ``hi`` are Fractions or ``None`` for -oo / +oo.  Infinite
    endpoints are forced open.  A point interval is closed on both
    sides.  Construct through :meth:`open`, :meth:`closed`,
    :meth:`point` or :meth:`real_line` for readable call sites.
    """

    lo: Fraction | None
    hi: Fraction | None
    lo_open: bool
    hi_open: bool

    def __post_init__(self):
        if self.lo is None:
            object.__setattr__(self, "lo_open", True)
        if self.hi is None:
            object.__setattr__(self, "hi_open", True)
        if self.lo is not None and self.hi is not None:
            if self.lo > self.hi:
                raise ValueError("interval endpoints out of order")
            if self.lo == self.hi and (self.lo_open or self.hi_open):
                raise ValueError("degenerate open interval")

    @staticmethod
    def open(lo, hi) -> "Interval":
        return Interval(None if lo is None else _frac(lo),
                        None if hi is None else _frac(hi), True, True)

    @staticmethod
    def closed(lo, hi) -> "Interval":
        return Interval(_frac(lo), _frac(hi), False, False)

    @staticmethod
    def point(r) -> "Interval":
        r = _frac(r)
        return Interval(r, r, False, False)

    @staticmethod
    def real_line() -> "Interval":
        return Interval(None, None, True, True)

    def is_point(self) -> bool:
        return self.lo is not None and self.lo == self.hi

    def width(self) -> Fraction | None:
        if self.lo is None or self.hi is None:
            return None
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        if self.lo is None or self.hi is None:
            raise ValueError("midpoint of an unbounded interval")
        return (self.lo + self.hi) / 2

    def text(self) -> str:
        lo = "-oo" if self.lo is None else str(self.lo)
        hi = "+oo" if self.hi is None else str(self.hi)
        return f"{'(' if self.lo_open else '['}{lo}, {hi}{')' if self.hi_open else ']'}"


# ---------------------------------------------------------------------------
# integer kernel: signed pseudo-remainders, Sturm chains, gcd, resultants


def _int_content(cs: Sequence[int]) -> int:
    g = 0
    for c in cs:
        g = _igcd(g, abs(c))
        if g == 1:
            break
    return g


def _int_primitive(cs: Sequence[int]) -> list[int]:
    g = _int_content(cs)
    if g in (0, 1):
        return list(cs)
    return [c // g for c in cs]


def _int_trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _int_derivative(cs: Sequence[int]) -> list[int]:
    return [i * c for i, c in enumerate(cs)][1:]


def _int_pseudo_rem_signed(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder of a by b scaled by a positive constant.

    Each elimination step multiplies the running remainder by lc(b); if
    the accumulated multiplier lc(b)^steps is negative the result is
    negated, so the return value is always a positive multiple of the
    true rational remainder.  Sturm chains need the sign to be right.
    """
    a = _int_trim(list(a))
    db, lb = len(b) - 1, b[-1]
    steps = 0
    while a and len(a) - 1 >= db:
        if a[-1] == 0:
            a.pop()
            continue
        k = len(a) - 1 - db
        lead = a[-1]
        a = [c * lb for c in a]
        for i in range(db + 1):
            a[k + i] -= lead * b[i]
        a.pop()
        _int_trim(a)
        steps += 1
    if lb < 0 and steps % 2 == 1:
        a = [-c for c in a]
    return a


def _sturm_chain_int(cs: Sequence[int]) -> list[list[int]]:
    chain = [_int_primitive(cs)]
    d = _int_trim(_int_derivative(chain[0]))
    if d:
        chain.append(_int_primitive(d))
    while len(chain[-1]) > 1:
        r = _int_pseudo_rem_signed(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in _int_primitive(r)])
    return chain


def _int_sign_at(cs: Sequence[int], x: Fraction) -> int:
    n, d = x.numerator, x.denominator
    acc = 0
    dp = 1
    for c in reversed(cs):
        acc = acc * n + c * dp
        dp *= d
    return _sign(acc)


def _int_sign_at_inf(cs: Sequence[int], positive: bool) -> int:
    s = _sign(cs[-1])
    if not positive and (len(cs) - 1) % 2 == 1:
        s = -s
    return s


def _variations(signs: Iterable[int]) -> int:
    v, prev = 0, 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            v += 1
        prev = s
    return v


def _chain_variations(chain: Sequence[Sequence[int]], x) -> int:
    if x is None:
        raise ValueError("use _chain_variations_inf")
    return _variations(_int_sign_at(p, x) for p in chain)


def _chain_variations_inf(chain: Sequence[Sequence[int]], positive: bool) -> int:
    return _variations(_int_sign_at_inf(p, positive) for p in chain)


def _int_gcd_poly(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive gcd with positive leading coefficient."""
    a, b = _int_trim(list(a)), _int_trim(list(b))
    if not a:
        a, b = b, a
    if not b:
        g = _int_primitive(a)
        if g and g[-1] < 0:
            g = [-c for c in g]
        return g
    if len(a) < len(b):
        a, b = b, a
    a, b = _int_primitive(a), _int_primitive(b)
    while b:
        r = _int_pseudo_rem_signed(a, b)
        a, b = b, _int_primitive(r)
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def _int_resultant(a: Sequence[int], b: Sequence[int]) -> int:
    """Sylvester resultant of integer polynomials by Bareiss elimination."""
    m, n = len(a) - 1, len(b) - 1
    if m < 0 or n < 0:
        raise ZeroPolynomial("resultant with zero polynomial")
    if m == 0:
        return a[0] ** n
    if n == 0:
        return b[0] ** m
    size = m + n
    rows = []
    ar = list(reversed(a))
    br = list(reversed(b))
    for i in range(n):
        rows.append([0] * i + ar + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + br + [0] * (size - n - 1 - i))
    return _bareiss_int(rows)


def _bareiss_int(m: list[list[int]]) -> int:
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (pk * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# public univariate root machinery


@dataclass(frozen=True)
class RootSignature:
    neg: int
    pos: int
    zero_is_root: bool
    is_squarefree: bool


@dataclass(frozen=True)
class SquarefreeDecomposition:
    gcd_with_derivative: UniPoly
    squarefree_part: UniPoly


def _squarefree_int(p: UniPoly) -> list[int]:
    """Integer coefficients of the squarefree part of p (primitive)."""
    cs, _ = p._int_coeffs()
    cs = _int_trim(cs)
    if not cs:
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    if len(cs) == 1:
        return [1]
    g = _int_gcd_poly(cs, _int_derivative(cs))
    if len(g) == 1:
        return _int_primitive(cs)
    q = _int_divide_exact_q(cs, g)
    return _int_primitive(q)


def _int_divide_exact_q(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Exact quotient a/b in Q[x], returned as primitive integer list."""
    pa = UniPoly("_t", a)
    pb = UniPoly("_t", b)
    q = pa.divide_exact(pb)
    qi, _ = q._int_coeffs()
    return qi


def squarefree_decomposition(p: UniPoly) -> SquarefreeDecomposition:
    """Split p into gcd(p, p') and the squarefree cofactor.

    The product of the two parts equals p up to a nonzero rational
    constant; both parts are primitive with positive leading
    coefficient.
    """
    if p.is_zero():
        raise ZeroPolynomial("squarefree decomposition of the zero polynomial")
    cs, _ = p._int_coeffs()
    if len(cs) == 1:
        one = UniPoly(p.var, [1])
        return SquarefreeDecomposition(one, one)
    g = _int_gcd_poly(cs, _int_derivative(cs))
    sf = _int_primitive(_int_divide_exact_q(cs, g))
    if sf[-1] < 0:
        sf = [-c for c in sf]
    return SquarefreeDecomposition(UniPoly(p.var, g), UniPoly(p.var, sf))


def _deflate_rational_root(cs: list[int], r: Fraction) -> list[int]:
    """Divide out (den*x - num) once; r must be a root."""
    p = UniPoly("_t", cs)
    q = p.divide_exact(UniPoly("_t", [-r, 1]))
    qi, _ = q._int_coeffs()
    return qi


def sturm_count(p: UniPoly, interval: Interval) -> int:
    """Number of distinct real roots of p in the interval.

    Endpoint openness is honoured exactly.  Multiple roots count once.

    >>> p = poly_from_roots("x", [0, 1, 1, 2])
    >>> sturm_count(p, Interval.closed(0, 2))
    3
    >>> sturm_count(p, Interval.open(0, 2))
    1
    >>> sturm_count(p, Interval.real_line())
    3
    """
    if p.is_zero():
        raise ZeroPolynomial("root counting on the zero polynomial")
    if p.degree() == 0:
        return 0
    sf = _squarefree_int(p)
    if len(sf) == 1:
        return 0
    if interval.is_point():
        return 1 if _int_sign_at(sf, interval.lo) == 0 else 0

    count = _open_count_int(sf, interval.lo, interval.hi)
    if interval.lo is not None and not interval.lo_open:
        if _int_sign_at(sf, interval.lo) == 0:
            count += 1
    if interval.hi is not None and not interval.hi_open:
        if _int_sign_at(sf, interval.hi) == 0:
            count += 1
    return count


def _open_count_int(sf: list[int], lo: Fraction | None,
                    hi: Fraction | None) -> int:
    """Distinct roots of the squarefree integer polynomial in open (lo, hi)."""
    # deflate rational roots sitting exactly on a finite endpoint so the
    # Sturm difference below is evaluated at non-roots
    if lo is not None and _int_sign_at(sf, lo) == 0:
        sf = _deflate_rational_root(sf, lo)
    if hi is not None and len(sf) > 1 and _int_sign_at(sf, hi) == 0:
        sf = _deflate_rational_root(sf, hi)
    if len(sf) <= 1:
        return 0
    chain = _sturm_chain_int(sf)
    va = (_chain_variations_inf(chain, False) if lo is None
          else _chain_variations(chain, lo))
    vb = (_chain_variations_inf(chain, True) if hi is None
          else _chain_variations(chain, hi))
    n = va - vb
    # the difference counts roots in (lo, hi]; hi is not a root here
    return n


def root_signature(p: UniPoly) -> RootSignature:
    """Distinct real root counts split by sign, plus squarefreeness.

    >>> root_signature(poly_from_roots("x", [-2, 0, 0, 3]))
    RootSignature(neg=1, pos=1, zero_is_root=True, is_squarefree=False)
    """
    if p.is_zero():
        raise ZeroPolynomial("signature of the zero polynomial")
    cs, _ = p._int_coeffs()
    g = _int_gcd_poly(cs, _int_derivative(cs)) if len(cs) > 1 else [1]
    zero = Fraction(0)
    return RootSignature(
        neg=sturm_count(p, Interval.open(None, zero)),
        pos=sturm_count(p, Interval.open(zero, None)),
        zero_is_root=(p.constant_term() == 0),
        is_squarefree=(len(g) == 1),
    )


def _cauchy_bound(cs: Sequence[int]) -> Fraction:
    lead = abs(cs[-1])
    m = max(abs(c) for c in cs[:-1]) if len(cs) > 1 else 0
    return Fraction(m, lead) + 1


def isolate_real_roots(p: UniPoly, max_width: RationalLike = Fraction(1, 16)
                       ) -> list[Interval]:
    """Disjoint isolating intervals for the distinct real roots of p.

    Intervals are sorted ascending, each of width at most ``max_width``
    and containing exactly one root of the squarefree part, certified
    by an endpoint sign change.  A rational root found exactly is
    reported as a point interval.

    >>> [iv.text() for iv in isolate_real_roots(UniPoly("x", [-2, 0, 1]), 1)]
    ['(-3/2, -3/4)', '(3/4, 3/2)']
    >>> isolate_real_roots(UniPoly("x", [0, 0, 1]))[0].text()
    '[0, 0]'
    """
    max_width = _frac(max_width)
    if max_width <= 0:
        raise ValueError("max_width must be positive")
    if p.is_zero():
        raise ZeroPolynomial("isolating roots of the zero polynomial")
    sf = _squarefree_int(p)
    if len(sf) <= 1:
        return []
    out: list[Interval] = []

    def split(sf: list[int], chain: list[list[int]],
              lo: Fraction, hi: Fraction, n: int) -> None:
        # n roots strictly inside (lo, hi); lo and hi are non-roots of sf
        if n == 0:
            return
        if n == 1 and hi - lo <= max_width:
            out.append(Interval.open(lo, hi))
            return
        mid = (lo + hi) / 2
        if _int_sign_at(sf, mid) == 0:
            # rational root hit exactly: emit it, deflate, recurse with a
            # fresh chain so the endpoint invariant is restored
            out.append(Interval.point(mid))
            sf2 = _deflate_rational_root(sf, mid)
            if len(sf2) <= 1:
                return
            chain2 = _sturm_chain_int(sf2)
            left = (_chain_variations(chain2, lo)
                    - _chain_variations(chain2, mid))
            split(sf2, chain2, lo, mid, left)
            split(sf2, chain2, mid, hi, n - 1 - left)
        else:
            left = (_chain_variations(chain, lo)
                    - _chain_variations(chain, mid))
            split(sf, chain, lo, mid, left)
            split(sf, chain, mid, hi, n - left)

    chain = _sturm_chain_int(sf)
    total = (_chain_variations_inf(chain, False)
             - _chain_variations_inf(chain, True))
    bound = _cauchy_bound(sf)
    lo, hi = -bound, bound
    # cauchy bound is strict, so the endpoints are never roots
    split(sf, chain, lo, hi, total)
    out.sort(key=lambda iv: (iv.lo, iv.hi))
    return out


def refine_root(p: UniPoly, iv: Interval, max_width: RationalLike) -> Interval:
    """Shrink an isolating interval by bisection to the requested width."""
    max_width = _frac(max_width)
    if iv.is_point():
        return iv
    sf = _squarefree_int(p)
    lo, hi = iv.lo, iv.hi
    slo = _int_sign_at(sf, lo)
    while hi - lo > max_width:
        mid = (lo + hi) / 2
        sm = _int_sign_at(sf, mid)
        if sm == 0:
            return Interval.point(mid)
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return Interval.open(lo, hi)


def discriminant(p: UniPoly) -> Fraction:
    """disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p)."""
    n = p.degree()
    if n < 1:
        raise DegreeZero("discriminant needs degree >= 1")
    if n == 1:
        return Fraction(1)
    r = resultant_uni(p, p.derivative())
    s = -1 if (n * (n - 1) // 2) % 2 else 1
    return s * r / p.leading_coefficient()


def resultant_uni(f: UniPoly, g: UniPoly) -> Fraction:
    """Sylvester resultant of two univariate polynomials."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant with zero polynomial")
    f._check_var(g)
    fi, fd = f._int_coeffs()
    gi, gd = g._int_coeffs()
    r = _int_resultant(fi, gi)
    return Fraction(r, fd ** g.degree() * gd ** f.degree())


def gcd_uni(f: UniPoly, g: UniPoly) -> UniPoly:
    """Primitive gcd with positive leading coefficient."""
    if f.is_zero() and g.is_zero():
        raise ZeroPolynomial("gcd of two zero polynomials")
    if f.is_zero():
        fi: list[int] = []
    else:
        fi, _ = f._int_coeffs()
    if g.is_zero():
        gi: list[int] = []
    else:
        gi, _ = g._int_coeffs()
    var = f.var if not f.is_zero() else g.var
    return UniPoly(var, _int_gcd_poly(fi, gi))


# ---------------------------------------------------------------------------
# multivariate polynomials


def _terms_text(terms: Sequence[tuple[tuple[int, ...], Fraction]],
                names: tuple[str, ...]) -> str:
    if not terms:
        return "0"
    items = sorted(terms, key=lambda t: t[0], reverse=True)
    parts: list[str] = []
    for expo, c in items:
        mono = "*".join(
            n if e == 1 else f"{n}^{e}"
            for n, e in zip(names, expo) if e != 0
        )
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


class MultiPoly:
    """Sparse multivariate polynomial over an ordered variable tuple.

    Terms map exponent tuples (one entry per variable, matching the
    declared order) to nonzero rational coefficients.

    >>> x, y = MultiPoly.variables(("x", "y"))
    >>> p = x * x - y
    >>> p.eval((3, 2))
    Fraction(7, 1)
    >>> p.text()
    'x^2 - y'
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str],
                 terms: Mapping[tuple[int, ...], RationalLike]):
        vs = tuple(variables)
        tm: dict[tuple[int, ...], Fraction] = {}
        for e, c in terms.items():
            e = tuple(int(k) for k in e)
            if len(e) != len(vs):
                raise ArityMismatch(
                    f"exponent tuple {e} does not match variables {vs}")
            c = _frac(c)
            if c != 0:
                tm[e] = tm.get(e, Fraction(0)) + c
                if tm[e] == 0:
                    del tm[e]
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", dict(tm))

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("MultiPoly is immutable")

    @staticmethod
    def variables(names: Sequence[str]) -> tuple["MultiPoly", ...]:
        names = tuple(names)
        out = []
        for i in range(len(names)):
            e = tuple(1 if j == i else 0 for j in range(len(names)))
            out.append(MultiPoly(names, {e: 1}))
        return tuple(out)

    @staticmethod
    def constant(names: Sequence[str], c: RationalLike) -> "MultiPoly":
        names = tuple(names)
        return MultiPoly(names, {tuple([0] * len(names)): _frac(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in expo) for expo in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        i = self._var_index(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def _var_index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise ArityMismatch(f"unknown variable {var!r} in {self.vars}")

    def _check_vars(self, other: "MultiPoly") -> None:
        if self.vars != other.vars:
            raise ArityMismatch(
                f"variable tuples differ: {self.vars} vs {other.vars}")

    def __eq__(self, other) -> bool:
        return (isinstance(other, MultiPoly) and self.vars == other.vars
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_vars(other)
        tm = dict(self.terms)
        for e, c in other.terms.items():
            tm[e] = tm.get(e, Fraction(0)) + c
        return MultiPoly(self.vars, tm)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return MultiPoly(
                self.vars, {e: c * other for e, c in self.terms.items()})
        self._check_vars(other)
        tm: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                tm[e] = tm.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.vars, tm)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        out = MultiPoly.constant(self.vars, 1)
        for _ in range(n):
            out = out * self
        return out

    def derivative(self, var: str) -> "MultiPoly":
        i = self._var_index(var)
        tm: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            tm[tuple(e2)] = c * e[i]
        return MultiPoly(self.vars, tm)

    def eval(self, point: Sequence[RationalLike]) -> Fraction:
        if len(point) != len(self.vars):
            raise ArityMismatch(
                f"point of length {len(point)} for {len(self.vars)} variables")
        pt = [_frac(x) for x in point]
        acc = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(pt, e):
                if k:
                    t *= x ** k
            acc += t
        return acc

    def substitute(self, var: str, replacement: "MultiPoly") -> "MultiPoly":
        """Substitute a polynomial (over the same variable tuple) for var."""
        self._check_vars(replacement)
        i = self._var_index(var)
        powers: dict[int, MultiPoly] = {0: MultiPoly.constant(self.vars, 1)}
        maxe = max((e[i] for e in self.terms), default=0)
        for k in range(1, maxe + 1):
            powers[k] = powers[k - 1] * replacement
        acc = MultiPoly(self.vars, {})
        for e, c in self.terms.items():
            rest = list(e)
            k = rest[i]
            rest[i] = 0
            acc = acc + powers[k] * MultiPoly(self.vars, {tuple(rest): c})
        return acc

    def drop_variable(self, var: str) -> "MultiPoly":
        """Remove a variable that no longer occurs."""
        i = self._var_index(var)
        if any(e[i] != 0 for e in self.terms):
            raise ArityMismatch(f"variable {var!r} still occurs")
        names = self.vars[:i] + self.vars[i + 1:]
        return MultiPoly(
            names, {e[:i] + e[i + 1:]: c for e, c in self.terms.items()})

    def coefficients_in(self, var: str) -> list["MultiPoly"]:
        """Coefficient list in var (constant upward), over the same tuple."""
        i = self._var_index(var)
        d = self.degree_in(var)
        if d < 0:
            return []
        out = [dict() for _ in range(d + 1)]
        for e, c in self.terms.items():
            e2 = list(e)
            k = e2[i]
            e2[i] = 0
            out[k][tuple(e2)] = c
        return [MultiPoly(self.vars, tm) for tm in out]

    def text(self) -> str:
        """Canonical ASCII sparse term list, sorted by exponent tuple."""
        return _terms_text(list(self.terms.items()), self.vars)

    def term_list(self) -> list[tuple[tuple[int, ...], str]]:
        """JSON-friendly sorted term list: (exponents, coefficient string)."""
        return [(e, str(c))
                for e, c in sorted(self.terms.items(), reverse=True)]

    def __repr__(self) -> str:
        return f"MultiPoly({self.vars!r}, {self.text()!r})"

    def content(self) -> Fraction:
        """Positive rational content (gcd of coefficients)."""
        if not self.terms:
            raise ZeroPolynomial("content of the zero polynomial")
        num = 0
        den = 1
        for c in self.terms.values():
            num = _igcd(num, abs(c.numerator))
            den = _ilcm(den, c.denominator)
        return Fraction(num, den)

    def primitive_part(self) -> "MultiPoly":
        c = self.content()
        return self * (1 / c)

    def leading_sign(self) -> int:
        """Sign of the coefficient of the lexicographically largest term."""
        if not self.terms:
            return 0
        e = max(self.terms)
        return _sign(self.terms[e])


def eval_poly(F: MultiPoly, point: Sequence[RationalLike]) -> Fraction:
    """Module-level alias for :meth:`MultiPoly.eval`."""
    return F.eval(point)


def restrict_to_segment(F: MultiPoly, start: Sequence[RationalLike],
                        end: Sequence[RationalLike]) -> UniPoly:
    """Restrict F to the segment (1-t)*start + t*end, as a polynomial in t.

    >>> x, y = MultiPoly.variables(("x", "y"))
    >>> restrict_to_segment(x * y, (0, 1), (1, 3)).coeffs
    (Fraction(0, 1), Fraction(1, 1), Fraction(2, 1))
    """
    if len(start) != len(F.vars) or len(end) != len(F.vars):
        raise ArityMismatch("segment endpoints must match the variable count")
    a = [_frac(v) for v in start]
    b = [_frac(v) for v in end]
    lines = [UniPoly("t", [a[i], b[i] - a[i]]) for i in range(len(a))]
    # cache powers of each coordinate line
    pows: list[list[UniPoly]] = [[UniPoly("t", [1])] for _ in lines]
    acc = UniPoly("t", [])
    for e, c in F.terms.items():
        term = UniPoly("t", [c])
        for i, k in enumerate(e):
            while len(pows[i]) <= k:
                pows[i].append(pows[i][-1] * lines[i])
            if k:
                term = term * pows[i][k]
        acc = acc + term
    return acc


# -- multivariate division, gcd, resultant


def _mp_divide_exact(A: MultiPoly, B: MultiPoly) -> MultiPoly:
    """Exact division A / B in the polynomial ring; raises if inexact."""
    A._check_vars(B)
    if B.is_zero():
        raise ZeroPolynomial("division by zero polynomial")
    rem = dict(A.terms)
    out: dict[tuple[int, ...], Fraction] = {}
    b_lead = max(B.terms)
    b_lc = B.terms[b_lead]
    while rem:
        a_lead = max(rem)
        q = tuple(x - y for x, y in zip(a_lead, b_lead))
        if any(k < 0 for k in q):
            raise ValueError("inexact multivariate division")
        f = rem[a_lead] / b_lc
        out[q] = out.get(q, Fraction(0)) + f
        for e, c in B.terms.items():
            e2 = tuple(x + y for x, y in zip(q, e))
            v = rem.get(e2, Fraction(0)) - f * c
            if v == 0:
                rem.pop(e2, None)
            else:
                rem[e2] = v
    return MultiPoly(A.vars, out)


def _specialized_gcd_is_constant(A: MultiPoly, B: MultiPoly,
                                 main: str) -> bool:
    """Certify deg(gcd(A, B)) = 0 in main by one good specialization.

    Substituting small integers for the other variables can only raise
    the gcd degree in main, provided the leading coefficient of A in
    main survives the substitution.  A constant specialized gcd is
    therefore a proof; a nonconstant one proves nothing.
    """
    i = A._var_index(main)
    others = [j for j in range(len(A.vars)) if j != i]
    lead = A.coefficients_in(main)[A.degree_in(main)]

    def specialize(P: MultiPoly, pt: dict[int, int]) -> list[int]:
        cs: dict[int, Fraction] = {}
        for e, c in P.terms.items():
            v = c
            for j in others:
                v *= Fraction(pt[j]) ** e[j]
            cs[e[i]] = cs.get(e[i], Fraction(0)) + v
        den = _ilcm(*[x.denominator for x in cs.values()]) if cs else 1
        out = [0] * (max(cs, default=-1) + 1)
        for k, v in cs.items():
            out[k] = int(v * den)
        return _int_trim(out)

    for trial in range(8):
        pt = {j: (trial + 1) * (2 + (j * 3) % 5) - trial for j in others}
        if lead.eval(tuple(
                Fraction(pt[j]) if j in pt else Fraction(0)
                for j in range(len(A.vars)))) == 0:
            continue
        ga = specialize(A, pt)
        gb = specialize(B, pt)
        if not ga or not gb:
            continue
        return len(_int_gcd_poly(ga, gb)) == 1
    return False


def gcd_multi(A: MultiPoly, B: MultiPoly) -> MultiPoly:
    """Primitive multivariate gcd by a recursive primitive PRS.

    Normalised so the lexicographically leading coefficient is
    positive.  A specialization certificate short-circuits the common
    coprime case before the remainder sequence is attempted; no
    modular heuristics beyond that.
    """
    A._check_vars(B)
    if A.is_zero() and B.is_zero():
        raise ZeroPolynomial("gcd of two zero polynomials")
    if A.is_zero():
        g = B.primitive_part()
        return g if g.leading_sign() >= 0 else -g
    if B.is_zero():
        g = A.primitive_part()
        return g if g.leading_sign() >= 0 else -g
    if A.is_constant() or B.is_constant():
        return MultiPoly.constant(A.vars, 1)
    # choose the first variable that actually occurs in both
    main = None
    for v in A.vars:
        if A.degree_in(v) > 0 and B.degree_in(v) > 0:
            main = v
            break
    if main is None:
        # no shared variable: gcd is the gcd of contents, i.e. constant
        return MultiPoly.constant(A.vars, 1)
    if _specialized_gcd_is_constant(A, B, main):
        # gcd has degree 0 in main, so it divides both contents
        ca = _content_wrt(A, main)
        cb = _content_wrt(B, main)
        if ca.is_constant() or cb.is_constant():
            return MultiPoly.constant(A.vars, 1)
        return gcd_multi(ca, cb)

    ca, cb = _content_wrt(A, main), _content_wrt(B, main)
    pa = _mp_divide_exact(A, ca)
    pb = _mp_divide_exact(B, cb)
    cont_gcd = gcd_multi(ca, cb)

    # primitive PRS in the main variable
    def deg(P: MultiPoly) -> int:
        return P.degree_in(main)

    if deg(pa) < deg(pb):
        pa, pb = pb, pa
    while not pb.is_zero():
        r = _pseudo_rem_multi(pa, pb, main)
        if r.is_zero():
            pa, pb = pb, r
            break
        rc = _content_wrt(r, main) if deg(r) > 0 else r
        r = _mp_divide_exact(r, rc)
        pa, pb = pb, r
        if deg(pa) == 0:
            pa = MultiPoly.constant(A.vars, 1)
            break
    g = pa.primitive_part() * cont_gcd
    return g if g.leading_sign() >= 0 else -g


def _content_wrt(P: MultiPoly, main: str) -> MultiPoly:
    """gcd of the coefficients of P viewed as a polynomial in main."""
    cs = [c for c in P.coefficients_in(main) if not c.is_zero()]
    g = cs[0]
    for c in cs[1:]:
        g = gcd_multi(g, c)
        if g.is_constant():
            break
    if g.leading_sign() < 0:
        g = -g
    return g


def _pseudo_rem_multi(A: MultiPoly, B: MultiPoly, var: str) -> MultiPoly:
    """Pseudo-remainder of A by B with respect to var."""
    da, db = A.degree_in(var), B.degree_in(var)
    if db < 0:
        raise ZeroPolynomial("pseudo-remainder by zero")
    bl = B.coefficients_in(var)[db]
    i = A._var_index(var)
    r = A * (bl ** (da - db + 1))
    while not r.is_zero() and r.degree_in(var) >= db:
        dr = r.degree_in(var)
        rl = r.coefficients_in(var)[dr]
        q = _mp_divide_exact(rl, bl)
        shift = MultiPoly(A.vars, {
            tuple(dr - db if j == i else 0
                  for j in range(len(A.vars))): 1})
        r = r - q * shift * B
    return r


def squarefree_part_multi(P: MultiPoly) -> MultiPoly:
    """Squarefree part: P divided by the gcd of P and all its partials."""
    if P.is_zero():
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    if P.is_constant():
        return MultiPoly.constant(P.vars, 1)
    g = P
    for v in P.vars:
        d = P.derivative(v)
        if d.is_zero():
            continue
        g = gcd_multi(g, d)
        if g.is_constant():
            break
    if g.is_constant():
        out = P.primitive_part()
    else:
        out = _mp_divide_exact(P, g).primitive_part()
    return out if out.leading_sign() >= 0 else -out


def resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Sylvester resultant of f and g eliminating var.

    Both inputs must have positive degree in var.  Computed by
    fraction-free Bareiss elimination over integer-coefficient
    polynomials after clearing denominators, then rescaled to the exact
    resultant of the original inputs.  The result vanishes at a point
    iff the instantiated polynomials share a root or both leading
    coefficients vanish there.
    """
    f._check_vars(g)
    m, n = f.degree_in(var), g.degree_in(var)
    if m < 0 or n < 0:
        raise ZeroPolynomial("resultant with zero polynomial")
    if m == 0 or n == 0:
        raise DegreeZero(f"resultant needs positive degree in {var!r}")
    df = _ilcm(*[c.denominator for c in f.terms.values()])
    dg = _ilcm(*[c.denominator for c in g.terms.values()])
    fi = f * df
    gi = g * dg
    fc = fi.coefficients_in(var)
    gc = gi.coefficients_in(var)
    fc = [c.drop_variable(var) for c in fc]
    gc = [c.drop_variable(var) for c in gc]
    size = m + n
    zero = MultiPoly(fc[0].vars, {})
    rows: list[list[MultiPoly]] = []
    fr = list(reversed(fc))
    gr = list(reversed(gc))
    for i in range(n):
        rows.append([zero] * i + fr + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gr + [zero] * (size - n - 1 - i))
    det = _bareiss_multi(rows)
    det = det * Fraction(1, df ** n * dg ** m)
    # reinstate the eliminated variable slot with exponent zero
    names = f.vars
    i = f._var_index(var)
    return MultiPoly(names, {
        e[:i] + (0,) + e[i:]: c for e, c in det.terms.items()})


def _bareiss_multi(m: list[list[MultiPoly]]) -> MultiPoly:
    n = len(m)
    if n == 1:
        return m[0][0]
    vars_ = m[0][0].vars
    one = MultiPoly.constant(vars_, 1)
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return MultiPoly(vars_, {})
        pk = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pk * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num if k == 0 else _mp_divide_exact(num, prev)
            m[i][k] = MultiPoly(vars_, {})
        prev = pk
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def parse_rational(s: str) -> Fraction:
    """Parse 'num' or 'num/den' with optional sign; no floats accepted."""
    s = s.strip()
    try:
        if "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational: {s!r}") from e
