"""Simple boundary singularity families and their discriminants.

The families handled here are the simple singularities of functions on
a half plane with boundary x = 0, in the normal forms

    B(mu, s):  x^mu + s*y^2            (mu even, s = +-1)
               s*(x^mu + y^2)          (mu odd, global sign)
    C(mu, s):  x*y + s*y^mu            (mu even)
               s*(x*y + y^mu)          (mu odd)
    F4(s):     s*x^2 + y^3

with truncated versal deformations

    B:  f = h(x) + s*y^2,    h(x) = (+-)x^mu + l1*x^(mu-1) + ... + lmu
    C:  f = sxy*x*y + h(y),  h(y) = s*y^mu + l1*y^(mu-1) + ... + lmu
    F4: f = s*x^2 + y^3 + a*x + b*y + c*x*y + d

The lower-value set W(lambda) = {f <= 0} changes topology exactly on
two hypersurface strata of the parameter space: Sigma_0 (an interior
critical point of f lies on the zero level) and Sigma_1 (the boundary
restriction f(0, y) has a degenerate zero).  For B the two strata are
cut out by "h has a real multiple root" and "h(0) = 0"; for C the same
two conditions swap roles, since f(0, y) = h(y) there and the interior
critical point sits at (-h'(0)/sxy, 0) with critical value h(0).

For F4 the interior stratum is carried by an eliminant Delta_0(a,b,c,d)
obtained by solving f_x = 0 for x, substituting into f = 0 and
f_y = 0, and eliminating y by a resultant.  Delta_0 is irreducible of
degree 7, quasi-homogeneous of weight 12 for weights (3, 4, 1, 6).
The boundary stratum is the cubic discriminant condition
4*b^3 + 27*d^2 = 0.  The minus class reduces to the plus class by
-f(x, -y; a, b, c, d) = f(x, y; -a, b, c, -d).

The cuspidal edge Xi_0 of Sigma_0 (parameters whose interior critical
point is degenerate) admits the rational parametrisation
xi0_point(y0, c) = (-c*y0, -3*y0^2, c, 2*y0^3), where the boundary
cubic becomes (y - y0)^2 * (y + 2*y0).  Points near Xi_0 seed the two
component types whose zero set carries an oval strictly to one side of
the boundary; f4_seed_oval_side builds them by shifting x off the
degenerate critical point and then lowering the function to split the
level set, with all signs tied to the requested side.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactpoly import (
    ArityMismatch,
    Interval,
    MultiPoly,
    UniPoly,
    gcd_uni,
    squarefree_part_multi,
    sturm_count,
)

F4_PARAMS = ("a", "b", "c", "d")


class SeedNotSmallEnough(ValueError):
    """Raised when an oval-side seed lands on the discriminant."""


class Membership(enum.Enum):
    NON_SINGULAR = "NonSingular"
    SIGMA0 = "Sigma0"
    SIGMA1 = "Sigma1"
    BOTH = "Both"

    def __str__(self) -> str:
        return self.value


_CLASS_RE = re.compile(r"^([+-]?)([BCF])([+-]?)(\d+)([+-]?)$")


@dataclass(frozen=True)
class SingularityClass:
    """One family member: B or C with Milnor number mu, or F4.

    ``sign`` is +1 or -1.  For even mu it is the coefficient of the
    quadratic normal-form term (y^2 for B, y^mu for C); for odd mu it
    is the global sign of the normal form; for F4 it is the sign of
    x^2.

    >>> SingularityClass.parse("B+4").label()
    'B+4'
    >>> SingularityClass.parse("C5-").expected_component_count()
    12
    >>> SingularityClass.parse("F4+").decomposition()
    ('A2', 'A2')
    """

    family: str
    mu: int
    sign: int

    def __post_init__(self):
        if self.family not in ("B", "C", "F4"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.family == "F4":
            if self.mu != 4:
                raise ValueError("F4 has Milnor number 4")
        elif self.mu < 2:
            raise ValueError("mu must be at least 2")

    @staticmethod
    def parse(text: str) -> "SingularityClass":
        m = _CLASS_RE.match(text.strip().upper())
        if not m:
            raise ValueError(f"cannot parse class {text!r}")
        pre, fam, mid, digits, post = m.groups()
        signs = [s for s in (pre, mid, post) if s]
        if len(signs) > 1:
            raise ValueError(f"ambiguous signs in class {text!r}")
        sign = -1 if signs and signs[0] == "-" else 1
        mu = int(digits)
        if fam == "F":
            if mu != 4:
                raise ValueError(f"unknown class {text!r}")
            return SingularityClass("F4", 4, sign)
        return SingularityClass(fam, mu, sign)

    # -- structure

    @property
    def is_even(self) -> bool:
        return self.mu % 2 == 0

    @property
    def k(self) -> int:
        return self.mu // 2

    @property
    def parameter_names(self) -> tuple[str, ...]:
        if self.family == "F4":
            return F4_PARAMS
        return tuple(f"l{i}" for i in range(1, self.mu + 1))

    @property
    def parameter_count(self) -> int:
        return 4 if self.family == "F4" else self.mu

    def label(self) -> str:
        s = "+" if self.sign > 0 else "-"
        if self.family == "F4":
            return f"F4{s}"
        return f"{self.family}{s}{self.mu}"

    def normal_form_text(self) -> str:
        if self.family == "F4":
            return "x^2 + y^3" if self.sign > 0 else "-x^2 + y^3"
        if self.family == "B":
            if self.is_even:
                return f"x^{self.mu} {'+' if self.sign > 0 else '-'} y^2"
            return (f"x^{self.mu} + y^2" if self.sign > 0
                    else f"-x^{self.mu} - y^2")
        if self.is_even:
            return f"x*y {'+' if self.sign > 0 else '-'} y^{self.mu}"
        return (f"x*y + y^{self.mu}" if self.sign > 0
                else f"-x*y - y^{self.mu}")

    # -- Table 1 metadata

    def expected_component_count(self) -> int:
        if self.family == "F4":
            return 8
        k = self.k
        return (k + 1) ** 2 if self.is_even else (k + 1) * (k + 2)

    def asymptotic_sector_count(self) -> int:
        """Unbounded components of the complement of the zero set of f0."""
        if self.family == "F4":
            return 1
        if self.family == "C":
            return 2
        if self.is_even:
            return 0 if self.sign > 0 else 2
        return 1

    def decomposition(self) -> tuple[str, str]:
        """Interior/boundary pair of ordinary singularity classes."""
        if self.family == "F4":
            return ("A2", "A2")
        if self.family == "B":
            return (f"A{self.mu - 1}", "A1")
        return ("A1", f"A{self.mu - 1}")


@dataclass(frozen=True)
class Parameter:
    """Point of a deformation parameter space, all entries rational."""

    values: tuple[Fraction, ...]

    @staticmethod
    def of(*vals) -> "Parameter":
        return Parameter(tuple(Fraction(v) for v in vals))

    @staticmethod
    def coerce(vals) -> "Parameter":
        if isinstance(vals, Parameter):
            return vals
        return Parameter(tuple(Fraction(v) for v in vals))

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def text_list(self) -> list[str]:
        return [str(v) for v in self.values]


def _check_arity(sc: SingularityClass, lam: Parameter) -> Parameter:
    if len(lam) != sc.parameter_count:
        raise ArityMismatch(
            f"{sc.label()} needs {sc.parameter_count} parameters, "
            f"got {len(lam)}")
    return lam


def boundary_polynomial(sc: SingularityClass, lam) -> UniPoly:
    """The univariate carrier of the discriminant conditions.

    For B this is h(x) with f = h(x) + s*y^2 (variable "x"); for C and
    F4 it is the boundary restriction f(0, y) (variable "y").

    >>> boundary_polynomial(SingularityClass.parse("B+4"),
    ...                     Parameter.of(0, 0, 0, -1)).text()
    'x^4 - 1'
    >>> boundary_polynomial(SingularityClass.parse("C-3"),
    ...                     Parameter.of(1, 0, 2)).text()
    '-y^3 + y^2 + 2'
    """
    lam = _check_arity(sc, Parameter.coerce(lam))
    if sc.family == "F4":
        a, b, c, d = lam
        return UniPoly("y", [d, b, 0, 1])
    mu = sc.mu
    if sc.family == "B":
        lead = 1 if sc.is_even else sc.sign
        var = "x"
    else:
        lead = sc.sign
        var = "y"
    coeffs = [lam[mu - 1 - i] for i in range(mu)] + [Fraction(lead)]
    return UniPoly(var, coeffs)


def deformation_polynomial(sc: SingularityClass, lam) -> MultiPoly:
    """The deformed function f as a polynomial in (x, y)."""
    lam = _check_arity(sc, Parameter.coerce(lam))
    x, y = MultiPoly.variables(("x", "y"))
    if sc.family == "F4":
        a, b, c, d = lam
        return (sc.sign * x * x + y ** 3 + a * x + b * y + c * x * y
                + MultiPoly.constant(("x", "y"), d))
    h = boundary_polynomial(sc, lam)
    if sc.family == "B":
        hx = sum((MultiPoly(("x", "y"), {(i, 0): c})
                  for i, c in enumerate(h.coeffs) if c != 0),
                 MultiPoly(("x", "y"), {}))
        return hx + sc.sign * y * y
    hy = sum((MultiPoly(("x", "y"), {(0, i): c})
              for i, c in enumerate(h.coeffs) if c != 0),
             MultiPoly(("x", "y"), {}))
    sxy = 1 if sc.is_even else sc.sign
    return sxy * x * y + hy


def deformation_generic(sc: SingularityClass) -> MultiPoly:
    """f with the deformation parameters as extra variables."""
    names = ("x", "y") + sc.parameter_names
    n = len(names)

    def mono(**exps) -> tuple[int, ...]:
        return tuple(exps.get(nm, 0) for nm in names)

    terms: dict[tuple[int, ...], Fraction] = {}

    def add(e, c):
        terms[e] = terms.get(e, Fraction(0)) + Fraction(c)

    if sc.family == "F4":
        add(mono(x=2), sc.sign)
        add(mono(y=3), 1)
        add(mono(x=1, a=1), 1)
        add(mono(y=1, b=1), 1)
        add(mono(x=1, y=1, c=1), 1)
        add(mono(d=1), 1)
        return MultiPoly(names, terms)
    mu = sc.mu
    main = "x" if sc.family == "B" else "y"
    lead = (1 if sc.is_even else sc.sign) if sc.family == "B" else sc.sign
    add(mono(**{main: mu}), lead)
    for i in range(1, mu + 1):
        add(mono(**{main: mu - i, f"l{i}": 1}), 1)
    if sc.family == "B":
        add(mono(y=2), sc.sign)
    else:
        add(mono(x=1, y=1), 1 if sc.is_even else sc.sign)
    return MultiPoly(names, terms)


def _has_real_multiple_root(h: UniPoly) -> bool:
    g = gcd_uni(h, h.derivative())
    return g.degree() > 0 and sturm_count(g, Interval.real_line()) > 0


def f4_reduce(lam) -> Parameter:
    """Parameter map realising the minus-to-plus class reduction."""
    a, b, c, d = Parameter.coerce(lam)
    return Parameter((-a, b, c, -d))


def discriminant_membership(sc: SingularityClass, lam) -> Membership:
    """Locate a parameter relative to the two discriminant strata.

    >>> sc = SingularityClass.parse("B+4")
    >>> discriminant_membership(sc, Parameter.of(0, -2, 0, -1)).value
    'NonSingular'
    >>> discriminant_membership(sc, Parameter.of(0, 0, 0, 0)).value
    'Both'
    """
    lam = _check_arity(sc, Parameter.coerce(lam))
    if sc.family == "F4":
        a, b, c, d = lam
        probe = f4_reduce(lam) if sc.sign < 0 else lam
        s0 = f4_sigma0_eliminant().eval(tuple(probe)) == 0
        s1 = 4 * b ** 3 + 27 * d ** 2 == 0
    else:
        h = boundary_polynomial(sc, lam)
        mult = _has_real_multiple_root(h)
        at_zero = h.constant_term() == 0
        if sc.family == "B":
            s0, s1 = mult, at_zero
        else:
            s0, s1 = at_zero, mult
    if s0 and s1:
        return Membership.BOTH
    if s0:
        return Membership.SIGMA0
    if s1:
        return Membership.SIGMA1
    return Membership.NON_SINGULAR


@lru_cache(maxsize=1)
def f4_sigma0_eliminant() -> MultiPoly:
    """The interior discriminant Delta_0 of the F4 deformation.

    Built from the plus-class critical point system: f_x = 0 gives
    x = -(a + c*y)/2; substituting into f = 0 and f_y = 0 leaves two
    polynomials in y whose resultant (normalised to be primitive and
    squarefree with positive leading sign in lex order a > b > c > d)
    is Delta_0.  Points with Delta_0 = 0 are exactly those whose
    deformation has an interior critical point on the zero level, or a
    degenerate critical point escaping the substitution.

    >>> f4_sigma0_eliminant().eval((-1, -3, 1, 2))
    Fraction(0, 1)
    """
    names = ("x", "y") + F4_PARAMS
    f = deformation_generic(SingularityClass("F4", 4, 1))
    fy = f.derivative("y")
    x, y, a, b, c, d = MultiPoly.variables(names)
    x_sol = (a + c * y) * Fraction(-1, 2)
    e1 = f.substitute("x", x_sol) * 4
    e2 = fy.substitute("x", x_sol) * 2
    e1 = e1.drop_variable("x")
    e2 = e2.drop_variable("x")
    from .exactpoly import resultant

    r = resultant(e1, e2, "y").drop_variable("y")
    r = squarefree_part_multi(r.primitive_part())
    if r.leading_sign() < 0:
        r = -r
    return r


@lru_cache(maxsize=1)
def f4_sigma1_polynomial() -> MultiPoly:
    """Boundary stratum of F4: the cubic y^3 + b*y + d degenerates."""
    _, b, _, d = MultiPoly.variables(F4_PARAMS)
    return 4 * b ** 3 + 27 * d ** 2


def xi0_point(y0, c) -> Parameter:
    """Point of the cuspidal edge Xi_0 of the F4 interior stratum.

    The interior critical point degenerates at y = y0 and the boundary
    cubic factors as (y - y0)^2 * (y + 2*y0).

    >>> xi0_point(1, 1).values
    (Fraction(-1, 1), Fraction(-3, 1), Fraction(1, 1), Fraction(2, 1))
    """
    y0, c = Fraction(y0), Fraction(c)
    return Parameter((-c * y0, -3 * y0 ** 2, c, 2 * y0 ** 3))


def f4_seed_oval_side(side: str, y0, eps, delta) -> Parameter:
    """Seed parameter whose zero set has an oval beside the boundary.

    Starting from the Xi_0 point at height y0 > 0, the degenerate
    critical point is resolved into a crossing by shifting x, then the
    function is raised to detach a small oval.  The sign of the shift
    and of the slope c select the side: the oval sits to the right of
    the boundary for side="right", to the left for side="left".  The
    slope magnitude must satisfy c^2 > 12*y0 for the critical point to
    resolve into a crossing rather than an extremum; the smallest such
    integer is used.

    eps and delta are positive magnitudes; they must be small (delta
    roughly below eps^2/4, eps below 1) for the oval to stay clear of
    the boundary.  SeedNotSmallEnough is raised when the constructed
    point lands on the discriminant; halve both and retry in that
    case.  Type membership of the result is checked by the classifier,
    not here.  The degenerate call eps = delta = 0 returns the Xi_0
    point itself without the membership check.

    >>> f4_seed_oval_side("left", 1, Fraction(1, 2), Fraction(1, 8)).values
    (Fraction(-3, 1), Fraction(-1, 1), Fraction(4, 1), Fraction(3, 8))
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    y0, eps, delta = Fraction(y0), Fraction(eps), Fraction(delta)
    if y0 <= 0 or eps < 0 or delta < 0 or (eps == 0) != (delta == 0):
        raise ValueError("y0 must be positive, eps and delta positive "
                         "or both zero")
    m = 1
    while m * m <= 12 * y0:
        m += 1
    s = 1 if side == "right" else -1
    c = Fraction(-s * m)
    e = s * eps
    a, b, _, d = xi0_point(y0, c)
    a2 = a - 2 * e
    b2 = b - c * e
    d2 = d + e * e - a * e + delta
    lam = Parameter((a2, b2, c, d2))
    if eps == 0:
        return lam
    sc = SingularityClass("F4", 4, 1)
    if discriminant_membership(sc, lam) is not Membership.NON_SINGULAR:
        raise SeedNotSmallEnough(
            f"seed {lam.text_list()} lies on the discriminant")
    return lam


def table1_metadata(sc: SingularityClass) -> dict:
    """Metadata row for the class, as reported by the CLI."""
    lead = sc.parameter_names
    terms = deformation_generic(sc)
    return {
        "class": sc.label(),
        "family": sc.family,
        "mu": sc.mu,
        "sign": "+" if sc.sign > 0 else "-",
        "normal_form": sc.normal_form_text(),
        "deformation": terms.text(),
        "parameters": list(lead),
        "decomposition": list(sc.decomposition()),
        "expected_components": sc.expected_component_count(),
        "asymptotic_sectors": sc.asymptotic_sector_count(),
    }
