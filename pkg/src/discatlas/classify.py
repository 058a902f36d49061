"""Topological classification of nonsingular lower-value sets.

For a parameter off the discriminant the set W(lambda) = {f <= 0} meets
the boundary x = 0 transversally and its topology is captured by small
combinatorial invariants, computed here with exact arithmetic only.

B and C classes.  The boundary polynomial h is the univariate carrier
of everything: for B the pair W(lambda) is fibred over {h <= 0} (or
{h >= 0}), and for C the zero set is the graph x = -h(y)/(s*y).  Off
the discriminant all real roots of h are simple and nonzero, so the
pair of counts (p, q) of negative and positive real roots determines
the topological type, and every valid pair with p + q = mu mod 2 is
realised by an explicit integer-rooted representative.

F4.  Writing the deformation as x^2 + (a + c*y)*x + P(y) with boundary
cubic P(y) = y^3 + b*y + d, the zero set consists of the graphs
x = (-(a + c*y) +- sqrt(g(y)))/2 over {g >= 0}, where
g(y) = (a + c*y)^2 - 4*P(y) is a downward cubic.  Off Sigma_0 the set
{g >= 0} is either one branch support (-oo, r1] or a branch plus a
compact oval support [r2, r3].  Off Sigma_1 the boundary meets the
curve in 1 or 3 points, the roots of P, and each crossing y* satisfies
g(y*) = (a + c*y*)^2 > 0 unless f_x vanishes there, the nongeneric
wall where the crossing-sign labels degenerate (the topology does not
change across that wall, which is why the catalogue below quotients
some labels away).

The descriptor records the boundary crossings in ascending order, each
tagged Branch or Oval by which support interval of g it falls in and
by the sign of f_x there, plus the oval state: Absent, Crossed (the
oval meets the boundary, necessarily in exactly two of the crossings),
or Left/Right of the boundary.  The side is the sign of the midline
x = -(a + c*y)/2 sampled at an exact rational point strictly between
r2 and r3; an uncrossed oval has P > 0 on its support, so the two
sheets have equal sign and the midline cannot vanish there.

Only eight descriptor classes occur, matching the eight connected
components of the complement of the discriminant:

    1  one crossing, no oval         5  one crossing, oval left
    2  three crossings, no oval,     6  oval crossed
       middle f_x negative           7  three crossings, oval right
    3  three crossings, no oval,     8  three crossings, oval left
       middle f_x positive
    4  one crossing, oval right

Two geometric constraints cut the a-priori candidate space down:
a single crossing with a crossed oval is impossible (P < 0 left of the
sole root forces g > 0 there, so the oval would lie below it,
uncrossed), and along the branch path the crossing signs alternate
with the traversal direction, pinning the sign patterns that occur
with three branch crossings.  The identifiers above are a fixed
convention of this package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactpoly import (
    Interval,
    UniPoly,
    isolate_real_roots,
    refine_root,
    root_signature,
)
from .models import (
    Membership,
    Parameter,
    SingularityClass,
    boundary_polynomial,
    discriminant_membership,
    f4_reduce,
    f4_seed_oval_side,
)


class DiscriminantParameter(ValueError):
    """Raised when a parameter to classify lies on the discriminant."""


class NonGenericConfiguration(ValueError):
    """Raised when f_x vanishes at a boundary crossing (label wall)."""


class CatalogMissing(LookupError):
    """Raised when the realized-type catalogue cannot be assembled."""


@dataclass(frozen=True)
class BCSignature:
    """Counts of negative and positive real roots of the boundary carrier.

    >>> BCSignature(1, 2).key()
    'p1q2'
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("root counts must be nonnegative")

    def json_obj(self) -> dict:
        return {"p": self.p, "q": self.q}

    def key(self) -> str:
        return f"p{self.p}q{self.q}"


@dataclass(frozen=True)
class F4Descriptor:
    """Boundary crossings (ascending) with f_x signs, plus oval state.

    ``roots`` entries are ("B" | "O", "+" | "-"): Branch or Oval
    crossing and the sign of f_x there.  ``oval`` is one of "A"
    (absent), "L", "R" (present, uncrossed, on that side of the
    boundary) or "C" (crossed).  Branch crossings precede oval
    crossings, the oval is crossed iff exactly two crossings are
    oval-tagged, and a sided oval has none.

    >>> F4Descriptor((("B", "+"),), "A").key()
    'B+:A'
    """

    roots: tuple[tuple[str, str], ...]
    oval: str

    def __post_init__(self):
        if len(self.roots) not in (1, 3):
            raise ValueError("boundary crossing count must be 1 or 3")
        if self.oval not in ("A", "L", "R", "C"):
            raise ValueError(f"bad oval state {self.oval!r}")
        seen_oval = False
        n_oval = 0
        for kind, sign in self.roots:
            if kind not in ("B", "O") or sign not in ("+", "-"):
                raise ValueError(f"bad root tag {(kind, sign)!r}")
            if kind == "O":
                seen_oval = True
                n_oval += 1
            elif seen_oval:
                raise ValueError("branch crossings must precede oval ones")
        if (self.oval == "C") != (n_oval == 2):
            raise ValueError("crossed oval needs exactly two oval crossings")
        if self.oval != "C" and n_oval:
            raise ValueError("oval crossings without a crossed oval")

    def json_obj(self) -> dict:
        return {"roots": [list(t) for t in self.roots], "oval": self.oval}

    def key(self) -> str:
        return "".join(k + s for k, s in self.roots) + ":" + self.oval


LowerSetType = BCSignature | F4Descriptor


def type_key(t: LowerSetType) -> str:
    """Canonical report key: the quotient class, not the raw labels."""
    if isinstance(t, BCSignature):
        return t.key()
    return f"type{canonical_type_id(t)}"


def type_json(t: LowerSetType) -> dict:
    return t.json_obj()


def classify_bc(sc: SingularityClass, lam) -> BCSignature:
    """Signature (p, q) of a nonsingular B- or C-class parameter.

    >>> sc = SingularityClass.parse("B+3")
    >>> classify_bc(sc, Parameter.of(-2, -1, 2)).json_obj()
    {'p': 1, 'q': 2}
    """
    if sc.family not in ("B", "C"):
        raise ValueError("classify_bc handles B and C classes")
    lam = Parameter.coerce(lam)
    member = discriminant_membership(sc, lam)
    if member is not Membership.NON_SINGULAR:
        raise DiscriminantParameter(
            f"{sc.label()} parameter lies on {member.value}")
    sig = root_signature(boundary_polynomial(sc, lam))
    return BCSignature(sig.neg, sig.pos)


# ---------------------------------------------------------------------------
# exact root ordering helpers


class _IsolatedRoot:
    """A real algebraic number as a shrinking isolating interval."""

    __slots__ = ("poly", "iv")

    def __init__(self, poly: UniPoly, iv: Interval):
        self.poly = poly
        self.iv = iv

    def refine(self) -> None:
        if not self.iv.is_point():
            w = self.iv.width() / 4
            self.iv = refine_root(self.poly, self.iv, w)

    def bounds(self) -> tuple[Fraction, Fraction]:
        return self.iv.lo, self.iv.hi

    def compare(self, other: "_IsolatedRoot") -> int:
        """-1, 0, +1 ordering; 0 only for equal point intervals."""
        for _ in range(512):
            alo, ahi = self.bounds()
            blo, bhi = other.bounds()
            if ahi < blo or (ahi == blo and not (self.iv.is_point()
                                                 and other.iv.is_point())):
                return -1
            if bhi < alo or (bhi == alo and not (self.iv.is_point()
                                                 and other.iv.is_point())):
                return 1
            if self.iv.is_point() and other.iv.is_point():
                return 0
            self.refine()
            other.refine()
        raise RuntimeError("root comparison failed to separate")

    def compare_rational(self, r: Fraction) -> int:
        """Position of the root relative to an exact rational non-root."""
        for _ in range(512):
            lo, hi = self.bounds()
            if self.iv.is_point():
                return -1 if lo < r else (1 if lo > r else 0)
            if hi <= r:
                return -1
            if lo >= r:
                return 1
            self.refine()
        raise RuntimeError("root comparison failed to separate")


def _isolated(poly: UniPoly) -> list[_IsolatedRoot]:
    return [_IsolatedRoot(poly, iv)
            for iv in isolate_real_roots(poly, Fraction(1, 4))]


def classify_f4(sc: SingularityClass, lam) -> F4Descriptor:
    """Exact descriptor of a nonsingular F4 parameter.

    The minus class is classified through its plus-class reduction
    (a, b, c, d) -> (-a, b, c, -d), under which the lower-value sets
    correspond by the flip y -> -y.

    >>> sc = SingularityClass.parse("F4+")
    >>> classify_f4(sc, Parameter.of(1, 1, 0, 0)).key()
    'B+:A'
    >>> classify_f4(sc, Parameter.of(3, -3, 0, 3)).key()
    'B+:L'
    """
    if sc.family != "F4":
        raise ValueError("classify_f4 handles the F4 classes")
    lam = Parameter.coerce(lam)
    member = discriminant_membership(sc, lam)
    if member is not Membership.NON_SINGULAR:
        raise DiscriminantParameter(
            f"{sc.label()} parameter lies on {member.value}")
    if sc.sign < 0:
        lam = f4_reduce(lam)
    a, b, c, d = lam

    # nongeneric wall: f_x = a + c*y vanishes at some boundary root
    P = UniPoly("y", [d, b, 0, 1])
    if c == 0:
        if a == 0:
            raise NonGenericConfiguration("f_x vanishes on the boundary")
    elif P(-a / c) == 0:
        raise NonGenericConfiguration("f_x vanishes at a boundary crossing")

    g = UniPoly("y", [a * a - 4 * d, 2 * a * c - 4 * b, c * c, -4])
    p_roots = _isolated(P)
    g_roots = _isolated(g)
    assert len(p_roots) in (1, 3) and len(g_roots) in (1, 3)

    def fx_sign(root: _IsolatedRoot) -> str:
        if c == 0:
            return "+" if a > 0 else "-"
        rel = root.compare_rational(Fraction(-a, c))
        s = (1 if c > 0 else -1) * rel
        return "+" if s > 0 else "-"

    tags: list[tuple[str, str]] = []
    if len(g_roots) == 1:
        tags = [("B", fx_sign(r)) for r in p_roots]
        return F4Descriptor(tuple(tags), "A")

    r1, r2, r3 = g_roots
    n_on_oval = 0
    for r in p_roots:
        # each crossing has g > 0, so it sits left of r1 or between r2, r3
        if r.compare(r1) < 0:
            tags.append(("B", fx_sign(r)))
        else:
            tags.append(("O", fx_sign(r)))
            n_on_oval += 1
    if n_on_oval:
        return F4Descriptor(tuple(tags), "C")
    # exact rational point strictly inside the oval support
    while not (r2.bounds()[1] < r3.bounds()[0]):
        r2.refine()
        r3.refine()
    y_mid = (r2.bounds()[1] + r3.bounds()[0]) / 2
    xc = -(a + c * y_mid) / 2
    if xc == 0:
        raise NonGenericConfiguration("midline vanishes inside the oval")
    return F4Descriptor(tuple(tags), "R" if xc > 0 else "L")


def classify(sc: SingularityClass, lam) -> LowerSetType:
    """Dispatch to the family classifier."""
    if sc.family == "F4":
        return classify_f4(sc, lam)
    return classify_bc(sc, lam)


def canonical_type_id(d: F4Descriptor) -> int:
    """Quotient a descriptor to its component type id (1..8).

    The f_x sign labels are not constant on components: they flip on
    the nongeneric wall, which a component may cross.  What is constant
    is the crossing count, the oval state, and (with three branch
    crossings and no oval) the sign at the middle crossing, whose root
    stays bounded away from the wall by the outer two.
    """
    n = len(d.roots)
    if n == 1:
        return {"A": 1, "R": 4, "L": 5}[d.oval]
    if d.oval == "C":
        return 6
    if d.oval == "A":
        return 2 if d.roots[1][1] == "-" else 3
    return 7 if d.oval == "R" else 8


def candidate_descriptors() -> list[F4Descriptor]:
    """The a-priori descriptor space permitted by the local invariants.

    One or three transversal crossings; a crossed oval carries exactly
    the top two crossings; a sided oval carries none.  38 candidates;
    sampling realises far fewer (see :func:`realized_catalog`).
    """
    out: list[F4Descriptor] = []
    for signs in itertools.product("+-"):
        for oval in ("A", "L", "R"):
            out.append(F4Descriptor((("B", signs[0]),), oval))
    for signs in itertools.product("+-", repeat=3):
        for oval in ("A", "L", "R"):
            out.append(F4Descriptor(
                tuple(("B", s) for s in signs), oval))
    for signs in itertools.product("+-", repeat=3):
        out.append(F4Descriptor(
            (("B", signs[0]), ("O", signs[1]), ("O", signs[2])), "C"))
    out.sort(key=lambda d: (len(d.roots), d.oval, d.roots))
    return out


F4_SEEDS: tuple[tuple[int, Parameter], ...] = (
    (1, Parameter.of(1, 1, 0, 0)),
    (2, Parameter.of(-2, -1, 0, 0)),
    (3, Parameter.of(2, -1, 0, 0)),
    (4, Parameter.of(-1, -1, 0, Fraction(1, 2))),
    (5, Parameter.of(1, -1, 0, Fraction(1, 2))),
    (6, Parameter.of(1, -1, 0, 0)),
)


def f4_side_seeds() -> tuple[tuple[int, Parameter], ...]:
    """The two off-slice seeds, built from the cuspidal edge of Sigma_0."""
    return (
        (7, f4_seed_oval_side("right", 1, Fraction(1, 2), Fraction(1, 8))),
        (8, f4_seed_oval_side("left", 1, Fraction(1, 2), Fraction(1, 8))),
    )


@lru_cache(maxsize=1)
def realized_catalog() -> dict[F4Descriptor, int]:
    """Map from representative descriptors to the eight type ids.

    Assembled by classifying fixed seed parameters: six on the slice
    c = 0 and two beside the cuspidal edge of the interior stratum.
    Raises CatalogMissing if the seeds fail to realise eight distinct
    types, which would indicate a defect in the classifier.
    """
    sc = SingularityClass("F4", 4, 1)
    cat: dict[F4Descriptor, int] = {}
    for tid, lam in F4_SEEDS + f4_side_seeds():
        try:
            desc = classify_f4(sc, lam)
        except (DiscriminantParameter, NonGenericConfiguration) as e:
            raise CatalogMissing(f"seed for type {tid} failed: {e}") from e
        if canonical_type_id(desc) != tid:
            raise CatalogMissing(
                f"seed for type {tid} classified as "
                f"{canonical_type_id(desc)}")
        cat[desc] = tid
    if sorted(cat.values()) != list(range(1, 9)):
        raise CatalogMissing("seeds did not realise eight distinct types")
    return dict(sorted(cat.items(), key=lambda kv: kv[1]))


def catalog_id(d: F4Descriptor) -> int:
    """Type id of a descriptor, checked against the catalogue."""
    cat = realized_catalog()
    tid = canonical_type_id(d)
    if tid not in cat.values():
        raise CatalogMissing(f"type {tid} not in the catalogue")
    return tid
