"""Deterministic SVG figures: zero sets and parameter slices.

Zero sets are drawn from the closed-form branch solutions rather than
generic implicit contouring: the families are solvable for one
variable (B: y = +-sqrt(-h(x)/s); C: x = -h(y)/(sigma*y); F4 the
quadratic formula in x), so plotted points satisfy the equation up to
square-root rounding.  Square roots are dyadic rationals obtained from
integer isqrt, every emitted point is checked exactly against
|f| < 10^-6, and all coordinates are formatted with fixed precision,
making the output byte-deterministic.

The lower-value set W = {f <= 0} is shaded by exact sign sampling on
the viewport grid, and the boundary line x = 0 is dashed.  Parameter
slices contour the stratum-defining polynomials (evaluated exactly at
the grid nodes) with marching squares in two distinct strokes.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .models import (
    Parameter,
    SingularityClass,
    boundary_polynomial,
    deformation_polynomial,
    f4_reduce,
    f4_sigma0_eliminant,
)
from .exactpoly import UniPoly, discriminant

RESIDUAL_BOUND = Fraction(1, 10 ** 6)
_SQRT_BITS = 40


class EmptyViewport(ValueError):
    """Raised for degenerate axis ranges."""


class BadAxes(ValueError):
    """Raised when a slice request does not leave exactly two axes free."""


@dataclass(frozen=True)
class Viewport:
    xmin: Fraction
    xmax: Fraction
    ymin: Fraction
    ymax: Fraction
    width: int = 480
    height: int = 480
    samples: int = 129

    def __post_init__(self):
        for f in ("xmin", "xmax", "ymin", "ymax"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))
        if self.xmin >= self.xmax or self.ymin >= self.ymax:
            raise EmptyViewport("axis ranges must be nonempty")
        if self.samples < 16:
            raise ValueError("need at least 16 samples per axis")
        if self.width < 32 or self.height < 32:
            raise ValueError("pixel dimensions too small")

    def xs(self) -> list[Fraction]:
        n = self.samples
        return [self.xmin + (self.xmax - self.xmin) * Fraction(i, n - 1)
                for i in range(n)]

    def ys(self) -> list[Fraction]:
        n = self.samples
        return [self.ymin + (self.ymax - self.ymin) * Fraction(j, n - 1)
                for j in range(n)]

    def to_px(self, x, y) -> tuple[float, float]:
        fx = (x - self.xmin) / (self.xmax - self.xmin)
        fy = (self.ymax - y) / (self.ymax - self.ymin)
        return (float(fx) * self.width, float(fy) * self.height)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def dyadic_sqrt(v: Fraction, bits: int = _SQRT_BITS) -> Fraction:
    """Floor square root of v >= 0 as a dyadic rational, error < 2^-bits."""
    if v < 0:
        raise ValueError("negative radicand")
    n, d = v.numerator, v.denominator
    # sqrt(n/d) = sqrt(n*d)/d; scale so the integer sqrt carries the bits
    s = math.isqrt(n * d << (2 * bits))
    return Fraction(s, d << bits)


def _residual_ok(F, x: Fraction, y: Fraction) -> bool:
    return abs(F.eval((x, y))) < RESIDUAL_BOUND


def _refine_edge(val, lo: Fraction, hi: Fraction) -> Fraction | None:
    """Bisect a sign change of val on [lo, hi] down to width 2^-45."""
    vlo, vhi = val(lo), val(hi)
    if vlo == 0:
        return lo
    if vhi == 0:
        return hi
    if (vlo > 0) == (vhi > 0):
        return None
    target = (hi - lo) / (1 << 45)
    while hi - lo > target:
        mid = (lo + hi) / 2
        vm = val(mid)
        if vm == 0:
            return mid
        if (vm > 0) == (vlo > 0):
            lo, vlo = mid, vm
        else:
            hi = mid
    return (lo + hi) / 2


def curve_points(sc: SingularityClass, lam, vp: Viewport
                 ) -> list[list[tuple[Fraction, Fraction]]]:
    """Polylines of the zero set, as exact rational plot points.

    Every returned point satisfies |f(x, y)| < 10^-6 exactly.  Branches
    are split where their domain condition fails; at such edges the
    tangency ordinate is refined by bisection so curves close up.
    """
    lam = Parameter.coerce(lam)
    F = deformation_polynomial(sc, lam)
    polylines: list[list[tuple[Fraction, Fraction]]] = []

    def emit(line: list[tuple[Fraction, Fraction]]):
        if len(line) >= 2:
            polylines.append(line)

    if sc.family == "B":
        h = boundary_polynomial(sc, lam)
        s = sc.sign

        def val(x: Fraction) -> Fraction:
            return -s * h(x)

        upper: list[tuple[Fraction, Fraction]] = []
        lower: list[tuple[Fraction, Fraction]] = []
        prev_x = None
        for x in vp.xs():
            v = val(x)
            if v >= 0:
                if not upper and prev_x is not None:
                    edge = _refine_edge(val, prev_x, x)
                    if edge is not None and _residual_ok(F, edge, Fraction(0)):
                        upper.append((edge, Fraction(0)))
                        lower.append((edge, Fraction(0)))
                y = dyadic_sqrt(v)
                if _residual_ok(F, x, y):
                    upper.append((x, y))
                    lower.append((x, -y))
            else:
                if upper:
                    edge = _refine_edge(val, prev_x, x)
                    if edge is not None and _residual_ok(F, edge, Fraction(0)):
                        upper.append((edge, Fraction(0)))
                        lower.append((edge, Fraction(0)))
                emit(upper)
                emit(list(reversed(lower)))
                upper, lower = [], []
            prev_x = x
        emit(upper)
        emit(list(reversed(lower)))

    elif sc.family == "C":
        h = boundary_polynomial(sc, lam)
        sigma = 1 if sc.is_even else sc.sign
        clip = 2 * (vp.xmax - vp.xmin) + abs(vp.xmin) + abs(vp.xmax)
        line: list[tuple[Fraction, Fraction]] = []
        for y in vp.ys():
            if y == 0:
                emit(line)
                line = []
                continue
            x = -h(y) / (sigma * y)
            if abs(x) > clip:
                emit(line)
                line = []
                continue
            line.append((x, y))
        emit(line)

    else:
        a, b, c, d = lam
        s = sc.sign
        P = UniPoly("y", [d, b, 0, 1])

        def disc(y: Fraction) -> Fraction:
            t = a + c * y
            return t * t - 4 * s * P(y)

        plus: list[tuple[Fraction, Fraction]] = []
        minus: list[tuple[Fraction, Fraction]] = []
        prev_y = None

        def tangent_point(edge: Fraction) -> tuple[Fraction, Fraction]:
            return (-(a + c * edge) / (2 * s), edge)

        for y in vp.ys():
            v = disc(y)
            if v >= 0:
                if not plus and prev_y is not None:
                    edge = _refine_edge(disc, prev_y, y)
                    if edge is not None:
                        pt = tangent_point(edge)
                        if _residual_ok(F, *pt):
                            plus.append(pt)
                            minus.append(pt)
                r = dyadic_sqrt(v)
                xp = (-(a + c * y) + r) / (2 * s)
                xm = (-(a + c * y) - r) / (2 * s)
                if _residual_ok(F, xp, y):
                    plus.append((xp, y))
                if _residual_ok(F, xm, y):
                    minus.append((xm, y))
            else:
                if plus:
                    edge = _refine_edge(disc, prev_y, y)
                    if edge is not None:
                        pt = tangent_point(edge)
                        if _residual_ok(F, *pt):
                            plus.append(pt)
                            minus.append(pt)
                emit(plus)
                emit(list(reversed(minus)))
                plus, minus = [], []
            prev_y = y
        emit(plus)
        emit(list(reversed(minus)))

    return polylines


def boundary_crossings(polylines) -> int:
    """Sign reversals of the x coordinate along the plotted curves."""
    n = 0
    for line in polylines:
        signs = []
        for x, _ in line:
            s = (x > 0) - (x < 0)
            if not signs or signs[-1] != s:
                signs.append(s)
        # a zero between opposite signs is the same single crossing
        compact = [s for s in signs if s != 0]
        n += sum(1 for a, b in zip(compact, compact[1:]) if a != b)
    return n


def lower_region_rects(sc: SingularityClass, lam, vp: Viewport
                       ) -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
    """Cell rectangles (x0, y0, x1, y1) covering sampled {f <= 0} runs."""
    lam = Parameter.coerce(lam)
    F = deformation_polynomial(sc, lam)
    xs, ys = vp.xs(), vp.ys()
    dx = (vp.xmax - vp.xmin) / (vp.samples - 1)
    dy = (vp.ymax - vp.ymin) / (vp.samples - 1)
    rects = []
    for y in ys:
        run_start = None
        for i, x in enumerate(xs + [None]):
            inside = x is not None and F.eval((x, y)) <= 0
            if inside and run_start is None:
                run_start = x
            elif not inside and run_start is not None:
                x_end = xs[i - 1]
                rects.append((run_start - dx / 2, y - dy / 2,
                              x_end + dx / 2, y + dy / 2))
                run_start = None
    return rects


# ---------------------------------------------------------------------------
# SVG assembly


def _svg_header(vp: Viewport) -> str:
    return ('<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{vp.width}" height="{vp.height}" '
            f'viewBox="0 0 {vp.width} {vp.height}">\n'
            f'<rect width="{vp.width}" height="{vp.height}" fill="#ffffff"/>')


def _axis_lines(vp: Viewport) -> list[str]:
    out = []
    if vp.ymin < 0 < vp.ymax:
        _, py = vp.to_px(vp.xmin, Fraction(0))
        out.append(f'<line x1="0" y1="{_fmt(py)}" x2="{vp.width}" '
                   f'y2="{_fmt(py)}" stroke="#bbbbbb" stroke-width="0.8"/>')
    return out


def _boundary_line(vp: Viewport) -> list[str]:
    if not (vp.xmin < 0 < vp.xmax):
        return []
    px, _ = vp.to_px(Fraction(0), vp.ymin)
    return [f'<line x1="{_fmt(px)}" y1="0" x2="{_fmt(px)}" '
            f'y2="{vp.height}" stroke="#000000" stroke-width="1.2" '
            'stroke-dasharray="4,3"/>']


def _polyline_elements(vp: Viewport, polylines, stroke: str,
                       width: str = "1.6") -> list[str]:
    out = []
    for line in polylines:
        pts = " ".join("%s,%s" % tuple(map(_fmt, vp.to_px(x, y)))
                       for x, y in line)
        out.append(f'<polyline points="{pts}" fill="none" '
                   f'stroke="{stroke}" stroke-width="{width}"/>')
    return out


def render_zero_set(sc: SingularityClass, lam, vp: Viewport | None = None
                    ) -> str:
    """SVG document of {f = 0} with the lower-value set shaded.

    Discriminant parameters render fine; only the picture degenerates.
    """
    lam = Parameter.coerce(lam)
    vp = vp or default_viewport(sc, lam)
    parts = [_svg_header(vp)]
    rects = lower_region_rects(sc, lam, vp)
    parts.append('<g fill="#9ecae1" fill-opacity="0.45" stroke="none">')
    for x0, y0, x1, y1 in rects:
        px0, py1 = vp.to_px(x0, y0)
        px1, py0 = vp.to_px(x1, y1)
        parts.append(f'<rect x="{_fmt(px0)}" y="{_fmt(py0)}" '
                     f'width="{_fmt(px1 - px0)}" '
                     f'height="{_fmt(py1 - py0)}"/>')
    parts.append("</g>")
    parts.extend(_axis_lines(vp))
    parts.extend(_polyline_elements(vp, curve_points(sc, lam, vp), "#1f3d7a"))
    parts.extend(_boundary_line(vp))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def default_viewport(sc: SingularityClass, lam) -> Viewport:
    lam = Parameter.coerce(lam)
    r = Fraction(2) + max(abs(v) for v in lam)
    r = min(r, Fraction(8))
    return Viewport(-r, r, -r, r)


def figure_filename(sc: SingularityClass, lam) -> str:
    lam = Parameter.coerce(lam)
    tag = f"{sc.label()}|" + ",".join(str(v) for v in lam)
    digest = hashlib.sha256(tag.encode()).hexdigest()[:12]
    return f"{sc.label()}_{digest}.svg"


def write_figure(sc: SingularityClass, lam, out_dir,
                 vp: Viewport | None = None) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / figure_filename(sc, lam)
    path.write_text(render_zero_set(sc, lam, vp))
    return path


# ---------------------------------------------------------------------------
# parameter slices


def _slice_stratum_values(sc: SingularityClass, lam: Parameter
                          ) -> tuple[Fraction, Fraction]:
    """Exact values of the (Sigma0, Sigma1) defining polynomials."""
    if sc.family == "F4":
        probe = f4_reduce(lam) if sc.sign < 0 else lam
        _, b, _, d = lam
        return (f4_sigma0_eliminant().eval(tuple(probe)),
                4 * b ** 3 + 27 * d ** 2)
    h = boundary_polynomial(sc, lam)
    mult = discriminant(h)
    at_zero = h.constant_term()
    if sc.family == "B":
        return (mult, at_zero)
    return (at_zero, mult)


_MS_EDGES = {1: (3, 0), 2: (0, 1), 3: (3, 1), 4: (1, 2), 6: (0, 2),
             7: (3, 2), 8: (2, 3), 9: (2, 0), 11: (2, 1), 12: (1, 3),
             13: (1, 0), 14: (0, 3)}


def _contour_segments(vals, xs, ys):
    """Marching squares segments for the zero level of a value grid."""
    segs = []
    fv = [[float(v) for v in row] for row in vals]

    def cross(va, vb, pa, pb):
        t = va / (va - vb)
        return (pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1]))

    for j in range(len(ys) - 1):
        for i in range(len(xs) - 1):
            c = [fv[j][i], fv[j][i + 1], fv[j + 1][i + 1], fv[j + 1][i]]
            p = [(float(xs[i]), float(ys[j])),
                 (float(xs[i + 1]), float(ys[j])),
                 (float(xs[i + 1]), float(ys[j + 1])),
                 (float(xs[i]), float(ys[j + 1]))]
            m = sum(1 << k for k in range(4) if c[k] > 0)
            if m in (0, 15):
                continue

            def edge_point(e):
                a, b = e, (e + 1) % 4
                return cross(c[a], c[b], p[a], p[b])

            if m in (5, 10):
                center = sum(c) / 4
                # split the saddle consistently with the centre sign
                if (m == 5) == (center > 0):
                    pairs = [(3, 0), (1, 2)]
                else:
                    pairs = [(0, 1), (2, 3)]
                for ea, eb in pairs:
                    segs.append((edge_point(ea), edge_point(eb)))
                continue
            ea, eb = _MS_EDGES[m]
            segs.append((edge_point(ea), edge_point(eb)))
    return segs


def render_parameter_slice(sc: SingularityClass, fixed: dict, axes,
                           vp: Viewport | None = None) -> str:
    """SVG contours of the two strata on a 2-parameter slice.

    ``fixed`` assigns rationals to all parameters except the two in
    ``axes``, which sweep the viewport (first axis horizontal).
    """
    names = sc.parameter_names
    axes = tuple(axes)
    if (len(axes) != 2 or axes[0] == axes[1]
            or any(a not in names for a in axes)):
        raise BadAxes(f"axes must be two distinct of {names}")
    free = [n for n in names if n not in fixed]
    if sorted(free) != sorted(axes):
        raise BadAxes(
            f"fixed assignment must cover exactly {set(names) - set(axes)}")
    fixed = {k: Fraction(v) for k, v in fixed.items()}
    vp = vp or Viewport(-3, 3, -3, 3)
    xs, ys = vp.xs(), vp.ys()
    grid0, grid1 = [], []
    for yv in ys:
        row0, row1 = [], []
        for xv in xs:
            point = {**fixed, axes[0]: xv, axes[1]: yv}
            lam = Parameter(tuple(point[n] for n in names))
            v0, v1 = _slice_stratum_values(sc, lam)
            row0.append(v0)
            row1.append(v1)
        grid0.append(row0)
        grid1.append(row1)

    parts = [_svg_header(vp)]
    parts.extend(_axis_lines(vp))
    for grid, stroke in ((grid0, "#b2182b"), (grid1, "#2166ac")):
        parts.append(f'<g stroke="{stroke}" stroke-width="1.4" fill="none">')
        for (xa, ya), (xb, yb) in _contour_segments(grid, xs, ys):
            pa = vp.to_px(xa, ya)
            pb = vp.to_px(xb, yb)
            parts.append(f'<line x1="{_fmt(pa[0])}" y1="{_fmt(pa[1])}" '
                         f'x2="{_fmt(pb[0])}" y2="{_fmt(pb[1])}"/>')
        parts.append("</g>")
    parts.append(f'<text x="{vp.width - 24}" y="{vp.height - 8}" '
                 f'font-size="12" fill="#333333">{axes[0]}</text>')
    parts.append(f'<text x="8" y="16" font-size="12" '
                 f'fill="#333333">{axes[1]}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def slice_filename(sc: SingularityClass, fixed: dict, axes) -> str:
    tag = (f"{sc.label()}|slice|{axes[0]},{axes[1]}|"
           + ",".join(f"{k}={Fraction(v)}" for k, v in sorted(fixed.items())))
    digest = hashlib.sha256(tag.encode()).hexdigest()[:12]
    return f"{sc.label()}_slice_{axes[0]}{axes[1]}_{digest}.svg"


def write_slice(sc: SingularityClass, fixed: dict, axes, out_dir,
                vp: Viewport | None = None) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / slice_filename(sc, fixed, axes)
    path.write_text(render_parameter_slice(sc, fixed, axes, vp))
    return path
