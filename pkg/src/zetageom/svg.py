"""Minimal deterministic SVG emission for Argand diagrams, limacons,
error scatters, surface grids and Landau tables.

No plotting library: plots are assembled from polyline/line/circle/rect
elements so tests can assert on vertex data, and byte-identical output is
guaranteed for identical inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional
from xml.sax.saxutils import escape

from .errors import DomainError

_MAX_POINTS = 1_000_000


@dataclass
class RenderSpec:
    kind: str                      # argand | limacon | error_scatter | surface_grid | landau
    out_path: str
    sigma: float = 0.5
    t: float = 0.0
    n_lo: int = 1
    n_hi: int = 1
    stride: int = 1
    gram_lo: int = 0
    gram_hi: int = 0
    t_lo: float = 0.0
    t_hi: float = 0.0
    grid: int = 200
    width: int = 800
    height: int = 800
    max_points: int = 100_000
    extras: dict = field(default_factory=dict)

    def validate(self):
        if self.kind not in ("argand", "limacon", "error_scatter",
                             "surface_grid", "landau"):
            raise DomainError(f"unknown render kind {self.kind!r}")
        if self.max_points > _MAX_POINTS:
            raise DomainError(f"max_points capped at {_MAX_POINTS}")


def _fmt(x: float) -> str:
    return f"{x:.3f}"


class _Canvas:
    def __init__(self, width: int, height: int):
        self.width = width
        self.height = height
        self.parts = [
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
            f'height="{height}" viewBox="0 0 {width} {height}">\n'
        ]

    def transform_for(self, xs, ys, margin: float = 0.05):
        xmin, xmax = min(xs), max(xs)
        ymin, ymax = min(ys), max(ys)
        span_x = (xmax - xmin) or 1.0
        span_y = (ymax - ymin) or 1.0
        scale = min(self.width * (1 - 2 * margin) / span_x,
                    self.height * (1 - 2 * margin) / span_y)
        x0 = 0.5 * (xmin + xmax)
        y0 = 0.5 * (ymin + ymax)

        def to_px(x, y):
            return (self.width / 2 + (x - x0) * scale,
                    self.height / 2 - (y - y0) * scale)

        return to_px

    def polyline(self, pts, color="black", width=1.0, dashed=False):
        d = ' stroke-dasharray="6,4"' if dashed else ""
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        self.parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="{width}"'
            f'{d} points="{coords}"/>\n')

    def line(self, p1, p2, color="black", width=1.0):
        self.parts.append(
            f'<line x1="{_fmt(p1[0])}" y1="{_fmt(p1[1])}" x2="{_fmt(p2[0])}" '
            f'y2="{_fmt(p2[1])}" stroke="{color}" stroke-width="{width}"/>\n')

    def circle(self, p, r=2.0, color="red"):
        self.parts.append(
            f'<circle cx="{_fmt(p[0])}" cy="{_fmt(p[1])}" r="{r}" '
            f'fill="{color}"/>\n')

    def rect(self, p, w, h, color):
        self.parts.append(
            f'<rect x="{_fmt(p[0])}" y="{_fmt(p[1])}" width="{_fmt(w)}" '
            f'height="{_fmt(h)}" fill="{color}"/>\n')

    def title(self, text: str):
        self.parts.append(f"<title>{escape(text)}</title>\n")

    def tostring(self) -> str:
        return "".join(self.parts) + "</svg>\n"


def render_argand(spec: RenderSpec) -> str:
    """Polyline of cumulative sums; vertices are the ArgandStream cumulative
    values after stride-downsampling to at most max_points records."""
    from .argand import dump_steps
    from .dw import SParam

    spec.validate()
    count = spec.n_hi - spec.n_lo + 1
    stride = max(spec.stride, math.ceil(count / spec.max_points))
    stream = dump_steps(SParam(spec.sigma, spec.t), spec.n_lo, spec.n_hi, stride)
    xs = [0.0] + [r.cumulative.real for r in stream.records]
    ys = [0.0] + [r.cumulative.imag for r in stream.records]
    cv = _Canvas(spec.width, spec.height)
    cv.title(f"argand sigma={spec.sigma} t={spec.t} n={spec.n_lo}..{spec.n_hi} "
             f"stride={stride}")
    to_px = cv.transform_for(xs, ys)
    cv.polyline([to_px(x, y) for x, y in zip(xs, ys)], color="black")
    cv.circle(to_px(0.0, 0.0), r=3.0, color="blue")
    return cv.tostring()


def render_limacon(spec: RenderSpec) -> str:
    """Dashed locus of P(s), solid locus of zeta(s) over the Gram range,
    with the two construction radii drawn at each Gram point."""
    from .dw import SParam
    from .symmetry import pendant_center
    from .zeros import gram_point
    from .zeta import riemann_siegel

    spec.validate()
    if spec.gram_hi <= spec.gram_lo:
        raise DomainError("limacon needs gram_hi > gram_lo")
    t0 = gram_point(spec.gram_lo).t
    t1 = gram_point(spec.gram_hi).t
    grams = [gram_point(n).t for n in range(spec.gram_lo, spec.gram_hi + 1)]
    npts = max(spec.grid, 50)
    ts = [t0 + (t1 - t0) * i / (npts - 1) for i in range(npts)]
    ps, zs = [], []
    for t in ts:
        s = SParam(spec.sigma, t)
        ps.append(pendant_center(s).value)
        zs.append(riemann_siegel(s).value)
    xs = [v.real for v in ps + zs] + [0.0]
    ys = [v.imag for v in ps + zs] + [0.0]
    cv = _Canvas(spec.width, spec.height)
    cv.title(f"limacon gram {spec.gram_lo}..{spec.gram_hi} sigma={spec.sigma}")
    to_px = cv.transform_for(xs, ys)
    cv.polyline([to_px(v.real, v.imag) for v in ps], color="red", dashed=True)
    cv.polyline([to_px(v.real, v.imag) for v in zs], color="blue")
    for tg in grams:
        s = SParam(spec.sigma, tg)
        pv = pendant_center(s).value
        zv = riemann_siegel(s).value
        cv.line(to_px(0.0, 0.0), to_px(pv.real, pv.imag), color="green", width=0.7)
        cv.line(to_px(pv.real, pv.imag), to_px(zv.real, zv.imag), color="gray",
                width=0.7)
    cv.circle(to_px(0.0, 0.0), r=3.0, color="black")
    return cv.tostring()


def render_error_scatter(spec: RenderSpec, points) -> str:
    """Scatter of complex evaluator errors (re, im pairs)."""
    spec.validate()
    xs = [p.real for p in points] + [0.0]
    ys = [p.imag for p in points] + [0.0]
    cv = _Canvas(spec.width, spec.height)
    cv.title("error scatter")
    to_px = cv.transform_for(xs, ys)
    for p in points:
        cv.circle(to_px(p.real, p.imag), r=2.0, color="red")
    cv.circle(to_px(0.0, 0.0), r=3.0, color="black")
    return cv.tostring()


def render_surface(spec: RenderSpec, rows) -> str:
    """Sign-quadrant grid of (re, im) over (sigma, t) cells: rows are
    (sigma, t, re, im) tuples on a rectangular grid."""
    spec.validate()
    sigmas = sorted({r[0] for r in rows})
    ts = sorted({r[1] for r in rows})
    cv = _Canvas(spec.width, spec.height)
    cv.title("surface sign grid")
    cw = spec.width / max(len(ts), 1)
    ch = spec.height / max(len(sigmas), 1)
    colors = {(True, True): "#d73027", (True, False): "#fc8d59",
              (False, True): "#91bfdb", (False, False): "#4575b4"}
    pos = {(r[0], r[1]): (r[2], r[3]) for r in rows}
    for i, sg in enumerate(sigmas):
        for j, t in enumerate(ts):
            re, im = pos[(sg, t)]
            cv.rect((j * cw, spec.height - (i + 1) * ch), cw, ch,
                    colors[(re >= 0, im >= 0)])
    return cv.tostring()


def render_landau(spec: RenderSpec, table) -> str:
    """Cumulative ensemble real-part polyline with prime-power steps marked."""
    from .arith import is_prime_power

    spec.validate()
    cum = table.cumulative()
    xs = [float(n) for n, _ in cum]
    ys = [v for _, v in cum]
    cv = _Canvas(spec.width, spec.height)
    cv.title(f"landau ensemble T={table.T}")
    to_px = cv.transform_for(xs, ys)
    cv.polyline([to_px(x, y) for x, y in zip(xs, ys)], color="black")
    for (n, _), y in zip(cum, ys):
        if is_prime_power(n):
            cv.circle(to_px(float(n), y), r=2.5, color="red")
    return cv.tostring()
