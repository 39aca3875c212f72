"""Minimal deterministic SVG writer for 2-D domains, paths, circles and point sets."""

from __future__ import annotations

import numpy as np

from .geometry import Annulus, Ball, Domain, HalfSpace, Polygon, PuncturedBall, PuncturedSpace, SlitDisk


def _f(v: float) -> str:
    return f"{v:.12g}"


class SvgCanvas:
    """World-coordinate canvas; the y axis points up as in the plane."""

    def __init__(self, lo, hi, size: int = 600, pad: float = 0.05):
        lo = np.asarray(lo, dtype=float)
        hi = np.asarray(hi, dtype=float)
        span = float(np.max(hi - lo)) or 1.0
        mid = 0.5 * (lo + hi)
        half = 0.5 * span * (1 + 2 * pad)
        self.lo = mid - half
        self.hi = mid + half
        self.size = size
        self.scale = size / (2 * half)
        self.items: list[str] = []

    def px(self, p) -> tuple[float, float]:
        return (p[0] - self.lo[0]) * self.scale, (self.hi[1] - p[1]) * self.scale

    def circle(self, c, r, stroke="black", fill="none", width=1.5, dash=None, label=None):
        x, y = self.px(c)
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        title = f"<title>{label}</title>" if label else ""
        self.items.append(
            f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{_f(r * self.scale)}" stroke="{stroke}" '
            f'fill="{fill}" stroke-width="{width}"{extra} data-radius="{_f(r)}">{title}</circle>'
        )

    def dot(self, p, r_px=2.0, fill="black"):
        x, y = self.px(p)
        self.items.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{_f(r_px)}" fill="{fill}"/>')

    def polyline(self, pts, stroke="black", width=1.5, closed=False, fill="none", cls=None):
        coords = " ".join(f"{_f(a)},{_f(b)}" for a, b in (self.px(p) for p in pts))
        tag = "polygon" if closed else "polyline"
        c = f' class="{cls}"' if cls else ""
        self.items.append(f'<{tag}{c} points="{coords}" stroke="{stroke}" fill="{fill}" stroke-width="{width}"/>')

    def text(self, p, s, size=12):
        x, y = self.px(p)
        self.items.append(f'<text x="{_f(x)}" y="{_f(y)}" font-size="{size}" font-family="monospace">{s}</text>')

    def domain(self, dom: Domain):
        """Draw the boundary of a library shape."""
        if isinstance(dom, (Ball, PuncturedBall)):
            self.circle(dom.center, dom.radius, stroke="#444")
            if isinstance(dom, PuncturedBall):
                self.dot(dom.center, 2.5, "#444")
        elif isinstance(dom, Annulus):
            self.circle(dom.center, dom.r, stroke="#444")
            self.circle(dom.center, dom.R, stroke="#444")
        elif isinstance(dom, SlitDisk):
            self.circle(dom.center, dom.radius, stroke="#444")
            a, b = dom.slit
            self.polyline([a, b], stroke="#444")
        elif isinstance(dom, Polygon):
            self.polyline(dom.vertices, stroke="#444", closed=True)
        elif isinstance(dom, HalfSpace):
            n = dom.normal
            t = np.array([-n[1], n[0]])
            foot = n * dom.offset
            L = float(np.max(self.hi - self.lo)) * 2
            self.polyline([foot - L * t, foot + L * t], stroke="#444")
        elif isinstance(dom, PuncturedSpace):
            self.dot(dom.puncture, 2.5, "#444")

    def render(self) -> str:
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.size}" height="{self.size}" '
            f'viewBox="0 0 {self.size} {self.size}">'
        )
        body = "\n".join(self.items)
        return f'{head}\n<rect width="100%" height="100%" fill="white"/>\n{body}\n</svg>\n'


def view_box(dom: Domain, *points, margin: float = 1.0):
    """Domain bounding box, or a box around ``points`` for unbounded shapes."""
    box = dom.bounding_box()
    if box is not None:
        return box
    pts = np.array(points, dtype=float).reshape(-1, 2)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    pad = max(float(np.max(hi - lo)), margin)
    return lo - pad, hi + pad
