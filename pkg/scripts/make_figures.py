"""SVG figures: metric balls with their Euclidean sandwich, and geodesics.

Writes into figures/ (created if missing).
"""

import math
from pathlib import Path

import numpy as np

from hypmetrics import k_density, m_density, shortest_path_estimate
from hypmetrics.analysis import closed_form_evaluator, standard_shapes, zeta_ball_radii
from hypmetrics.svg import SvgCanvas, view_box
from hypmetrics.tracing import trace_ball

OUT = Path("figures")
COLORS = ["#c0392b", "#2980b9", "#27ae60", "#8e44ad"]


def zeta_balls(name, center, radii_s):
    D = standard_shapes()[name]
    x = np.asarray(center, float)
    cv = SvgCanvas(*view_box(D))
    cv.domain(D)
    ev = closed_form_evaluator("zeta", D)
    for s, color in zip(radii_s, COLORS):
        pts, _ = trace_ball(D, ev, x, s, 360)
        cv.polyline(pts, stroke=color, closed=True)
        r, R = zeta_ball_radii(s, float(D.eta(x)), D.diameter)
        cv.circle(x, r, stroke=color, dash="3,3", width=0.8)
        cv.circle(x, R, stroke=color, dash="3,3", width=0.8)
    cv.dot(x, 3)
    (OUT / f"zeta_balls_{name}.svg").write_text(cv.render())


def geodesics(name, pairs):
    D = standard_shapes()[name]
    cv = SvgCanvas(*view_box(D))
    cv.domain(D)
    for (x, y), color in zip(pairs, COLORS):
        for field, width in ((m_density(D), 2.0), (k_density(D), 1.0)):
            est = shortest_path_estimate(field, x, y)
            cv.polyline(est.path.vertices, stroke=color, width=width)
        cv.dot(x)
        cv.dot(y)
    (OUT / f"geodesics_{name}.svg").write_text(cv.render())


def main():
    OUT.mkdir(exist_ok=True)
    zeta_balls("ball", (0.3, 0.2), (0.1, math.log(2), 1.0, 2.0))
    zeta_balls("annulus", (1.4, 0.2), (0.1, math.log(2), 1.0, 2.0))
    zeta_balls("polygon", (0.5, 0.6), (0.1, math.log(2), 1.0, 2.0))
    geodesics("annulus", [((1.5, 0.0), (-1.5, 0.1)), ((1.2, 0.8), (-0.3, -1.6))])
    geodesics("slit_disk", [((0.5, 0.05), (0.5, -0.05)), ((0.8, 0.1), (0.2, -0.3))])
    geodesics("polygon", [((0.5, 1.7), (1.7, 0.5)), ((0.2, 0.2), (1.8, 0.8))])
    for p in sorted(OUT.glob("*.svg")):
        print(p)


if __name__ == "__main__":
    main()
