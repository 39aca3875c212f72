import math

import numpy as np

from hypmetrics import unit_disk
from hypmetrics.analysis import closed_form_evaluator, standard_shapes
from hypmetrics.svg import SvgCanvas, view_box
from hypmetrics.tracing import ray_exit, trace_ball

D = unit_disk()


def test_ray_exit_disk_and_polygon():
    U = np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0]])
    assert np.allclose(ray_exit(D, np.zeros(2), U, 10), 1.0, atol=1e-10)
    P = standard_shapes()["polygon"]
    t = ray_exit(P, np.array([0.5, 0.5]), U, 10)
    assert np.allclose(t, [1.5, 1.5, 0.5], atol=1e-10)


def test_traced_zeta_ball_is_a_circle():
    # zeta(0, z) = log 2 exactly when 2|z| / (1 - |z|^2) = 1
    pts, clamped = trace_ball(D, closed_form_evaluator("zeta", D), (0, 0), math.log(2), 90)
    assert not clamped.any()
    assert np.allclose(np.linalg.norm(pts, axis=-1), math.sqrt(2) - 1, atol=1e-9)


def test_huge_radius_clamps_to_boundary():
    pts, clamped = trace_ball(D, closed_form_evaluator("zeta", D), (0.2, 0.1), 80.0, 36)
    assert clamped.all()
    assert np.all(np.linalg.norm(pts, axis=-1) < 1)


def test_svg_is_deterministic():
    def draw():
        cv = SvgCanvas(*view_box(D))
        cv.domain(D)
        cv.circle((0, 0), 0.25)
        cv.polyline([(0, 0), (0.5, 0.5)], cls="path")
        return cv.render()

    a = draw()
    assert a == draw()
    assert 'data-radius="0.25"' in a and 'class="path"' in a
