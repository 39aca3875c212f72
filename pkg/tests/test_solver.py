import math

import numpy as np
import pytest

from hypmetrics import (
    Ball,
    PolylinePath,
    SolverConfig,
    hyperbolic_closed_form,
    inner_metric_estimate,
    j_metric,
    k_density,
    m_density,
    path_density_length,
    shortest_path_estimate,
    unit_disk,
    upper_half_plane,
    zeta,
)
from hypmetrics.analysis import sample_pairs, standard_shapes
from hypmetrics.solver import auto_resolution

D = unit_disk()
H = upper_half_plane()
SHAPES = standard_shapes(2)


def test_disk_m_example():
    est = shortest_path_estimate(m_density(D), (0, 0), (0.5, 0))
    assert est.value == pytest.approx(math.log(3), rel=5e-3)
    assert est.value >= math.log(3) * (1 - 1e-12)
    value, path = est
    assert isinstance(path, PolylinePath)
    assert np.array_equal(path.vertices[0], [0, 0]) and np.array_equal(path.vertices[-1], [0.5, 0])


def test_half_plane_k_example():
    est = shortest_path_estimate(k_density(H), (0, 1), (1, 1))
    assert est.value == pytest.approx(math.acosh(1.5), rel=5e-3)


def test_coincident_points():
    est = shortest_path_estimate(m_density(D), (0.1, 0.2), (0.1, 0.2))
    assert est.value == 0.0 and est.path.is_trivial


def test_reported_value_is_path_length():
    est = shortest_path_estimate(m_density(SHAPES["annulus"]), (1.5, 0), (-1.5, 0.1))
    assert est.value == pytest.approx(path_density_length(m_density(SHAPES["annulus"]), est.path), rel=1e-7)
    est.path.validate(SHAPES["annulus"])
    assert est.value <= est.lattice_value


def test_deterministic():
    a = shortest_path_estimate(m_density(SHAPES["polygon"]), (0.3, 1.7), (1.7, 0.3))
    b = shortest_path_estimate(m_density(SHAPES["polygon"]), (0.3, 1.7), (1.7, 0.3))
    assert a.value == b.value
    assert np.array_equal(a.path.vertices, b.path.vertices)


def test_path_goes_around_obstacles():
    est = shortest_path_estimate(k_density(SHAPES["slit_disk"]), (0.5, 0.05), (0.5, -0.05))
    est.path.validate(SHAPES["slit_disk"])
    assert np.min(est.path.vertices[:, 0]) < 0.0
    est = shortest_path_estimate(m_density(SHAPES["polygon"]), (0.5, 1.7), (1.7, 0.5))
    est.path.validate(SHAPES["polygon"])


def test_upper_bound_over_zeta(rng):
    for name in ("ball", "annulus", "polygon"):
        S = SHAPES[name]
        X, Y = sample_pairs(S, 3, rng)
        for x, y in zip(X, Y):
            assert shortest_path_estimate(m_density(S), x, y).value >= zeta(S, x, y)


def test_three_dimensional_ball():
    B = Ball((0, 0, 0), 1)
    x, y = (0.1, 0.2, -0.1), (-0.3, 0.1, 0.3)
    est = shortest_path_estimate(m_density(B), x, y)
    assert est.value == pytest.approx(hyperbolic_closed_form(B, x, y), rel=5e-3)


def test_resolution_monotone():
    x, y = (-0.4, 0.3), (0.5, -0.2)
    h = auto_resolution(D, x, y)
    vals = [shortest_path_estimate(m_density(D), x, y, SolverConfig(resolution=h / 2**i)).value for i in range(3)]
    assert vals[0] >= vals[1] >= vals[2]
    assert vals[2] == pytest.approx(hyperbolic_closed_form(D, x, y), rel=2e-3)


def test_local_two_sided_bounds(rng):
    S = SHAPES["annulus"]
    d = S.diameter
    x = np.array([1.4, 0.3])
    ex = S.eta(x)
    for frac in (0.1, 0.4, 0.8):
        u = rng.normal(size=2)
        u /= np.linalg.norm(u)
        y = x + frac * ex / d * u
        t = d * np.linalg.norm(y - x)
        m = shortest_path_estimate(m_density(S), x, y).value
        assert math.log1p(t / (ex + t)) <= m
        assert m <= math.log1p(t / (ex - t)) * 1.01
        # local comparison with zeta
        assert m <= zeta(S, x, y) / (1 - frac) * 1.01


def test_inner_metric_estimates():
    assert inner_metric_estimate(lambda a, b: zeta(D, a, b), m_density(D), (0, 0), (0.5, 0)) == pytest.approx(math.log(3), rel=1e-2)
    assert inner_metric_estimate(lambda a, b: j_metric(D, a, b), k_density(D), (0, 0), (0.5, 0)) == pytest.approx(math.log(2), rel=1e-2)
    assert inner_metric_estimate(lambda a, b: zeta(D, a, b), m_density(D), (0.2, 0), (0.2, 0)) == 0.0


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(resolution=-1)
    with pytest.raises(ValueError):
        SolverConfig(connectivity=3)
    with pytest.raises(ValueError):
        SolverConfig(boundary_margin=0.5)
    with pytest.raises(ValueError):
        SolverConfig(refine_iters=-1)
    assert SolverConfig().replace(connectivity=1).connectivity == 1


def test_lattice_only_is_an_upper_bound():
    cfg = SolverConfig(refine_iters=0)
    est = shortest_path_estimate(m_density(D), (0, 0), (0.5, 0.1), cfg)
    full = shortest_path_estimate(m_density(D), (0, 0), (0.5, 0.1))
    assert est.value >= full.value >= hyperbolic_closed_form(D, (0, 0), (0.5, 0.1))
