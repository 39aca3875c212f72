import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypmetrics import (
    Annulus,
    Ball,
    DimensionError,
    HalfSpace,
    OutsideDomainError,
    Polygon,
    PuncturedBall,
    PuncturedSpace,
    SlitDisk,
    UnsupportedDomainError,
    boundary_distance,
    contains,
    diameter,
    domain_from_dict,
    eta,
    unit_disk,
    upper_half_plane,
)
from hypmetrics.analysis import sample_pairs, standard_shapes
from oracles import brute_delta, circle_points, dense_boundary

from conftest import BOUNDED

SHAPES = standard_shapes(2)


# -- contains ---------------------------------------------------------------

def test_contains_examples():
    D = unit_disk()
    assert contains(D, (0.5, 0))
    assert not contains(D, (1, 0))
    assert not contains(PuncturedBall((0, 0), 1), (0, 0))
    assert contains(PuncturedBall((0, 0), 1), (0.1, 0))


def test_contains_dimension_mismatch():
    with pytest.raises(DimensionError):
        contains(unit_disk(), (0, 0, 0))


def test_slit_points_rejected():
    S = SlitDisk((0, 0), 1)
    assert not contains(S, (0.5, 0))
    assert not contains(S, (0, 0))
    assert contains(S, (-0.5, 0))
    assert contains(S, (0.5, 1e-9))


# -- boundary distance --------------------------------------------------------

def test_boundary_distance_examples():
    A = Annulus((0, 0), 1, 2)
    assert boundary_distance(A, (1.25, 0)) == pytest.approx(0.25, abs=1e-15)
    assert boundary_distance(A, (1.8, 0)) == pytest.approx(0.2, abs=1e-15)
    assert boundary_distance(unit_disk(), (0, 0)) == 1.0


def test_boundary_distance_outside_raises():
    with pytest.raises(OutsideDomainError):
        boundary_distance(unit_disk(), (2, 0))


def test_half_space_and_punctured_space():
    H = upper_half_plane()
    assert boundary_distance(H, (3, 0.7)) == pytest.approx(0.7)
    P = PuncturedSpace((1, 1))
    assert boundary_distance(P, (4, 5)) == pytest.approx(5.0)


def _polygon_boundary(P):
    v = P.vertices
    return dense_boundary(list(zip(v, np.roll(v, -1, axis=0))), n_per=40000)


@pytest.mark.parametrize(
    "verts",
    [
        [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)],
        [(0, 0), (3, 0), (3, 3), (0, 3)],
        [(0, 0), (4, 0), (4, 3), (2, 1), (0, 3)],
        [(0, 0), (1, 2), (-1, 2)],
    ],
)
def test_polygon_delta_matches_brute_force(verts, rng):
    P = Polygon(verts)
    Z = np.concatenate(sample_pairs(P, 200, rng))
    ref = brute_delta(Z, _polygon_boundary(P))
    got = P.boundary_distance(Z)
    # dense sampling overestimates by at most half the sample spacing
    assert np.all(got <= ref + 1e-12)
    assert np.max(ref - got) < 1e-4
    # distance to the segment set itself is exact: compare against fine sampling near the minimum
    assert np.allclose(got, ref, atol=1e-4)


def test_polygon_delta_exact_points():
    P = SHAPES["polygon"]
    assert P.boundary_distance((0.5, 0.5)) == pytest.approx(0.5)
    # nearest boundary point is the reflex corner (1, 1)
    assert P.boundary_distance((0.8, 0.8)) == pytest.approx(math.sqrt(0.08))
    assert not P.contains((1.5, 1.5))


def test_slit_disk_delta_brute_force(rng):
    S = SHAPES["slit_disk"]
    bnd = np.concatenate([circle_points((0, 0), 1.0), dense_boundary([((0, 0), (1, 0))], 100000)])
    Z = np.concatenate(sample_pairs(S, 200, rng))
    ref = brute_delta(Z, bnd)
    assert np.allclose(S.boundary_distance(Z), ref, atol=1e-4)


def test_annulus_delta_brute_force(rng):
    A = SHAPES["annulus"]
    bnd = np.concatenate([circle_points((0, 0), 1.0), circle_points((0, 0), 2.0)])
    Z = np.concatenate(sample_pairs(A, 200, rng))
    assert np.allclose(A.boundary_distance(Z), brute_delta(Z, bnd), atol=1e-4)


# -- diameter and eta ------------------------------------------------------------

def test_diameter_examples():
    assert diameter(unit_disk()) == 2
    assert diameter(Annulus((0, 0), 1, 2)) == 4
    assert diameter(upper_half_plane()) == math.inf
    assert diameter(PuncturedSpace((0, 0))) == math.inf
    assert diameter(SHAPES["polygon"]) == pytest.approx(2 * math.sqrt(2))
    assert diameter(SlitDisk((0, 0), 3)) == 6


def test_eta_examples():
    assert eta(Annulus((0, 0), 1, 2), (1.25, 0)) == pytest.approx(0.9375)
    assert eta(unit_disk(), (0, 0)) == 1.0
    assert eta(unit_disk(), (0.5, 0)) == pytest.approx(0.75)


def test_eta_unbounded_raises():
    with pytest.raises(UnsupportedDomainError):
        eta(upper_half_plane(), (0, 1))


def test_annulus_eta_piecewise(rng):
    r, R = 1.0, 2.0
    A = Annulus((0, 0), r, R)
    rad = rng.uniform(r, R, 100)
    ang = rng.uniform(0, 2 * np.pi, 100)
    Z = np.stack([rad * np.cos(ang), rad * np.sin(ang)], axis=-1)
    inner = (rad - r) * (2 * R + r - rad)
    outer = (R - rad) * (R + rad)
    ref = np.where(rad <= (r + R) / 2, inner, outer)
    assert np.max(np.abs(A.eta(Z) - ref)) < 1e-12


# -- serialization -------------------------------------------------------------

@pytest.mark.parametrize("name", list(SHAPES))
def test_domain_roundtrip(name):
    D = SHAPES[name]
    E = domain_from_dict(D.to_dict())
    assert type(E) is type(D)
    assert E.to_dict() == D.to_dict()


def test_domain_from_dict_variants():
    assert isinstance(domain_from_dict({"shape": "half_space", "normal": [0, 1], "offset": 0}), HalfSpace)
    assert isinstance(domain_from_dict({"shape": "punctured_space", "puncture": [0, 0]}), PuncturedSpace)
    B = domain_from_dict({"shape": "ball", "center": [0, 0, 0], "radius": 2})
    assert B.dim == 3 and B.diameter == 4


def test_invalid_shapes():
    with pytest.raises(ValueError):
        Ball((0, 0), -1)
    with pytest.raises(ValueError):
        Annulus((0, 0), 2, 1)
    with pytest.raises(ValueError):
        Polygon([(0, 0), (1, 0), (2, 0)])


# -- invariants ------------------------------------------------------------------

def _pairs_strategy():
    return st.tuples(st.sampled_from(BOUNDED + ("ball3",)), st.integers(0, 2**32 - 1))


def _shape(name):
    return Ball((0, 0, 0), 1) if name == "ball3" else SHAPES[name]


@given(_pairs_strategy())
def test_delta_and_eta_lemmas(args):
    name, seed = args
    D = _shape(name)
    X, Y = sample_pairs(D, 20, np.random.default_rng(seed))
    d = D.diameter
    dx, dy = D.boundary_distance(X), D.boundary_distance(Y)
    ex, ey = D.eta(X), D.eta(Y)
    dist = np.linalg.norm(X - Y, axis=-1)
    assert np.all(np.abs(dx - dy) <= dist + 1e-12)
    assert np.all(np.abs(ex - ey) <= d * dist + 1e-12)
    assert np.all((dx > dy) | (ex <= ey + 1e-12))
    assert np.all(ex <= d * dx + 1e-12)
    assert np.all(dx <= d / 2 + 1e-12)
    assert np.all(ex > 0)


@given(st.floats(0.01, 0.99), st.floats(0, 2 * np.pi))
def test_slit_disk_delta_formula(rad, ang):
    S = SHAPES["slit_disk"]
    p = np.array([rad * np.cos(ang), rad * np.sin(ang)])
    if not S.contains(p):
        return
    seg = abs(p[1]) if p[0] >= 0 else rad
    assert S.boundary_distance(p) == pytest.approx(min(1 - rad, seg), abs=1e-14)


def test_segment_inside():
    S = SHAPES["slit_disk"]
    assert not S.segment_inside((0.5, 0.1), (0.5, -0.1))
    assert S.segment_inside((-0.5, 0.1), (-0.5, -0.1))
    P = SHAPES["polygon"]
    assert not P.segment_inside((1.5, 0.5), (0.5, 1.5))
    assert P.segment_inside((0.5, 0.5), (0.5, 1.5))
