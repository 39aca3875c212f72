"""Seeded random sampling of interior points, pairs and sphere points."""

from __future__ import annotations

import numpy as np

from ..geometry import Annulus, Ball, Domain, Polygon, PuncturedBall, SlitDisk

DEFAULT_SEED = 42


def rng_from(seed_or_rng=None) -> np.random.Generator:
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return np.random.default_rng(DEFAULT_SEED if seed_or_rng is None else seed_or_rng)


def standard_shapes(dim: int = 2) -> dict[str, Domain]:
    """The bounded test shapes used by the verification suites."""
    c = np.zeros(dim)
    shapes = {
        "ball": Ball(c, 1.0),
        "annulus": Annulus(c, 1.0, 2.0),
        "punctured_ball": PuncturedBall(c, 1.0),
    }
    if dim == 2:
        shapes["slit_disk"] = SlitDisk(c, 1.0)
        # nonconvex L-shaped hexagon
        shapes["polygon"] = Polygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
    return shapes


def sample_interior(domain: Domain, n: int, rng=None, box=None) -> np.ndarray:
    """``n`` points uniform in ``domain`` (rejection from its bounding box).

    Unbounded domains need an explicit ``box = (lo, hi)``.
    """
    rng = rng_from(rng)
    box = box if box is not None else domain.bounding_box()
    if box is None:
        raise ValueError("unbounded domain: pass a sampling box")
    lo, hi = (np.asarray(b, dtype=float) for b in box)
    out = []
    have = 0
    while have < n:
        batch = rng.uniform(lo, hi, size=(max(2 * (n - have), 16), domain.dim))
        batch = batch[np.asarray(domain._contains(batch), bool)]
        out.append(batch)
        have += len(batch)
    return np.concatenate(out)[:n]


def sample_pairs(domain: Domain, n: int, rng=None, box=None) -> tuple[np.ndarray, np.ndarray]:
    rng = rng_from(rng)
    pts = sample_interior(domain, 2 * n, rng, box)
    return pts[:n], pts[n:]


def sample_sphere(center, radius: float, n: int, rng=None) -> np.ndarray:
    """``n`` points uniform on the sphere ``|z - center| = radius``."""
    rng = rng_from(rng)
    center = np.asarray(center, dtype=float)
    u = rng.normal(size=(n, center.shape[-1]))
    u /= np.linalg.norm(u, axis=-1, keepdims=True)
    return center + radius * u


def sample_directions(dim: int, n: int, rng=None) -> np.ndarray:
    return sample_sphere(np.zeros(dim), 1.0, n, rng)
