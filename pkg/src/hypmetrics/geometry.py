"""Proper subdomains of R^n with exact boundary distance, diameter and eta.

Every method is vectorised over leading axes: a point is an array whose last
axis has length ``dim``, so ``(n,)``, ``(k, n)`` and ``(a, b, n)`` all work.
Scalar inputs give Python floats/bools back, batched inputs give arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, OutsideDomainError, UnsupportedDomainError

__all__ = [
    "Domain",
    "Ball",
    "HalfSpace",
    "Annulus",
    "PuncturedBall",
    "SlitDisk",
    "Polygon",
    "PuncturedSpace",
    "as_point",
    "contains",
    "boundary_distance",
    "diameter",
    "eta",
    "domain_from_dict",
    "unit_disk",
    "upper_half_plane",
]


def as_point(p, dim: int | None = None) -> np.ndarray:
    """Coerce ``p`` to a float array of points, checking finiteness and dimension."""
    arr = np.asarray(p, dtype=float)
    if arr.ndim == 0 or arr.shape[-1] < 2:
        raise DimensionError(f"points need at least 2 coordinates, got shape {arr.shape}")
    if dim is not None and arr.shape[-1] != dim:
        raise DimensionError(f"expected {dim}-dimensional points, got {arr.shape[-1]}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("point coordinates must be finite")
    return arr


def _scalar(v):
    if isinstance(v, np.ndarray) and v.ndim == 0:
        return v.item()
    return v


def _norm(v):
    return np.sqrt(np.sum(v * v, axis=-1))


def point_segment_distance(p, a, b):
    """Euclidean distance from points ``p`` to the closed segments ``[a, b]``."""
    ab = b - a
    denom = np.sum(ab * ab, axis=-1)
    t = np.sum((p - a) * ab, axis=-1) / np.where(denom > 0, denom, 1.0)
    t = np.clip(t, 0.0, 1.0)
    return _norm(p - (a + t[..., None] * ab))


def _cross2(u, v):
    return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]


def segments_intersect(p, q, a, b):
    """True where closed 2-D segments ``[p, q]`` and ``[a, b]`` share a point."""
    d1 = _cross2(b - a, p - a)
    d2 = _cross2(b - a, q - a)
    d3 = _cross2(q - p, a - p)
    d4 = _cross2(q - p, b - p)
    proper = (d1 * d2 < 0) & (d3 * d4 < 0)

    def on_seg(r, s, t, d):
        # collinear r-s-t with t inside the bounding box of [r, s]
        lo = np.minimum(r, s)
        hi = np.maximum(r, s)
        return (d == 0) & np.all((t >= lo) & (t <= hi), axis=-1)

    touch = on_seg(a, b, p, d1) | on_seg(a, b, q, d2) | on_seg(p, q, a, d3) | on_seg(p, q, b, d4)
    return proper | touch


class Domain:
    """Base class; concrete shapes implement ``_contains`` and ``_delta``."""

    dim: int

    # -- shape-specific hooks -------------------------------------------------
    def _contains(self, p: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _delta(self, p: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    @property
    def diameter(self) -> float:
        raise NotImplementedError

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray] | None:
        """Axis-aligned box containing the domain, or None when unbounded."""
        return None

    def _segment_clear(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        # convex shapes: interior endpoints imply an interior segment
        return np.ones(np.broadcast_shapes(a.shape, b.shape)[:-1], dtype=bool)

    def to_dict(self) -> dict:
        raise NotImplementedError

    # -- public API -------------------------------------------------------------
    @property
    def bounded(self) -> bool:
        return math.isfinite(self.diameter)

    def contains(self, p):
        """True iff ``p`` is an interior point (boundary points are rejected)."""
        p = as_point(p, self.dim)
        return _scalar(self._contains(p))

    def boundary_distance(self, p, check: bool = True):
        """Distance from ``p`` to the boundary; raises if ``p`` is not interior."""
        p = as_point(p, self.dim) if check else np.asarray(p, dtype=float)
        if check:
            self._require_inside(p)
        return _scalar(self._delta(p))

    def eta(self, p, check: bool = True):
        """``delta(p) * (diam - delta(p))``; only defined on bounded domains."""
        d = self.diameter
        if not math.isfinite(d):
            raise UnsupportedDomainError(
                f"eta is undefined on the unbounded domain {type(self).__name__}"
            )
        delta = np.asarray(self.boundary_distance(p, check=check))
        return _scalar(delta * (d - delta))

    def segment_inside(self, a, b):
        """True where the closed segment ``[a, b]`` lies in the domain.

        Exact for every library shape: both endpoints interior and the segment
        avoids the shape's non-convex boundary pieces.
        """
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        ok = self._contains(a) & self._contains(b) & self._segment_clear(a, b)
        return _scalar(ok)

    def _require_inside(self, p: np.ndarray) -> None:
        inside = self._contains(p)
        if not np.all(inside):
            bad = np.asarray(p)[~np.asarray(inside)] if np.ndim(inside) else p
            raise OutsideDomainError(
                f"point {np.asarray(bad).reshape(-1, self.dim)[0].tolist()} "
                f"is not interior to {type(self).__name__}"
            )


@dataclass(frozen=True, eq=False)
class Ball(Domain):
    center: np.ndarray
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center))
        if not self.radius > 0:
            raise ValueError("ball radius must be positive")
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def dim(self) -> int:
        return self.center.shape[-1]

    def _contains(self, p):
        return _norm(p - self.center) < self.radius

    def _delta(self, p):
        return self.radius - _norm(p - self.center)

    @property
    def diameter(self) -> float:
        return 2.0 * self.radius

    def bounding_box(self):
        return self.center - self.radius, self.center + self.radius

    def to_dict(self):
        return {"shape": "ball", "center": self.center.tolist(), "radius": self.radius}


@dataclass(frozen=True, eq=False)
class HalfSpace(Domain):
    """``{z : normal . z > offset}``; the normal is normalised on construction."""

    normal: np.ndarray
    offset: float = 0.0

    def __post_init__(self):
        n = as_point(self.normal)
        length = float(np.linalg.norm(n))
        if length == 0:
            raise ValueError("half-space normal must be nonzero")
        object.__setattr__(self, "normal", n / length)
        object.__setattr__(self, "offset", float(self.offset) / length)

    @property
    def dim(self) -> int:
        return self.normal.shape[-1]

    def _contains(self, p):
        return p @ self.normal > self.offset

    def _delta(self, p):
        return p @ self.normal - self.offset

    @property
    def diameter(self) -> float:
        return math.inf

    def to_dict(self):
        return {"shape": "half_space", "normal": self.normal.tolist(), "offset": self.offset}


@dataclass(frozen=True, eq=False)
class Annulus(Domain):
    center: np.ndarray
    r: float
    R: float

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center))
        if not (0 < self.r < self.R):
            raise ValueError("annulus needs 0 < r < R")
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "R", float(self.R))

    @property
    def dim(self) -> int:
        return self.center.shape[-1]

    def _contains(self, p):
        rho = _norm(p - self.center)
        return (rho > self.r) & (rho < self.R)

    def _delta(self, p):
        rho = _norm(p - self.center)
        return np.minimum(rho - self.r, self.R - rho)

    @property
    def diameter(self) -> float:
        return 2.0 * self.R

    def bounding_box(self):
        return self.center - self.R, self.center + self.R

    def _segment_clear(self, a, b):
        return point_segment_distance(self.center, a, b) > self.r

    def to_dict(self):
        return {"shape": "annulus", "center": self.center.tolist(), "r": self.r, "R": self.R}


@dataclass(frozen=True, eq=False)
class PuncturedBall(Domain):
    center: np.ndarray
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center))
        if not self.radius > 0:
            raise ValueError("ball radius must be positive")
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def dim(self) -> int:
        return self.center.shape[-1]

    def _contains(self, p):
        rho = _norm(p - self.center)
        return (rho > 0) & (rho < self.radius)

    def _delta(self, p):
        rho = _norm(p - self.center)
        return np.minimum(rho, self.radius - rho)

    @property
    def diameter(self) -> float:
        return 2.0 * self.radius

    def bounding_box(self):
        return self.center - self.radius, self.center + self.radius

    def _segment_clear(self, a, b):
        return point_segment_distance(self.center, a, b) > 0

    def to_dict(self):
        return {"shape": "punctured_ball", "center": self.center.tolist(), "radius": self.radius}


@dataclass(frozen=True, eq=False)
class SlitDisk(Domain):
    """Planar disk minus the radial segment from its center at angle ``angle``.

    Bounded and simply connected, but not uniform: points facing each other
    across the slit are close in R^2 yet far apart in every path metric.
    """

    center: np.ndarray
    radius: float
    angle: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center, 2))
        if not self.radius > 0:
            raise ValueError("disk radius must be positive")
        object.__setattr__(self, "radius", float(self.radius))
        object.__setattr__(self, "angle", float(self.angle))

    dim = 2

    @property
    def slit(self) -> tuple[np.ndarray, np.ndarray]:
        tip = self.center
        u = np.array([math.cos(self.angle), math.sin(self.angle)])
        return tip, tip + self.radius * u

    def _contains(self, p):
        a, b = self.slit
        return (_norm(p - self.center) < self.radius) & (point_segment_distance(p, a, b) > 0)

    def _delta(self, p):
        a, b = self.slit
        return np.minimum(self.radius - _norm(p - self.center), point_segment_distance(p, a, b))

    @property
    def diameter(self) -> float:
        return 2.0 * self.radius

    def bounding_box(self):
        return self.center - self.radius, self.center + self.radius

    def _segment_clear(self, a, b):
        s0, s1 = self.slit
        return ~segments_intersect(a, b, s0, s1)

    def to_dict(self):
        return {
            "shape": "slit_disk",
            "center": self.center.tolist(),
            "radius": self.radius,
            "angle": self.angle,
        }


@dataclass(frozen=True, eq=False)
class Polygon(Domain):
    """Simple planar polygon; clockwise input is reversed to counterclockwise."""

    vertices: np.ndarray
    _edges: tuple = field(init=False, repr=False)

    def __post_init__(self):
        v = as_point(self.vertices, 2)
        if v.ndim != 2 or len(v) < 3:
            raise ValueError("polygon needs at least 3 vertices")
        if np.allclose(v[0], v[-1]):
            v = v[:-1]
        x, y = v[:, 0], v[:, 1]
        area2 = float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))
        if area2 == 0:
            raise ValueError("polygon has zero area")
        if area2 < 0:
            v = v[::-1].copy()
        a, b = v, np.roll(v, -1, axis=0)
        m = len(v)
        for i in range(m):
            # non-adjacent edges must not touch
            others = [j for j in range(m) if j not in (i, (i - 1) % m, (i + 1) % m)]
            if others and np.any(segments_intersect(a[i], b[i], a[others], b[others])):
                raise ValueError("polygon is not simple")
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "_edges", (a, b))

    dim = 2

    def _contains(self, p):
        a, b = self._edges
        px = p[..., None, 0]
        py = p[..., None, 1]
        ax, ay, bx, by = a[:, 0], a[:, 1], b[:, 0], b[:, 1]
        crosses = (ay > py) != (by > py)
        with np.errstate(divide="ignore", invalid="ignore"):
            xint = ax + (py - ay) * (bx - ax) / (by - ay)
        odd = np.sum(crosses & (px < xint), axis=-1) % 2 == 1
        return odd & (self._delta(p) > 0)

    def _delta(self, p):
        a, b = self._edges
        d = point_segment_distance(p[..., None, :], a, b)
        return np.min(d, axis=-1)

    @property
    def diameter(self) -> float:
        v = self.vertices
        diff = v[:, None, :] - v[None, :, :]
        return float(np.max(_norm(diff)))

    def bounding_box(self):
        return self.vertices.min(axis=0), self.vertices.max(axis=0)

    def _segment_clear(self, p, q):
        a, b = self._edges
        hit = segments_intersect(p[..., None, :], q[..., None, :], a, b)
        return ~np.any(hit, axis=-1)

    def to_dict(self):
        return {"shape": "polygon", "vertices": self.vertices.tolist()}


@dataclass(frozen=True, eq=False)
class PuncturedSpace(Domain):
    puncture: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "puncture", as_point(self.puncture))

    @property
    def dim(self) -> int:
        return self.puncture.shape[-1]

    def _contains(self, p):
        return _norm(p - self.puncture) > 0

    def _delta(self, p):
        return _norm(p - self.puncture)

    @property
    def diameter(self) -> float:
        return math.inf

    def _segment_clear(self, a, b):
        return point_segment_distance(self.puncture, a, b) > 0

    def to_dict(self):
        return {"shape": "punctured_space", "puncture": self.puncture.tolist()}


# functional aliases mirroring the method names
def contains(domain: Domain, p):
    return domain.contains(p)


def boundary_distance(domain: Domain, p):
    return domain.boundary_distance(p)


def diameter(domain: Domain) -> float:
    return domain.diameter


def eta(domain: Domain, p):
    return domain.eta(p)


def unit_disk() -> Ball:
    return Ball(np.zeros(2), 1.0)


def upper_half_plane() -> HalfSpace:
    return HalfSpace(np.array([0.0, 1.0]), 0.0)


_SHAPES = {
    "ball": lambda d: Ball(d["center"], d["radius"]),
    "half_space": lambda d: HalfSpace(d["normal"], d.get("offset", 0.0)),
    "annulus": lambda d: Annulus(d["center"], d["r"], d["R"]),
    "punctured_ball": lambda d: PuncturedBall(d["center"], d["radius"]),
    "slit_disk": lambda d: SlitDisk(d["center"], d["radius"], d.get("angle", 0.0)),
    "polygon": lambda d: Polygon(d["vertices"]),
    "punctured_space": lambda d: PuncturedSpace(d["puncture"]),
}


def domain_from_dict(desc: dict) -> Domain:
    """Build a domain from its JSON descriptor, e.g. ``{"shape": "ball", ...}``."""
    try:
        build = _SHAPES[desc["shape"]]
    except KeyError:
        raise ValueError(f"unknown or missing shape in descriptor: {desc.get('shape')!r}") from None
    try:
        return build(desc)
    except KeyError as exc:
        raise ValueError(f"descriptor for {desc['shape']!r} is missing field {exc}") from None
