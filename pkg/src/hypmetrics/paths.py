"""Polyline paths, density-weighted lengths and partition (ell_d) lengths."""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .density import DensityField
from .errors import PathError
from .geometry import Domain, as_point
from .quadrature import simpson_segment_integrals


@dataclass(frozen=True, eq=False)
class PolylinePath:
    """Ordered vertices of a rectifiable path; consecutive vertices are distinct."""

    vertices: np.ndarray

    def __post_init__(self):
        v = as_point(self.vertices)
        if v.ndim != 2 or len(v) < 2:
            raise PathError("a path needs at least two vertices")
        if np.any(np.all(v[1:] == v[:-1], axis=-1)):
            raise PathError("consecutive path vertices must be distinct")
        object.__setattr__(self, "vertices", v)

    @classmethod
    def trivial(cls, x) -> "PolylinePath":
        """The constant path at ``x``; bypasses the distinct-vertex check."""
        obj = object.__new__(cls)
        x = as_point(x)
        object.__setattr__(obj, "vertices", np.stack([x, x]))
        return obj

    @property
    def is_trivial(self) -> bool:
        v = self.vertices
        return len(v) == 2 and np.array_equal(v[0], v[1])

    @property
    def segments(self) -> tuple[np.ndarray, np.ndarray]:
        return self.vertices[:-1], self.vertices[1:]

    def euclidean_length(self) -> float:
        a, b = self.segments
        return float(np.sum(np.linalg.norm(b - a, axis=-1)))

    def validate(self, domain: Domain) -> None:
        """Raise :class:`PathError` unless every segment lies inside ``domain``."""
        if self.vertices.shape[-1] != domain.dim:
            raise PathError("path and domain dimensions differ")
        if self.is_trivial:
            if not domain.contains(self.vertices[0]):
                raise PathError("path leaves the domain")
            return
        a, b = self.segments
        ok = np.asarray(domain.segment_inside(a, b))
        if not np.all(ok):
            i = int(np.argmin(ok))
            raise PathError(f"segment {i} of the path leaves the domain")

    def to_csv(self, value: float | None = None) -> str:
        n = self.vertices.shape[-1]
        buf = io.StringIO()
        if value is not None:
            buf.write(f"# value={value:.12g}\n")
        buf.write(",".join(f"x{i}" for i in range(n)) + "\n")
        for row in self.vertices:
            buf.write(",".join(f"{c:.12g}" for c in row) + "\n")
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> tuple["PolylinePath", float | None]:
        value = None
        rows = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                if line[1:].strip().startswith("value="):
                    value = float(line.split("=", 1)[1])
                continue
            if line.startswith("x0"):
                continue
            rows.append([float(c) for c in line.split(",")])
        return cls(np.array(rows)), value


def path_density_length(field: DensityField, path: PolylinePath, quad_tol: float = 1e-8) -> float:
    """Integral of the density along the polyline (adaptive Simpson per segment).

    The result is an upper bound for the path metric between the endpoints.
    """
    path.validate(field.domain)
    if path.is_trivial:
        return 0.0
    a, b = path.segments
    return float(np.sum(simpson_segment_integrals(field.weights, a, b, rtol=quad_tol)))


def metric_length(metric, path: PolylinePath, depth: int, chunk: int = 1 << 20) -> float:
    """Partition sum of ``metric`` over ``2**depth`` equal pieces of every segment.

    ``metric(p, q)`` must accept batches of points. Nested dyadic partitions
    make the result nondecreasing in ``depth`` (triangle inequality).
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if path.is_trivial:
        return 0.0
    v = path.vertices
    k = 1 << depth
    t = np.arange(k + 1) / k
    per_chunk = max(1, chunk // (k + 1))
    total = 0.0
    for start in range(0, len(v) - 1, per_chunk):
        a = v[start : min(start + per_chunk, len(v) - 1)]
        b = v[start + 1 : min(start + per_chunk, len(v) - 1) + 1]
        pts = a[:, None, :] + t[None, :, None] * (b - a)[:, None, :]
        p = pts[:, :-1, :].reshape(-1, v.shape[-1])
        q = pts[:, 1:, :].reshape(-1, v.shape[-1])
        total += float(np.sum(metric(p, q)))
    return total
