"""Moebius maps of the extended space, exact images of balls/half-spaces, distortion checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .errors import UnsupportedDomainError
from .geometry import Ball, Domain, HalfSpace, as_point
from .metrics import zeta, zeta_prime


class _Infinity:
    """The point at infinity of the one-point compactification."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
ExtendedPoint = Union[np.ndarray, _Infinity]

_ATOL = 1e-12


def is_inf(p) -> bool:
    return p is INF


# ---------------------------------------------------------------- primitives


@dataclass(frozen=True, eq=False)
class Translation:
    v: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "v", as_point(self.v))

    def __call__(self, p):
        return INF if p is INF else p + self.v

    def image(self, dom):
        if isinstance(dom, Ball):
            return Ball(dom.center + self.v, dom.radius)
        return HalfSpace(dom.normal, dom.offset + float(dom.normal @ self.v))

    def to_dict(self):
        return {"kind": "translate", "vector": self.v.tolist()}


@dataclass(frozen=True, eq=False)
class Scaling:
    factor: float

    def __post_init__(self):
        if not (np.isfinite(self.factor) and self.factor > 0):
            raise ValueError("scaling factor must be positive and finite")
        object.__setattr__(self, "factor", float(self.factor))

    def __call__(self, p):
        return INF if p is INF else self.factor * p

    def image(self, dom):
        if isinstance(dom, Ball):
            return Ball(self.factor * dom.center, self.factor * dom.radius)
        return HalfSpace(dom.normal, self.factor * dom.offset)

    def to_dict(self):
        return {"kind": "scale", "factor": self.factor}


@dataclass(frozen=True, eq=False)
class OrthogonalLinear:
    matrix: np.ndarray

    def __post_init__(self):
        q = np.asarray(self.matrix, dtype=float)
        if q.ndim != 2 or q.shape[0] != q.shape[1]:
            raise ValueError("orthogonal map needs a square matrix")
        if not np.allclose(q.T @ q, np.eye(len(q)), atol=1e-10):
            raise ValueError("matrix is not orthogonal (Q^T Q != I)")
        object.__setattr__(self, "matrix", q)

    def __call__(self, p):
        return INF if p is INF else p @ self.matrix.T

    def image(self, dom):
        if isinstance(dom, Ball):
            return Ball(self.matrix @ dom.center, dom.radius)
        return HalfSpace(self.matrix @ dom.normal, dom.offset)

    def to_dict(self):
        return {"kind": "orthogonal", "matrix": self.matrix.tolist()}


@dataclass(frozen=True, eq=False)
class SphereInversion:
    """``z -> a + rho^2 (z - a) / |z - a|^2``; swaps ``a`` and infinity."""

    center: np.ndarray
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center))
        if not (np.isfinite(self.radius) and self.radius > 0):
            raise ValueError("inversion radius must be positive and finite")
        object.__setattr__(self, "radius", float(self.radius))

    def __call__(self, p):
        if p is INF:
            return self.center.copy()
        w = p - self.center
        s = np.sum(w * w, axis=-1, keepdims=True)
        if p.ndim == 1:
            return INF if s[0] == 0.0 else self.center + self.radius**2 * w / s
        if np.any(s == 0.0):
            raise ValueError("batch contains the inversion center; map points one by one")
        return self.center + self.radius**2 * w / s

    def image(self, dom):
        a, rho2 = self.center, self.radius**2
        if isinstance(dom, Ball):
            c, r = dom.center, dom.radius
            dist = float(np.linalg.norm(c - a))
            if abs(dist - r) <= _ATOL * max(1.0, r):
                # a on the sphere: image is the half-space facing away from a
                u = (c - a) / dist
                return HalfSpace(u, float(u @ a) + rho2 / (2.0 * r))
            if dist < r:
                raise UnsupportedDomainError(
                    "inversion center inside the ball: the image is a ball exterior"
                )
            u = (c - a) / dist
            near = self(c - r * u)
            far = self(c + r * u)
            return Ball(0.5 * (near + far), 0.5 * float(np.linalg.norm(near - far)))
        n, c0 = dom.normal, dom.offset
        t = c0 - float(n @ a)
        if abs(t) <= _ATOL * max(1.0, abs(c0)):
            return HalfSpace(n, c0)
        if t < 0:
            raise UnsupportedDomainError(
                "inversion center inside the half-space: the image is a ball exterior"
            )
        rad = rho2 / (2.0 * t)
        return Ball(a + rad * n, rad)

    def to_dict(self):
        return {"kind": "inversion", "center": self.center.tolist(), "radius": self.radius}


Primitive = Union[Translation, Scaling, OrthogonalLinear, SphereInversion]


# ---------------------------------------------------------------- composite map


@dataclass(frozen=True, eq=False)
class MobiusMap:
    """Composition of primitives, applied left to right."""

    steps: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(())

    def then(self, other: "MobiusMap | Primitive") -> "MobiusMap":
        extra = other.steps if isinstance(other, MobiusMap) else (other,)
        return MobiusMap(self.steps + tuple(extra))

    def inverse(self) -> "MobiusMap":
        inv = []
        for s in reversed(self.steps):
            if isinstance(s, Translation):
                inv.append(Translation(-s.v))
            elif isinstance(s, Scaling):
                inv.append(Scaling(1.0 / s.factor))
            elif isinstance(s, OrthogonalLinear):
                inv.append(OrthogonalLinear(s.matrix.T))
            else:
                inv.append(s)
        return MobiusMap(inv)

    @property
    def is_similarity(self) -> bool:
        return not any(isinstance(s, SphereInversion) for s in self.steps)

    def __call__(self, p):
        return mobius_apply(self, p)

    def to_dict(self) -> dict:
        return {"steps": [s.to_dict() for s in self.steps]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, desc: dict) -> "MobiusMap":
        steps = []
        for st in desc.get("steps", []):
            kind = st["kind"]
            if kind == "inversion":
                steps.append(SphereInversion(st["center"], st["radius"]))
            elif kind == "scale":
                steps.append(Scaling(st["factor"]))
            elif kind == "translate":
                steps.append(Translation(st.get("vector", st.get("v"))))
            elif kind == "orthogonal":
                steps.append(OrthogonalLinear(st["matrix"]))
            else:
                raise ValueError(f"unknown Moebius step kind {kind!r}")
        return cls(steps)

    @classmethod
    def from_json(cls, text: str) -> "MobiusMap":
        return cls.from_dict(json.loads(text))


def mobius_apply(fmap: MobiusMap, p) -> ExtendedPoint:
    """Image of ``p`` (a point, a batch of points or :data:`INF`)."""
    q = p if p is INF else np.asarray(p, dtype=float)
    for step in fmap.steps:
        q = step(q)
    return q


def image_domain(fmap: MobiusMap, domain: Domain) -> Domain:
    """Exact image of a Ball or HalfSpace, tracked primitive by primitive."""
    if not isinstance(domain, (Ball, HalfSpace)):
        raise UnsupportedDomainError(
            f"images of {type(domain).__name__} are not library shapes; use Ball or HalfSpace"
        )
    dom = domain
    for step in fmap.steps:
        dom = step.image(dom)
    return dom


def cross_ratio(a, b, c, d) -> float:
    """``|a-b||c-d| / (|a-c||b-d|)`` for finite points."""
    a, b, c, d = (np.asarray(v, dtype=float) for v in (a, b, c, d))
    n = np.linalg.norm
    return float(n(a - b) * n(c - d) / (n(a - c) * n(b - d)))


# ---------------------------------------------------------------- distortion


@dataclass
class DistortionReport:
    checked: int
    skipped: int
    max_ratio_zeta: float
    max_ratio_zeta_prime: float
    violations: list
    bound: float = 4.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "checked": self.checked,
            "skipped": self.skipped,
            "max_ratio_zeta": self.max_ratio_zeta,
            "max_ratio_zeta_prime": self.max_ratio_zeta_prime,
            "bound": self.bound,
            "violations": self.violations,
        }


def mobius_distortion_check(
    fmap: MobiusMap, domain: Domain, pairs: Sequence, bound: float = 4.0, slack: float = 1e-12
) -> DistortionReport:
    """Ratios ``zeta_{f(D)}(fx, fy) / zeta_D(x, y)`` and the same for zeta'.

    Pairs with ``x == y`` or an image at infinity are skipped (counted).
    """
    if not domain.bounded:
        raise UnsupportedDomainError("distortion check expects a bounded source domain")
    target = image_domain(fmap, domain)
    worst_z = worst_zp = 0.0
    violations = []
    checked = skipped = 0
    for x, y in pairs:
        x = as_point(x, domain.dim)
        y = as_point(y, domain.dim)
        fx, fy = mobius_apply(fmap, x), mobius_apply(fmap, y)
        if np.array_equal(x, y) or fx is INF or fy is INF:
            skipped += 1
            continue
        rz = zeta(target, fx, fy) / zeta(domain, x, y)
        rzp = zeta_prime(target, fx, fy) / zeta_prime(domain, x, y)
        worst_z, worst_zp = max(worst_z, rz), max(worst_zp, rzp)
        checked += 1
        if rz > bound + slack or rzp > bound + slack:
            violations.append({"x": x.tolist(), "y": y.tolist(), "ratio_zeta": rz, "ratio_zeta_prime": rzp})
    return DistortionReport(checked, skipped, worst_z, worst_zp, violations, bound)


def random_mobius_map(rng: np.random.Generator, domain: Domain, max_steps: int = 3, tries: int = 200) -> MobiusMap:
    """Random composition of up to ``max_steps`` primitives whose image of ``domain`` is a library shape.

    Inversion centers are drawn outside the current image (or on its boundary),
    which keeps every intermediate image a ball or half-space.
    """
    n = domain.dim
    for _ in range(tries):
        k = int(rng.integers(1, max_steps + 1))
        steps = []
        dom = domain
        for _ in range(k):
            kind = rng.choice(["translate", "scale", "orthogonal", "inversion"])
            if kind == "translate":
                st = Translation(rng.normal(size=n))
            elif kind == "scale":
                st = Scaling(float(np.exp(rng.uniform(-1, 1))))
            elif kind == "orthogonal":
                q, r = np.linalg.qr(rng.normal(size=(n, n)))
                st = OrthogonalLinear(q * np.sign(np.diag(r)))
            else:
                st = SphereInversion(_outside_point(rng, dom), float(np.exp(rng.uniform(-0.5, 0.5))))
            try:
                dom = st.image(dom)
            except UnsupportedDomainError:
                break
            steps.append(st)
        else:
            if any(isinstance(s, SphereInversion) for s in steps):
                return MobiusMap(steps)
    raise RuntimeError("could not draw an admissible Moebius map")  # pragma: no cover


def _outside_point(rng, dom):
    u = rng.normal(size=dom.dim)
    u /= np.linalg.norm(u)
    if isinstance(dom, Ball):
        if rng.uniform() < 0.3:
            return dom.center + dom.radius * u  # on the sphere
        return dom.center + dom.radius * (1.0 + rng.uniform(0.05, 1.0)) * u
    foot = dom.normal * dom.offset
    tangent = u - (u @ dom.normal) * dom.normal
    return foot + tangent - rng.uniform(0.0, 1.0) * dom.normal
