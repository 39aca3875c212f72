"""Conformal densities whose path integrals define k, m and the hyperbolic metric."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedDomainError
from .geometry import Ball, Domain, as_point


class DensityKind(str, enum.Enum):
    K = "k"
    M = "m"
    H = "h"


@dataclass(frozen=True, eq=False)
class DensityField:
    """Weight ``z -> w(z)`` on a domain.

    * ``K``: ``1/delta(z)`` (quasihyperbolic)
    * ``M``: ``diam/(delta(z)(diam - delta(z)))``; falls back to ``K`` when unbounded
    * ``H``: ``2r/(r^2 - |z-c|^2)`` on a ball
    """

    kind: DensityKind
    domain: Domain

    def __post_init__(self):
        object.__setattr__(self, "kind", DensityKind(self.kind))
        if self.kind is DensityKind.H and not isinstance(self.domain, Ball):
            raise UnsupportedDomainError("the hyperbolic density is only defined on balls")

    @property
    def effective_kind(self) -> DensityKind:
        if self.kind is DensityKind.M and not self.domain.bounded:
            return DensityKind.K
        return self.kind

    def __call__(self, z, check: bool = True):
        if check:
            z = as_point(z, self.domain.dim)
            self.domain._require_inside(z)
        w = self.weights(np.asarray(z, dtype=float))
        return w.item() if w.ndim == 0 else w

    def weights(self, z: np.ndarray) -> np.ndarray:
        """Unchecked vectorised weights; nonpositive/NaN marks points off the domain."""
        delta = self.domain._delta(z)
        kind = self.effective_kind
        with np.errstate(divide="ignore", invalid="ignore"):
            if kind is DensityKind.K:
                w = 1.0 / delta
            elif kind is DensityKind.M:
                d = self.domain.diameter
                w = d / (delta * (d - delta))
            else:
                r = self.domain.radius
                w = 2.0 * r / (delta * (2.0 * r - delta))
        return np.where(delta > 0, w, np.nan)


def k_density(domain: Domain) -> DensityField:
    return DensityField(DensityKind.K, domain)


def m_density(domain: Domain) -> DensityField:
    return DensityField(DensityKind.M, domain)


def h_density(domain: Ball) -> DensityField:
    return DensityField(DensityKind.H, domain)


def density_at(field: DensityField, z) -> float:
    return field(z)
