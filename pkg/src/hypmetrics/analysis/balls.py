"""Metric-ball inclusion radii and empirical inclusion checks."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..density import DensityField
from ..geometry import Domain, as_point
from ..metrics import MetricKind, closed_form, zeta
from ..solver import SolverConfig, shortest_path_estimate
from .sampling import rng_from, sample_sphere

# evaluator(x, Z) -> metric values d(x, z) for every row z of Z
Evaluator = Callable[[np.ndarray, np.ndarray], np.ndarray]

LOG2 = math.log(2.0)


def closed_form_evaluator(kind: MetricKind | str, domain: Domain) -> Evaluator:
    f = closed_form(kind)

    def ev(x, Z):
        return np.atleast_1d(f(domain, np.broadcast_to(x, Z.shape), Z))

    return ev


def solver_evaluator(field: DensityField, cfg: SolverConfig | None = None) -> Evaluator:
    """Upper-bound path-metric values, one solve per point."""

    def ev(x, Z):
        return np.array([shortest_path_estimate(field, x, z, cfg).value for z in Z])

    return ev


def zeta_ball_radii(s: float, eta_x: float, d: float) -> tuple[float, float]:
    """Euclidean radii ``r < R`` with ``B(x, r) ⊂ B_zeta(x, s) ⊂ B(x, R)``.

    ``r = (1 - e^-s) eta(x)/d`` and ``R = (e^s - 1) eta(x)/d``; the same pair
    sandwiches the m-ball of radius ``s``.
    """
    for name, v in (("s", s), ("eta_x", eta_x), ("d", d)):
        if not (math.isfinite(v) and v > 0):
            raise ValueError(f"{name} must be positive and finite, got {v}")
    scale = eta_x / d
    return -math.expm1(-s) * scale, math.expm1(s) * scale


def zeta_m_ball_chain_radii(s: float) -> tuple[float, float]:
    """Radii of ``B_zeta(x,r) ⊂ B_m(x,s) ⊂ B_zeta(x,s) ⊂ B_m(x,R)`` for ``0 < s < log 2``."""
    if not (0.0 < s < LOG2):
        raise ValueError(f"s must lie in (0, log 2), got {s}")
    r = math.log1p(-math.expm1(-s))  # log(2 - e^-s)
    R = -math.log1p(-math.expm1(s))  # log(1 / (2 - e^s))
    return r, R


class Relation(str, enum.Enum):
    ZETA_VS_J = "zeta_vs_j"
    ZETA_VS_JPRIME = "zeta_vs_jprime"
    ZETAPRIME_VS_J = "zetaprime_vs_j"
    ZETAPRIME_VS_JPRIME = "zetaprime_vs_jprime"
    ZETAPRIME_EUCLIDEAN = "zetaprime_euclidean"

    @property
    def kinds(self) -> tuple[str | None, str]:
        """(comparison metric or None for Euclidean, ball metric)."""
        return {
            Relation.ZETA_VS_J: ("j", "zeta"),
            Relation.ZETA_VS_JPRIME: ("j_prime", "zeta"),
            Relation.ZETAPRIME_VS_J: ("j", "zeta_prime"),
            Relation.ZETAPRIME_VS_JPRIME: ("j_prime", "zeta_prime"),
            Relation.ZETAPRIME_EUCLIDEAN: (None, "zeta_prime"),
        }[self]


def fixed_factor_ball_radii(
    relation: Relation | str, s: float, eta_x: float | None = None, d: float | None = None
) -> tuple[float, float]:
    """``(r, R)`` with ``B_a(x, r) ⊂ B_b(x, s) ⊂ B_a(x, R)`` for the given relation.

    ``a`` is j, j' or the Euclidean metric, ``b`` is zeta or zeta'.
    """
    relation = Relation(relation)
    if not (math.isfinite(s) and s > 0):
        raise ValueError("s must be positive and finite")
    if relation in (Relation.ZETA_VS_J, Relation.ZETA_VS_JPRIME):
        return s / 2.0, s
    if relation in (Relation.ZETAPRIME_VS_J, Relation.ZETAPRIME_VS_JPRIME):
        return s / 2.0, 2.0 * s
    if eta_x is None or d is None:
        raise ValueError("zetaprime_euclidean needs eta_x and d")
    scale = eta_x / d
    return -math.expm1(-s) * scale, math.expm1(2.0 * s) * scale


@dataclass
class BallInclusionReport:
    center: np.ndarray
    s: float
    inner_radius: float
    outer_radius: float
    samples_tested: int
    violations: list = field(default_factory=list)
    skipped: int = 0
    inner_vacuous: bool = False
    # max of metric/s on the inner sphere and s/metric on the outer one
    worst_ratio: float = 0.0

    def __post_init__(self):
        if self.s > 0 and not self.inner_radius < self.outer_radius:
            raise ValueError("inner radius must be smaller than the outer radius")

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "center": np.asarray(self.center).tolist(),
            "s": self.s,
            "inner_radius": self.inner_radius,
            "outer_radius": self.outer_radius,
            "samples_tested": self.samples_tested,
            "skipped": self.skipped,
            "inner_vacuous": self.inner_vacuous,
            "worst_ratio": self.worst_ratio,
            "violations": [
                {"point": np.asarray(p).tolist(), "value": float(v), "sphere": side}
                for p, v, side in self.violations
            ],
        }


def check_ball_inclusion(
    domain: Domain,
    metric: Evaluator,
    x,
    s: float,
    radii: tuple[float, float],
    n_samples: int = 500,
    margin: float = 1e-9,
    rng=None,
    tol: float = 0.0,
    check_outer: bool = True,
) -> BallInclusionReport:
    """Sample the spheres of radius ``r - margin`` and ``R + margin`` about ``x``.

    Inner samples must have ``metric < s (1 + tol)``; outer samples (when
    ``check_outer``) must have ``metric >= s (1 - tol)``. Samples outside the
    domain are skipped and counted. ``tol`` is the relative allowance for
    numerical (solver) evaluators.
    """
    rng = rng_from(rng)
    x = as_point(x, domain.dim)
    domain._require_inside(x)
    r, R = radii
    report = BallInclusionReport(x, s, r, R, 0)
    spheres = []
    if r - margin > 0:
        spheres.append(("inner", r - margin))
    else:
        report.inner_vacuous = True
    if check_outer:
        spheres.append(("outer", R + margin))
    for side, rad in spheres:
        Z = sample_sphere(x, rad, n_samples, rng)
        inside = np.asarray(domain._contains(Z), bool)
        report.skipped += int(np.sum(~inside))
        Z = Z[inside]
        if len(Z) == 0:
            continue
        vals = metric(x, Z)
        report.samples_tested += len(Z)
        if side == "inner":
            bad = vals >= s * (1 + tol)
            worst = np.max(vals) / s
        else:
            bad = vals < s * (1 - tol)
            worst = s / np.min(vals)
        report.worst_ratio = max(report.worst_ratio, float(worst))
        report.violations.extend((z, v, side) for z, v in zip(Z[bad], vals[bad]))
    return report


@dataclass
class ChainReport:
    s: float
    r: float
    R: float
    samples_tested: int
    violations: list = field(default_factory=list)
    skipped: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "r": self.r,
            "R": self.R,
            "samples_tested": self.samples_tested,
            "skipped": self.skipped,
            "violations": self.violations,
        }


def check_ball_chain(
    domain: Domain,
    x,
    s: float,
    m_metric: Evaluator,
    n_samples: int = 40,
    rng=None,
    tol: float = 0.0,
) -> ChainReport:
    """Membership implications behind ``B_z(x,r) ⊂ B_m(x,s) ⊂ B_z(x,s) ⊂ B_m(x,R)``.

    Points are drawn uniformly from the Euclidean ball that contains
    ``B_zeta(x, s)``; for each one the three implications
    ``zeta < r => m < s``, ``m < s => zeta < s`` and ``zeta < s => m < R``
    are tested. ``tol`` relaxes the right-hand sides of the m-bounds.
    """
    rng = rng_from(rng)
    x = as_point(x, domain.dim)
    domain._require_inside(x)
    r, R = zeta_m_ball_chain_radii(s)
    eta_x = float(domain.eta(x))
    outer = math.expm1(s) * eta_x / domain.diameter
    n = domain.dim
    u = rng.normal(size=(n_samples, n))
    u /= np.linalg.norm(u, axis=-1, keepdims=True)
    rad = outer * 1.05 * rng.uniform(size=(n_samples, 1)) ** (1.0 / n)
    Z = x + rad * u
    inside = np.asarray(domain._contains(Z), bool)
    Z = Z[inside]
    rep = ChainReport(s, r, R, len(Z), skipped=int(np.sum(~inside)))
    if len(Z) == 0:
        return rep
    zv = np.atleast_1d(zeta(domain, np.broadcast_to(x, Z.shape), Z))
    mv = m_metric(x, Z)
    for z, a, b in zip(Z, zv, mv):
        fails = []
        if a < r and not b < s * (1 + tol):
            fails.append("zeta<r => m<s")
        if b < s and not a < s:
            fails.append("m<s => zeta<s")
        if a < s and not b < R * (1 + tol):
            fails.append("zeta<s => m<R")
        if fails:
            rep.violations.append({"point": z.tolist(), "zeta": float(a), "m": float(b), "failed": fails})
    return rep


def check_fixed_factor(domain: Domain, relation: Relation | str, x, s: float, Z, slack: float = 1e-12) -> list:
    """Ball-membership implications of a fixed-factor inclusion at sample points ``Z``.

    Returns the list of violating points.
    """
    relation = Relation(relation)
    x = as_point(x, domain.dim)
    Z = as_point(Z, domain.dim)
    X = np.broadcast_to(x, Z.shape)
    a_kind, b_kind = relation.kinds
    b = np.atleast_1d(closed_form(b_kind)(domain, X, Z))
    if a_kind is None:
        r, R = fixed_factor_ball_radii(relation, s, float(domain.eta(x)), domain.diameter)
        a = np.linalg.norm(Z - X, axis=-1)
    else:
        r, R = fixed_factor_ball_radii(relation, s)
        a = np.atleast_1d(closed_form(a_kind)(domain, X, Z))
    bad = ((a < r - slack) & ~(b < s)) | ((b < s - slack) & ~(a < R))
    return [{"point": z.tolist(), "inner_metric": float(p), "ball_metric": float(q)} for z, p, q in zip(Z[bad], a[bad], b[bad])]
