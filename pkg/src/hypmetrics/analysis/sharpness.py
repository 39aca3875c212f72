"""Limits of metric ratios in the unit disk that witness optimal comparison constants.

Limits at ``t -> 1`` converge only logarithmically in the boundary distance
``u = 1 - t`` (errors of order ``1/log(1/u)``). They are therefore evaluated
with the radial disk formulas written in terms of ``u``, which stay exact in
floating point down to ``u = 1e-300``. :func:`radial_disk_metrics` is checked
against the general metric functions at moderate ``t`` in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from ..density import k_density
from ..geometry import unit_disk
from ..metrics import j_metric, j_prime_metric, zeta, zeta_prime
from ..solver import SolverConfig, shortest_path_estimate

T_SMALL = 1e-4
U_SMALL = 1e-300


def radial_disk_metrics(u: float) -> dict[str, float]:
    """j, j', zeta, zeta' in the unit disk between 0 and the point at distance ``u`` from the circle."""
    t = 1.0 - u
    eta_y = u * (2.0 - u)
    return {
        "j": math.log1p(t / u),
        "j_prime": 0.5 * (math.log1p(t) + math.log1p(t / u)),
        "zeta": math.log1p(2.0 * t / eta_y),
        "zeta_prime": 0.5 * (math.log1p(2.0 * t) + math.log1p(2.0 * t / eta_y)),
    }


@dataclass
class SharpnessEntry:
    name: str
    description: str
    parameter: str
    value: float
    limit: float
    tolerance: float

    @property
    def deviation(self) -> float:
        return abs(self.value - self.limit)

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance

    def to_dict(self) -> dict:
        d = asdict(self)
        d.update(deviation=self.deviation, passed=self.passed)
        return d


@dataclass
class SharpnessReport:
    entries: list

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "entries": [e.to_dict() for e in self.entries]}


def sharpness_limit_suite(cfg: SolverConfig | None = None, t_small: float = T_SMALL, u_small: float = U_SMALL) -> SharpnessReport:
    D = unit_disk()
    o = np.zeros(2)
    p = np.array([t_small, 0.0])
    q = -p
    near = radial_disk_metrics(u_small)
    k_est = shortest_path_estimate(k_density(D), o, p, cfg).value
    at0 = f"t={t_small:g}"
    at1 = f"1-t={u_small:g}"
    entries = [
        SharpnessEntry("j/zeta(0,t), t->0", "lower constant of j <= zeta", at0,
                       j_metric(D, o, p) / zeta(D, o, p), 0.5, 1e-3),
        SharpnessEntry("zeta'/zeta(0,t), t->1", "lower constant of zeta' <= zeta", at1,
                       near["zeta_prime"] / near["zeta"], 0.5, 1e-3),
        SharpnessEntry("zeta'/j'(-t,t), t->0", "upper constant of zeta' <= 2 j'", at0,
                       zeta_prime(D, q, p) / j_prime_metric(D, q, p), 2.0, 1e-3),
        SharpnessEntry("zeta/j'(0,t), t->1", "lower constant of j' <= zeta", at1,
                       near["zeta"] / near["j_prime"], 1.0, 1e-3),
        SharpnessEntry("zeta/k_est(0,t), t->0", "upper constant of zeta <= 2k", at0,
                       zeta(D, o, p) / k_est, 2.0, 1e-3),
        SharpnessEntry("zeta'/j(0,t), t->1", "lower constant of j/2 <= zeta'", at1,
                       near["zeta_prime"] / near["j"], 0.5, 1e-2),
    ]
    return SharpnessReport(entries)
