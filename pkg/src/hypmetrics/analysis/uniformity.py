"""Uniformity diagnostics: the ratio m/zeta and the zeta-versus-k check on the slit disk."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from ..density import k_density, m_density
from ..errors import SolverError, UnsupportedDomainError
from ..geometry import Domain, SlitDisk
from ..metrics import MetricKind, closed_form, zeta
from ..solver import SolverConfig, shortest_path_estimate
from .sampling import rng_from, sample_pairs

log = logging.getLogger(__name__)


@dataclass
class UniformityEstimate:
    pairs_tested: int
    max_ratio: float
    argmax_pair: tuple | None
    skipped: int = 0
    ratios: list = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        pair = None if self.argmax_pair is None else [np.asarray(p).tolist() for p in self.argmax_pair]
        return {
            "pairs_tested": self.pairs_tested,
            "max_ratio": self.max_ratio,
            "argmax_pair": pair,
            "skipped": self.skipped,
        }


def uniformity_ratio(
    domain: Domain,
    n_pairs: int = 200,
    cfg: SolverConfig | None = None,
    which: MetricKind | str = MetricKind.Zeta,
    rng=None,
    pairs=None,
) -> UniformityEstimate:
    """Largest ``m_est(x, y) / beta(x, y)`` over random pairs, ``beta`` = zeta or zeta'.

    Coincident pairs and solver failures are skipped (counted). A bounded
    maximum over growing samples is the numerical signature of a uniform
    domain.
    """
    if not domain.bounded:
        raise UnsupportedDomainError("uniformity ratio needs a bounded domain")
    which = MetricKind.parse(which) if isinstance(which, str) else which
    if which not in (MetricKind.Zeta, MetricKind.ZetaPrime):
        raise ValueError("which must be zeta or zeta_prime")
    beta = closed_form(which)
    if pairs is None:
        X, Y = sample_pairs(domain, n_pairs, rng_from(rng))
        pairs = list(zip(X, Y))
    field_ = m_density(domain)
    est = UniformityEstimate(0, 0.0, None)
    for x, y in pairs:
        x, y = np.asarray(x, float), np.asarray(y, float)
        if np.array_equal(x, y):
            est.skipped += 1
            continue
        try:
            m = shortest_path_estimate(field_, x, y, cfg).value
        except SolverError as exc:
            log.warning("skipping pair %s, %s: %s", x, y, exc)
            est.skipped += 1
            continue
        ratio = m / beta(domain, x, y)
        est.ratios.append(ratio)
        est.pairs_tested += 1
        if ratio > est.max_ratio:
            est.max_ratio, est.argmax_pair = ratio, (x, y)
    return est


def straddle_pairs(domain: SlitDisk, eps_list, along: float = 0.5) -> list:
    """Pairs mirrored across the slit at distance ``eps`` from the point ``along`` of its length."""
    a, b = domain.slit
    base = a + along * (b - a)
    u = (b - a) / np.linalg.norm(b - a)
    n = np.array([-u[1], u[0]])
    return [(base + e * n, base - e * n) for e in eps_list]


@dataclass
class StraddleReport:
    eps: list
    ratios: list
    m_values: list
    zeta_values: list

    @property
    def strictly_increasing(self) -> bool:
        return all(b > a for a, b in zip(self.ratios, self.ratios[1:]))

    def to_dict(self) -> dict:
        return {
            "eps": self.eps,
            "ratios": self.ratios,
            "m_values": self.m_values,
            "zeta_values": self.zeta_values,
            "strictly_increasing": self.strictly_increasing,
        }


def straddle_ratios(domain: SlitDisk, eps_list=(1e-2, 1e-3, 1e-4), cfg: SolverConfig | None = None) -> StraddleReport:
    """``m_est / zeta`` for pairs straddling the slit ever closer to it."""
    field_ = m_density(domain)
    rep = StraddleReport(list(eps_list), [], [], [])
    for x, y in straddle_pairs(domain, eps_list):
        m = shortest_path_estimate(field_, x, y, cfg).value
        z = zeta(domain, x, y)
        rep.m_values.append(m)
        rep.zeta_values.append(z)
        rep.ratios.append(m / z)
    return rep


@dataclass
class ZetaKReport:
    checked: int
    violations: list
    max_ratio: float
    tol: float

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"checked": self.checked, "violations": self.violations, "max_ratio": self.max_ratio, "tol": self.tol}


def nonuniform_zeta_k_check(domain: SlitDisk, pairs, cfg: SolverConfig | None = None, tol: float = 1e-2) -> ZetaKReport:
    """Test ``zeta(x, y) <= k_est(x, y) (1 + tol)`` on the given pairs.

    ``k_est`` is an upper bound for the quasihyperbolic metric, so a
    violation is a genuine witness of ``zeta > k``.
    """
    if not isinstance(domain, SlitDisk):
        raise UnsupportedDomainError("the zeta-k check runs on the slit disk")
    field_ = k_density(domain)
    rep = ZetaKReport(0, [], 0.0, tol)
    for x, y in pairs:
        x, y = np.asarray(x, float), np.asarray(y, float)
        z = zeta(domain, x, y)
        k = shortest_path_estimate(field_, x, y, cfg).value
        rep.checked += 1
        if k > 0:
            rep.max_ratio = max(rep.max_ratio, z / k)
        if z > k * (1 + tol):
            rep.violations.append({"x": x.tolist(), "y": y.tolist(), "zeta": z, "k_est": k})
    return rep
