"""Theorem-by-theorem verification suites and the JSON report format.

Each suite samples its own inputs from a generator seeded by ``(seed, suite id)``
so a suite's result does not depend on which other suites run alongside it.
Metric functions are looked up in :data:`METRICS` at call time; the test
suite swaps entries there to make sure a wrong constant is caught.
"""

from __future__ import annotations

import dataclasses
import math
import zlib
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .. import metrics as _m
from ..density import k_density, m_density
from ..geometry import Ball, Domain, SlitDisk, unit_disk
from ..paths import metric_length
from ..solver import SolverConfig, shortest_path_estimate
from ..transforms import (
    MobiusMap,
    OrthogonalLinear,
    Scaling,
    Translation,
    mobius_distortion_check,
    random_mobius_map,
)
from .balls import (
    LOG2,
    Relation,
    check_ball_chain,
    check_ball_inclusion,
    check_fixed_factor,
    solver_evaluator,
    zeta_ball_radii,
    zeta_m_ball_chain_radii,
)
from .sampling import sample_directions, sample_interior, sample_pairs, standard_shapes
from .sharpness import sharpness_limit_suite
from .uniformity import nonuniform_zeta_k_check, straddle_ratios, uniformity_ratio

METRICS: dict[str, Callable] = {
    "j": _m.j_metric,
    "j_prime": _m.j_prime_metric,
    "zeta": _m.zeta,
    "zeta_prime": _m.zeta_prime,
    "h": _m.hyperbolic_closed_form,
}

BALL_S = (0.1, LOG2, 1.0, 2.0)
CHAIN_S = (0.1, 0.3, 0.6)


@dataclass
class VerifyConfig:
    seed: int = 42
    n_pairs: int = 200
    n_triples: int = 200
    n_solver_pairs: int = 8
    n_sphere: int = 500
    n_solver_sphere: int = 6
    n_density: int = 20
    n_maps: int = 10
    slack: float = 1e-12
    solver_tol: float = 1e-2
    shapes: tuple = ("ball", "annulus", "punctured_ball", "slit_disk", "polygon")
    solver: SolverConfig = field(default_factory=SolverConfig)

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["shapes"] = list(self.shapes)
        return d


@dataclass
class SuiteReport:
    theorem: str
    description: str
    checked: int = 0
    violations: list = field(default_factory=list)
    max_ratio: float = 0.0
    config: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, check: str, lhs, rhs, slack: float, where=None):
        """Count ``lhs <= rhs + slack`` elementwise; ``where`` gives witness context."""
        lhs = np.atleast_1d(np.asarray(lhs, dtype=float))
        rhs = np.atleast_1d(np.asarray(rhs, dtype=float))
        self.checked += lhs.size
        pos = rhs > 0
        if pos.any():
            self.max_ratio = max(self.max_ratio, float(np.max(lhs[pos] / rhs[pos])))
        bad = ~(lhs <= rhs + slack)
        for i in np.flatnonzero(bad):
            w = {"check": check, "lhs": float(lhs[i]), "rhs": float(rhs[i])}
            if where is not None:
                w.update({k: np.asarray(v[i]).tolist() for k, v in where.items()})
            self.violations.append(w)

    def fail(self, check: str, **info):
        self.checked += 1
        self.violations.append({"check": check, **_jsonable(info)})

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "description": self.description,
            "checked": self.checked,
            "violations": self.violations,
            "max_ratio": self.max_ratio,
            "config": self.config,
            "details": self.details,
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


def _rng(cfg: VerifyConfig, suite_id: str) -> np.random.Generator:
    return np.random.default_rng([cfg.seed, zlib.crc32(suite_id.encode())])


def _shapes(cfg: VerifyConfig, only=None) -> dict[str, Domain]:
    allshapes = standard_shapes(2)
    names = [n for n in cfg.shapes if only is None or n in only]
    return {n: allshapes[n] for n in names}


def _pairwise(rep: SuiteReport, cfg: VerifyConfig, rng, checks):
    """Run ``checks(domain, X, Y) -> [(name, lhs, rhs)]`` on random pairs of every shape."""
    for name, dom in _shapes(cfg).items():
        X, Y = sample_pairs(dom, cfg.n_pairs, rng)
        for check, lhs, rhs in checks(dom, X, Y):
            rep.record(f"{name}: {check}", lhs, rhs, cfg.slack, {"x": X, "y": Y})


def _M(name):
    return METRICS[name]


# ---------------------------------------------------------------- closed-form suites


def _lemma_j(rep, cfg, rng):
    def checks(D, X, Y):
        j, jp = _M("j")(D, X, Y), _M("j_prime")(D, X, Y)
        return [("j' <= j", jp, j), ("j <= 2 j'", j, 2 * jp)]

    _pairwise(rep, cfg, rng, checks)


def _lemma_eta(rep, cfg, rng):
    def checks(D, X, Y):
        d = D.diameter
        dx, dy = D._delta(X), D._delta(Y)
        ex, ey = dx * (d - dx), dy * (d - dy)
        dist = np.linalg.norm(X - Y, axis=-1)
        lo_e = np.where(dx <= dy, ex, ey)
        hi_e = np.where(dx <= dy, ey, ex)
        return [
            ("delta 1-Lipschitz", np.abs(dx - dy), dist),
            ("eta d-Lipschitz", np.abs(ex - ey), d * dist),
            ("eta <= d delta", ex, d * dx),
            ("delta <= d/2", dx, np.full_like(dx, d / 2)),
            ("delta monotone => eta monotone", lo_e, hi_e),
        ]

    _pairwise(rep, cfg, rng, checks)


def _axioms(rep, cfg, rng):
    for name, D in _shapes(cfg).items():
        P = sample_interior(D, 3 * cfg.n_triples, rng)
        X, Y, Z = P[: cfg.n_triples], P[cfg.n_triples : 2 * cfg.n_triples], P[2 * cfg.n_triples :]
        where = {"x": X, "y": Y, "z": Z}
        for mk in ("zeta", "zeta_prime"):
            f = _M(mk)
            xy, yx, yz, xz = f(D, X, Y), f(D, Y, X), f(D, Y, Z), f(D, X, Z)
            rep.record(f"{name}: {mk} symmetry", np.abs(xy - yx), np.zeros_like(xy), cfg.slack, where)
            rep.record(f"{name}: {mk} triangle", xz, xy + yz, cfg.slack, where)
            rep.record(f"{name}: {mk} identity", np.abs(f(D, X, X)), np.zeros_like(xy), 0.0, where)
            zero = ~(xy > 0)
            for i in np.flatnonzero(zero):
                rep.fail(f"{name}: {mk} positivity", x=X[i], y=Y[i], value=xy[i])
            rep.checked += len(xy)


def _prop_zeta_zetap(rep, cfg, rng):
    def checks(D, X, Y):
        z, zp = _M("zeta")(D, X, Y), _M("zeta_prime")(D, X, Y)
        return [("zeta' <= zeta", zp, z), ("zeta <= 2 zeta'", z, 2 * zp)]

    _pairwise(rep, cfg, rng, checks)


def _thm_zeta_j(rep, cfg, rng):
    def checks(D, X, Y):
        j, jp = _M("j")(D, X, Y), _M("j_prime")(D, X, Y)
        z, zp = _M("zeta")(D, X, Y), _M("zeta_prime")(D, X, Y)
        return [
            ("j <= zeta", j, z),
            ("zeta <= 2 j", z, 2 * j),
            ("j' <= zeta'", jp, zp),
            ("zeta' <= 2 j'", zp, 2 * jp),
        ]

    _pairwise(rep, cfg, rng, checks)


def _cor_cross(rep, cfg, rng):
    def checks(D, X, Y):
        j, jp = _M("j")(D, X, Y), _M("j_prime")(D, X, Y)
        z, zp = _M("zeta")(D, X, Y), _M("zeta_prime")(D, X, Y)
        return [
            ("j' <= zeta", jp, z),
            ("zeta <= 4 j'", z, 4 * jp),
            ("j/2 <= zeta'", j / 2, zp),
            ("zeta' <= 2 j", zp, 2 * j),
        ]

    _pairwise(rep, cfg, rng, checks)


def _prop_zeta_2jp(rep, cfg, rng):
    def checks(D, X, Y):
        return [("zeta <= 2 j'", _M("zeta")(D, X, Y), 2 * _M("j_prime")(D, X, Y))]

    _pairwise(rep, cfg, rng, checks)


def _log_eta(rep, cfg, rng):
    def checks(D, X, Y):
        d = D.diameter
        ex = D._delta(X) * (d - D._delta(X))
        ey = D._delta(Y) * (d - D._delta(Y))
        return [("|log(eta(x)/eta(y))| <= zeta", np.abs(np.log(ex / ey)), _M("zeta")(D, X, Y))]

    _pairwise(rep, cfg, rng, checks)


def _ball_h(rep, cfg, rng):
    for dim in (2, 3):
        B = Ball(np.zeros(dim), 1.0)
        X, Y = sample_pairs(B, cfg.n_pairs, rng)
        z, h = _M("zeta")(B, X, Y), _M("h")(B, X, Y)
        where = {"x": X, "y": Y}
        rep.record(f"ball{dim}: zeta <= h", z, h, cfg.slack, where)
        rep.record(f"ball{dim}: h <= 2 zeta", h, 2 * z, cfg.slack, where)


# ---------------------------------------------------------------- path-metric suites


def _solver_pairs(cfg, rng, names=("ball", "annulus", "polygon", "slit_disk")):
    for name, D in _shapes(cfg, names).items():
        X, Y = sample_pairs(D, cfg.n_solver_pairs, rng)
        yield name, D, X, Y


def _thm_m_zeta(rep, cfg, rng):
    for name, D, X, Y in _solver_pairs(cfg, rng):
        m = np.array([shortest_path_estimate(m_density(D), x, y, cfg.solver).value for x, y in zip(X, Y)])
        z, zp = _M("zeta")(D, X, Y), _M("zeta_prime")(D, X, Y)
        where = {"x": X, "y": Y}
        rep.record(f"{name}: zeta <= m_est", z, m, cfg.slack, where)
        rep.record(f"{name}: zeta' <= zeta", zp, z, cfg.slack, where)


def _prop_zeta_2k(rep, cfg, rng):
    for name, D, X, Y in _solver_pairs(cfg, rng):
        k = np.array([shortest_path_estimate(k_density(D), x, y, cfg.solver).value for x, y in zip(X, Y)])
        rep.record(f"{name}: zeta <= 2 k_est", _M("zeta")(D, X, Y), 2 * k, cfg.slack, {"x": X, "y": Y})


def _local_points(D, rng, n, frac_lo, frac_hi):
    """Base points and nearby points at distance ``frac * eta(x)/d``."""
    X = sample_interior(D, n, rng)
    d = D.diameter
    eta = D._delta(X) * (d - D._delta(X))
    frac = rng.uniform(frac_lo, frac_hi, size=n)
    Y = X + (frac * eta / d)[:, None] * sample_directions(D.dim, n, rng)
    return X, Y, frac


def _lemma_local_m(rep, cfg, rng):
    for name, D in _shapes(cfg, ("ball", "annulus", "polygon")).items():
        for s in (0.1, 0.5, 0.9):
            X, Y, _ = _local_points(D, rng, cfg.n_solver_pairs, 0.5 * s, 0.99 * s)
            m = np.array([shortest_path_estimate(m_density(D), x, y, cfg.solver).value for x, y in zip(X, Y)])
            bound = _M("zeta")(D, X, Y) / (1 - s)
            rep.record(f"{name}: m_est <= zeta/(1-s), s={s}", m, bound * (1 + cfg.solver_tol), 0.0, {"x": X, "y": Y})


def _cor_two_sided(rep, cfg, rng):
    for name, D in _shapes(cfg, ("ball", "annulus", "polygon")).items():
        X, Y, _ = _local_points(D, rng, 2 * cfg.n_solver_pairs, 0.05, 0.9)
        d = D.diameter
        eta = D._delta(X) * (d - D._delta(X))
        w = d * np.linalg.norm(X - Y, axis=-1)
        m = np.array([shortest_path_estimate(m_density(D), x, y, cfg.solver).value for x, y in zip(X, Y)])
        where = {"x": X, "y": Y}
        rep.record(f"{name}: lower log bound <= m_est", np.log1p(w / (eta + w)), m, cfg.slack, where)
        rep.record(f"{name}: m_est <= upper log bound", m, np.log1p(w / (eta - w)) * (1 + cfg.solver_tol), 0.0, where)


def _density_limit(rep, cfg, rng, t=1e-6, tol=1e-4):
    worst = 0.0
    for name, D in _shapes(cfg).items():
        X = sample_interior(D, cfg.n_density, rng)
        V = sample_directions(D.dim, cfg.n_density, rng)
        Y = X + t * V
        ok = np.asarray(D._contains(Y), bool)
        X, Y = X[ok], Y[ok]
        d = D.diameter
        eta = D._delta(X) * (d - D._delta(X))
        rel = np.abs(_M("zeta")(D, X, Y) / t - d / eta) / (d / eta)
        worst = max(worst, float(rel.max()))
        rep.record(f"{name}: relative density error at t={t:g}", rel, np.full_like(rel, tol), 0.0, {"x": X, "y": Y})
    rep.details["max_relative_error"] = worst


def _inner_metric(rep, cfg, rng, depth=12):
    for name, D in _shapes(cfg, ("ball", "annulus")).items():
        X, Y = sample_pairs(D, cfg.n_solver_pairs, rng)
        for x, y in zip(X, Y):
            est = shortest_path_estimate(m_density(D), x, y, cfg.solver)
            ell = metric_length(lambda p, q: _M("zeta")(D, p, q), est.path, depth)
            rel = abs(ell - est.value) / est.value
            rep.record(f"{name}: |l_zeta - m_est|/m_est", rel, cfg.solver_tol, 0.0, {"x": [x], "y": [y]})


# ---------------------------------------------------------------- balls


def _ball_centers(D, rng, n=1):
    return sample_interior(D, n, rng)


def _thm_zeta_balls(rep, cfg, rng):
    for name, D in _shapes(cfg, ("ball", "annulus", "polygon")).items():
        x = _ball_centers(D, rng)[0]
        ev = _metric_evaluator("zeta", D)
        for s in BALL_S:
            radii = zeta_ball_radii(s, float(D.eta(x)), D.diameter)
            r = check_ball_inclusion(D, ev, x, s, radii, cfg.n_sphere, 1e-9, rng)
            rep.checked += r.samples_tested
            rep.max_ratio = max(rep.max_ratio, r.worst_ratio)
            rep.violations.extend({"shape": name, "s": s, **v} for v in r.to_dict()["violations"])
    _radius_limit(rep, 1e-6, 1e-5, lambda s: zeta_ball_radii(s, 1.0, 2.0))


def _thm_m_balls(rep, cfg, rng):
    for name, D in _shapes(cfg, ("ball", "annulus", "polygon")).items():
        x = _ball_centers(D, rng)[0]
        ev = solver_evaluator(m_density(D), cfg.solver)
        for s in BALL_S:
            radii = zeta_ball_radii(s, float(D.eta(x)), D.diameter)
            r = check_ball_inclusion(D, ev, x, s, radii, cfg.n_solver_sphere, 1e-9, rng, tol=cfg.solver_tol)
            rep.checked += r.samples_tested
            rep.max_ratio = max(rep.max_ratio, r.worst_ratio)
            rep.violations.extend({"shape": name, "s": s, **v} for v in r.to_dict()["violations"])


def _thm_chain(rep, cfg, rng):
    D = unit_disk()
    x = _ball_centers(D, rng)[0]
    ev = solver_evaluator(m_density(D), cfg.solver)
    for s in CHAIN_S:
        r = check_ball_chain(D, x, s, ev, n_samples=4 * cfg.n_solver_sphere, rng=rng, tol=cfg.solver_tol)
        rep.checked += 3 * r.samples_tested
        rep.violations.extend({"s": s, **v} for v in r.violations)
        rep.details[f"s={s:g}"] = {"r": r.r, "R": r.R}
    _radius_limit(rep, 1e-4, 1e-3, zeta_m_ball_chain_radii)


def _radius_limit(rep, s, tol, radii):
    r, R = radii(s)
    rep.record(f"|R/r - 1| at s={s:g}", abs(R / r - 1), tol, 0.0)
    rep.details[f"R/r at s={s:g}"] = R / r


def _fixed_factor(relations):
    def suite(rep, cfg, rng):
        for name, D in _shapes(cfg, ("ball", "annulus", "polygon")).items():
            x = _ball_centers(D, rng)[0]
            eta_x, d = float(D.eta(x)), D.diameter
            for rel in relations:
                for s in BALL_S:
                    reach = math.expm1(2 * s) * eta_x / d if rel is Relation.ZETAPRIME_EUCLIDEAN else 3.0
                    n = cfg.n_pairs
                    near = x + reach * rng.uniform(size=(n, 1)) ** 0.5 * sample_directions(D.dim, n, rng)
                    Z = np.concatenate([near[np.asarray(D._contains(near), bool)], sample_interior(D, n, rng)])
                    bad = check_fixed_factor(D, rel, x, s, Z, cfg.slack)
                    rep.checked += 2 * len(Z)
                    rep.violations.extend({"shape": name, "relation": rel.value, "s": s, **b} for b in bad)

    return suite


def _metric_evaluator(kind, D):
    f = METRICS[kind]

    def ev(x, Z):
        return np.atleast_1d(f(D, np.broadcast_to(x, Z.shape), Z))

    return ev


# ---------------------------------------------------------------- maps and uniformity


def _mobius(rep, cfg, rng, n_pairs=100):
    for dim in (2, 3):
        B = Ball(np.zeros(dim), 1.0)
        for _ in range(cfg.n_maps):
            f = random_mobius_map(rng, B)
            X, Y = sample_pairs(B, n_pairs, rng)
            r = mobius_distortion_check(f, B, list(zip(X, Y)), slack=cfg.slack)
            rep.checked += 2 * r.checked
            rep.max_ratio = max(rep.max_ratio, r.max_ratio_zeta, r.max_ratio_zeta_prime)
            rep.violations.extend({"map": f.to_dict(), **v} for v in r.violations)
        # similarities leave zeta and zeta' unchanged
        q, _ = np.linalg.qr(rng.normal(size=(dim, dim)))
        sim = MobiusMap([Translation(rng.normal(size=dim)), OrthogonalLinear(q), Scaling(2.5)])
        X, Y = sample_pairs(B, n_pairs, rng)
        r = mobius_distortion_check(sim, B, list(zip(X, Y)))
        worst = max(r.max_ratio_zeta, r.max_ratio_zeta_prime)
        rep.record(f"ball{dim}: similarity ratio - 1", abs(worst - 1.0), 1e-12, 0.0)
        rep.details.setdefault("similarity_max_ratio", []).append(worst)


def _uniformity(rep, cfg, rng):
    D = unit_disk()
    X, Y = sample_pairs(D, cfg.n_solver_pairs * 3, rng)
    est = uniformity_ratio(D, cfg=cfg.solver, pairs=list(zip(X, Y)))
    rep.record("disk: max m_est/zeta <= 2 (1 + tol)", est.max_ratio, 2 * (1 + cfg.solver_tol), 0.0)
    rep.details["disk"] = est.to_dict()
    slit = standard_shapes(2)["slit_disk"]
    st = straddle_ratios(slit, cfg=cfg.solver)
    rep.checked += 1
    if not st.strictly_increasing:
        rep.fail("slit: straddle ratio strictly increasing", **st.to_dict())
    rep.details["slit_straddle"] = st.to_dict()


def _slit_zeta_k(rep, cfg, rng):
    D: SlitDisk = standard_shapes(2)["slit_disk"]
    X, Y = sample_pairs(D, cfg.n_solver_pairs * 3, rng)
    r = nonuniform_zeta_k_check(D, list(zip(X, Y)), cfg.solver, cfg.solver_tol)
    rep.checked += r.checked
    rep.max_ratio = max(rep.max_ratio, r.max_ratio)
    rep.violations.extend(r.violations)


def _sharpness(rep, cfg, rng):
    r = sharpness_limit_suite(cfg.solver)
    for e in r.entries:
        rep.record(e.name, e.deviation, e.tolerance, 0.0)
    rep.details["entries"] = [e.to_dict() for e in r.entries]


# ---------------------------------------------------------------- registry


@dataclass(frozen=True)
class Suite:
    id: str
    description: str
    run: Callable
    uses_solver: bool = False


SUITES: dict[str, Suite] = {
    s.id: s
    for s in [
        Suite("lemma2.1", "j' <= j <= 2 j' on random pairs", _lemma_j),
        Suite("lemma3.4", "delta is 1-Lipschitz, eta is d-Lipschitz and monotone in delta, eta <= d delta, delta <= d/2", _lemma_eta),
        Suite("thm3.2", "zeta and zeta' are metrics: symmetry, identity, positivity, triangle inequality on triples", _axioms),
        Suite("prop3.6", "zeta' <= zeta <= 2 zeta'", _prop_zeta_zetap),
        Suite("thm4.1", "zeta' <= zeta <= m_est", _thm_m_zeta, True),
        Suite("cor4.4", "zeta <= h <= 2 zeta in the unit ball (2-D and 3-D)", _ball_h),
        Suite("cor4.6", "|log(eta(x)/eta(y))| <= zeta", _log_eta),
        Suite("thm4.7", "j <= zeta <= 2j and j' <= zeta' <= 2j'", _thm_zeta_j),
        Suite("cor4.8", "j' <= zeta <= 4j' and j/2 <= zeta' <= 2j", _cor_cross),
        Suite("prop4.9", "zeta <= 2j'", _prop_zeta_2jp),
        Suite("prop4.11", "zeta <= 2 k_est", _prop_zeta_2k, True),
        Suite("lemma5.1", "m_est <= zeta/(1-s) when |x-y| < s eta(x)/d", _lemma_local_m, True),
        Suite("thm5.2", "partition length of zeta along the m-geodesic matches m_est within 1%", _inner_metric, True),
        Suite("prop5.4", "zeta(x, x+tv)/t -> d/eta(x) (relative error <= 1e-4 at t = 1e-6)", _density_limit),
        Suite("cor5.5", "two-sided logarithmic bounds for m_est at nearby points", _cor_two_sided, True),
        Suite("thm6.1", "B(x,r) in B_zeta(x,s) in B(x,R) with r=(1-e^-s)eta/d, R=(e^s-1)eta/d; R/r -> 1", _thm_zeta_balls),
        Suite("thm6.2", "the same Euclidean sandwich for m_est balls", _thm_m_balls, True),
        Suite("thm6.3", "B_zeta(x,r) in B_m(x,s) in B_zeta(x,s) in B_m(x,R) for s < log 2; R/r -> 1", _thm_chain, True),
        Suite("prop6.4", "B(x,r) in B_zeta'(x,s) in B(x,(e^{2s}-1)eta/d)", _fixed_factor([Relation.ZETAPRIME_EUCLIDEAN])),
        Suite("prop6.5", "j- and j'-balls of radius s/2 and s sandwich zeta-balls of radius s",
              _fixed_factor([Relation.ZETA_VS_J, Relation.ZETA_VS_JPRIME])),
        Suite("prop6.6", "j- and j'-balls of radius s/2 and 2s sandwich zeta'-balls of radius s",
              _fixed_factor([Relation.ZETAPRIME_VS_J, Relation.ZETAPRIME_VS_JPRIME])),
        Suite("thm7.1", "Moebius maps distort zeta and zeta' by at most 4; similarities by exactly 1", _mobius),
        Suite("thm8.1", "m_est/zeta <= 2 in the disk; slit straddling ratios grow as pairs approach the slit", _uniformity, True),
        Suite("prop8.2", "zeta <= k_est on random slit-disk pairs", _slit_zeta_k, True),
        Suite("sharpness", "ratio limits in the disk that witness optimal constants", _sharpness, True),
    ]
}


def run_suite(suite_id: str, cfg: VerifyConfig | None = None) -> SuiteReport:
    cfg = cfg or VerifyConfig()
    try:
        suite = SUITES[suite_id]
    except KeyError:
        raise ValueError(f"unknown suite {suite_id!r}; see --list") from None
    rep = SuiteReport(suite.id, suite.description, config=cfg.to_dict())
    suite.run(rep, cfg, _rng(cfg, suite.id))
    rep.violations = _jsonable(rep.violations)
    rep.details = _jsonable(rep.details)
    return rep


@dataclass
class VerifyReport:
    seed: int
    suites: list

    @property
    def total_violations(self) -> int:
        return sum(len(s.violations) for s in self.suites)

    @property
    def ok(self) -> bool:
        return self.total_violations == 0

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "ok": self.ok,
            "total_violations": self.total_violations,
            "summary": {s.theorem: {"checked": s.checked, "violations": len(s.violations)} for s in self.suites},
            "suites": [s.to_dict() for s in self.suites],
        }


def run_suites(ids=("all",), cfg: VerifyConfig | None = None) -> VerifyReport:
    cfg = cfg or VerifyConfig()
    ids = list(SUITES) if "all" in ids else list(ids)
    return VerifyReport(cfg.seed, [run_suite(i, cfg) for i in ids])
