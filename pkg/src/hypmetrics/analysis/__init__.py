"""Verifiers built on the metric library: ball inclusions, uniformity, sharpness, theorem suites."""

from .balls import (
    BallInclusionReport,
    Relation,
    check_ball_chain,
    check_ball_inclusion,
    check_fixed_factor,
    closed_form_evaluator,
    fixed_factor_ball_radii,
    solver_evaluator,
    zeta_ball_radii,
    zeta_m_ball_chain_radii,
)
from .sampling import DEFAULT_SEED, rng_from, sample_directions, sample_interior, sample_pairs, sample_sphere, standard_shapes
from .sharpness import SharpnessReport, radial_disk_metrics, sharpness_limit_suite
from .suites import SUITES, SuiteReport, VerifyConfig, VerifyReport, run_suite, run_suites
from .uniformity import (
    UniformityEstimate,
    nonuniform_zeta_k_check,
    straddle_pairs,
    straddle_ratios,
    uniformity_ratio,
)

__all__ = [
    "DEFAULT_SEED",
    "rng_from",
    "sample_directions",
    "BallInclusionReport",
    "Relation",
    "SUITES",
    "SharpnessReport",
    "SuiteReport",
    "UniformityEstimate",
    "VerifyConfig",
    "VerifyReport",
    "check_ball_chain",
    "check_ball_inclusion",
    "check_fixed_factor",
    "closed_form_evaluator",
    "fixed_factor_ball_radii",
    "nonuniform_zeta_k_check",
    "radial_disk_metrics",
    "run_suite",
    "run_suites",
    "sample_interior",
    "sample_pairs",
    "sample_sphere",
    "sharpness_limit_suite",
    "solver_evaluator",
    "standard_shapes",
    "straddle_pairs",
    "straddle_ratios",
    "uniformity_ratio",
    "zeta_ball_radii",
    "zeta_m_ball_chain_radii",
]
