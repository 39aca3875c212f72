"""Hyperbolic-type metrics on proper subdomains of Euclidean space.

Closed-form metrics (j, j', zeta, zeta', hyperbolic), numerical path metrics
(quasihyperbolic k and m) via lattice shortest paths with local refinement,
Moebius maps, and verification suites for the comparison inequalities.
"""

from .density import DensityField, DensityKind, density_at, h_density, k_density, m_density
from .errors import (
    DimensionError,
    DisconnectedLatticeError,
    HypMetricsError,
    OutsideDomainError,
    PathError,
    QuadratureError,
    SolverError,
    UnsupportedDomainError,
)
from .geometry import (
    Annulus,
    Ball,
    Domain,
    HalfSpace,
    Polygon,
    PuncturedBall,
    PuncturedSpace,
    SlitDisk,
    boundary_distance,
    contains,
    diameter,
    domain_from_dict,
    eta,
    unit_disk,
    upper_half_plane,
)
from .metrics import (
    MetricKind,
    closed_form,
    hyperbolic_closed_form,
    j_metric,
    j_prime_metric,
    lipschitz_log_metric,
    lipschitz_log_metric_sym,
    zeta,
    zeta_prime,
)
from .paths import PolylinePath, metric_length, path_density_length
from .solver import GeodesicEstimate, SolverConfig, inner_metric_estimate, shortest_path_estimate
from .transforms import (
    INF,
    MobiusMap,
    OrthogonalLinear,
    Scaling,
    SphereInversion,
    Translation,
    cross_ratio,
    image_domain,
    mobius_apply,
    mobius_distortion_check,
)

__version__ = "0.1.0"
