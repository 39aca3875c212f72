"""Exception hierarchy shared by the library and the CLI."""


class HypMetricsError(Exception):
    """Base class for all library errors."""


class DimensionError(HypMetricsError, ValueError):
    """A point does not have the dimension of the domain it is used with."""


class OutsideDomainError(HypMetricsError, ValueError):
    """A point that must be interior lies on the boundary or outside."""


class UnsupportedDomainError(HypMetricsError, ValueError):
    """The operation is not defined for this domain shape."""


class PathError(HypMetricsError, ValueError):
    """A polyline is degenerate or leaves its domain."""


class SolverError(HypMetricsError, RuntimeError):
    """Numerical geodesic estimation failed."""


class QuadratureError(SolverError):
    """Adaptive quadrature did not converge (segment too close to the boundary)."""


class DisconnectedLatticeError(SolverError):
    """The two endpoints landed in different lattice components."""
