"""Closed-form point-pair metrics: j, j', zeta, zeta' and the hyperbolic metric.

All functions broadcast over leading axes of ``x`` and ``y``. Every ``log(1+u)``
goes through ``log1p`` so that pairs at distance ~1e-9 keep full precision.
"""

from __future__ import annotations

import enum

import numpy as np

from .errors import UnsupportedDomainError
from .geometry import Ball, Domain, HalfSpace, as_point

__all__ = [
    "MetricKind",
    "lipschitz_log_metric",
    "lipschitz_log_metric_sym",
    "j_metric",
    "j_prime_metric",
    "zeta",
    "zeta_prime",
    "hyperbolic_closed_form",
    "closed_form",
    "CLOSED_FORM",
    "log_eta_ratio",
]


class MetricKind(str, enum.Enum):
    J = "j"
    JPrime = "j_prime"
    Zeta = "zeta"
    ZetaPrime = "zeta_prime"
    K = "k"
    M = "m"
    H = "h"

    @property
    def is_closed_form(self) -> bool:
        return self not in (MetricKind.K, MetricKind.M)

    @classmethod
    def parse(cls, name: str) -> "MetricKind":
        aliases = {"jp": "j_prime", "j'": "j_prime", "zetap": "zeta_prime", "zeta'": "zeta_prime"}
        key = aliases.get(name.strip().lower(), name.strip().lower())
        return cls(key)


def _out(v):
    v = np.asarray(v)
    return v.item() if v.ndim == 0 else v


def _dist(x, y):
    return np.sqrt(np.sum((x - y) ** 2, axis=-1))


def _positive(fx, fy):
    if np.any(np.asarray(fx) <= 0) or np.any(np.asarray(fy) <= 0):
        raise ValueError("the weight function must be positive at both points")


def lipschitz_log_metric(f, alpha: float, x, y):
    """``log(1 + alpha |x-y| / min(f(x), f(y)))`` for a positive alpha-Lipschitz ``f``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    fx, fy = np.asarray(f(x)), np.asarray(f(y))
    _positive(fx, fy)
    return _out(np.log1p(alpha * _dist(x, y) / np.minimum(fx, fy)))


def lipschitz_log_metric_sym(f, alpha: float, x, y):
    """Symmetric-product form ``(log(1+a|x-y|/f(x)) + log(1+a|x-y|/f(y))) / 2``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    fx, fy = np.asarray(f(x)), np.asarray(f(y))
    _positive(fx, fy)
    t = alpha * _dist(x, y)
    return _out(0.5 * (np.log1p(t / fx) + np.log1p(t / fy)))


def _checked(domain: Domain, x, y):
    x = as_point(x, domain.dim)
    y = as_point(y, domain.dim)
    domain._require_inside(x)
    domain._require_inside(y)
    return x, y


def j_metric(domain: Domain, x, y):
    """Distance ratio metric ``log(1 + |x-y| / min(delta(x), delta(y)))``."""
    x, y = _checked(domain, x, y)
    return lipschitz_log_metric(domain._delta, 1.0, x, y)


def j_prime_metric(domain: Domain, x, y):
    x, y = _checked(domain, x, y)
    return lipschitz_log_metric_sym(domain._delta, 1.0, x, y)


def _eta_fn(domain: Domain):
    d = domain.diameter

    def eta(p):
        delta = domain._delta(p)
        return delta * (d - delta)

    return eta


def zeta(domain: Domain, x, y):
    """Diameter-modified distance ratio metric.

    Uses eta and the domain diameter in place of delta; on unbounded domains
    it is identically the j metric.
    """
    if not domain.bounded:
        return j_metric(domain, x, y)
    x, y = _checked(domain, x, y)
    return lipschitz_log_metric(_eta_fn(domain), domain.diameter, x, y)


def zeta_prime(domain: Domain, x, y):
    """Symmetric-product variant of :func:`zeta`; equals j' on unbounded domains."""
    if not domain.bounded:
        return j_prime_metric(domain, x, y)
    x, y = _checked(domain, x, y)
    return lipschitz_log_metric_sym(_eta_fn(domain), domain.diameter, x, y)


def hyperbolic_closed_form(domain: Domain, x, y):
    """Hyperbolic distance in a ball or half-space via arcsinh.

    Ball(c, r): ``2 asinh(r|x-y| / sqrt((r^2-|x-c|^2)(r^2-|y-c|^2)))``.
    Half-space: ``acosh(1 + |x-y|^2 / (2 x_n y_n))``, evaluated as
    ``2 asinh(|x-y| / (2 sqrt(x_n y_n)))`` to keep precision for close pairs.
    """
    if isinstance(domain, Ball):
        x, y = _checked(domain, x, y)
        r = domain.radius
        dx = domain._delta(x)
        dy = domain._delta(y)
        # r^2 - |z-c|^2 = delta (2r - delta) without cancellation
        qx = dx * (2 * r - dx)
        qy = dy * (2 * r - dy)
        return _out(2.0 * np.arcsinh(r * _dist(x, y) / np.sqrt(qx * qy)))
    if isinstance(domain, HalfSpace):
        x, y = _checked(domain, x, y)
        hx = domain._delta(x)
        hy = domain._delta(y)
        return _out(2.0 * np.arcsinh(_dist(x, y) / (2.0 * np.sqrt(hx * hy))))
    raise UnsupportedDomainError(
        f"closed-form hyperbolic metric needs a Ball or HalfSpace, got {type(domain).__name__}"
    )


CLOSED_FORM = {
    MetricKind.J: j_metric,
    MetricKind.JPrime: j_prime_metric,
    MetricKind.Zeta: zeta,
    MetricKind.ZetaPrime: zeta_prime,
    MetricKind.H: hyperbolic_closed_form,
}


def closed_form(kind: MetricKind | str):
    """Return the closed-form evaluator ``f(domain, x, y)`` for ``kind``."""
    kind = MetricKind.parse(kind) if isinstance(kind, str) else kind
    try:
        return CLOSED_FORM[kind]
    except KeyError:
        raise UnsupportedDomainError(
            f"{kind.value} has no closed form; use the path-metric solver"
        ) from None


def log_eta_ratio(domain: Domain, x, y):
    """``|log(eta(x)/eta(y))|``, the lower bound every path metric here dominates."""
    x, y = _checked(domain, x, y)
    e = _eta_fn(domain)
    return _out(np.abs(np.log(e(x)) - np.log(e(y))))

