"""Boundary tracing of metric balls along rays from the center."""

from __future__ import annotations

import numpy as np

from .geometry import Domain


def ray_exit(domain: Domain, x: np.ndarray, U: np.ndarray, t_max: float, eps: float = 1e-13) -> np.ndarray:
    """Distance along each unit direction in ``U`` from ``x`` to the boundary (sphere tracing).

    Rays that never leave within ``t_max`` return ``t_max``.
    """
    t = np.zeros(len(U))
    active = np.ones(len(U), bool)
    for _ in range(100000):
        if not active.any():
            break
        P = x + t[active, None] * U[active]
        d = domain._delta(P)
        inside = np.asarray(domain._contains(P), bool)
        stop = ~inside | (d <= eps * (1.0 + t[active]))
        ids = np.flatnonzero(active)
        t[ids[~stop]] += d[~stop]
        active[ids[stop]] = False
        over = active & (t >= t_max)
        t[over] = t_max
        active &= ~over
    return np.minimum(t, t_max)


def trace_ball(
    domain: Domain,
    metric,
    x,
    s: float,
    n_rays: int = 360,
    value_tol: float = 1e-10,
    t_max: float = 1e6,
    min_clearance: float = 1e-12,
) -> tuple[np.ndarray, np.ndarray]:
    """Points ``x + t u`` on ``n_rays`` rays where ``metric(x, .) = s``.

    ``metric(x, Z)`` evaluates a batch. An outer bracket is searched at
    ``t = T (1 - 2^-k)``, ``T`` the exit distance of the ray, stopping once
    the gap ``2^-k`` drops below ``min_clearance``; rays still below ``s``
    there are clamped and flagged in the second return value. Bisection then
    stops when the metric value is within ``value_tol`` of ``s`` (or the
    bracket collapses).
    """
    x = np.asarray(x, dtype=float)
    ang = 2 * np.pi * np.arange(n_rays) / n_rays
    U = np.stack([np.cos(ang), np.sin(ang)], axis=-1)
    exit_t = ray_exit(domain, x, U, t_max)
    lo = np.zeros(n_rays)
    hi = exit_t.copy()
    open_ = np.ones(n_rays, bool)
    gap = 0.5
    while open_.any() and gap >= min_clearance:
        idx = np.flatnonzero(open_)
        t = exit_t[idx] * (1 - gap)
        f = metric(x, x + t[:, None] * U[idx])
        above = f >= s
        hi[idx[above]] = t[above]
        lo[idx[~above]] = t[~above]
        open_[idx[above]] = False
        gap *= 0.5
    clamped = open_
    t = np.where(clamped, lo, 0.5 * (lo + hi))
    todo = ~clamped
    for _ in range(200):
        if not todo.any():
            break
        idx = np.flatnonzero(todo)
        mid = 0.5 * (lo[idx] + hi[idx])
        f = metric(x, x + mid[:, None] * U[idx])
        t[idx] = mid
        below = f < s
        lo[idx] = np.where(below, mid, lo[idx])
        hi[idx] = np.where(below, hi[idx], mid)
        done = (np.abs(f - s) <= value_tol) | (hi[idx] - lo[idx] <= 1e-15 * np.maximum(1.0, hi[idx]))
        todo[idx[done]] = False
    return x + t[:, None] * U, clamped
