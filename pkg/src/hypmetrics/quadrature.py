"""Line integrals of a density along batches of straight segments."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import PathError, QuadratureError

MAX_DEPTH = 48


@lru_cache(maxsize=8)
def _gauss(order: int):
    t, w = np.polynomial.legendre.leggauss(order)
    return 0.5 * (t + 1.0), 0.5 * w


def gauss_segment_integrals(weights, a, b, order: int = 12) -> np.ndarray:
    """Fixed-order Gauss-Legendre integral of ``weights`` along each ``[a_i, b_i]``.

    Returns ``inf`` for segments where a node falls off the domain.
    """
    t, w = _gauss(order)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    pts = a[..., None, :] + t[:, None] * (b - a)[..., None, :]
    vals = weights(pts)
    length = np.sqrt(np.sum((b - a) ** 2, axis=-1))
    out = length * (vals @ w)
    bad = ~np.all(np.isfinite(vals) & (vals > 0), axis=-1)
    return np.where(bad, np.inf, out)


def simpson_segment_integrals(weights, a, b, rtol: float = 1e-8, max_depth: int = MAX_DEPTH):
    """Adaptive Simpson integral of ``weights`` along each segment ``[a_i, b_i]``.

    Subintervals are bisected until two-panel and one-panel Simpson estimates
    agree to ``rtol`` relative (the integrand is positive, so local relative
    accuracy gives global relative accuracy). All segments are processed as
    one vectorised work queue.
    """
    a = np.atleast_2d(np.asarray(a, dtype=float))
    b = np.atleast_2d(np.asarray(b, dtype=float))
    nseg = len(a)
    direction = b - a
    length = np.sqrt(np.sum(direction**2, axis=-1))
    total = np.zeros(nseg)
    if nseg == 0:
        return total

    def f(seg, t):
        vals = weights(a[seg] + t[:, None] * direction[seg])
        if not np.all(np.isfinite(vals) & (vals > 0)):
            raise PathError("segment leaves the domain (density undefined)")
        return vals

    seg = np.arange(nseg)
    lo = np.zeros(nseg)
    hi = np.ones(nseg)
    flo = f(seg, lo)
    fhi = f(seg, hi)
    fmid = f(seg, np.full(nseg, 0.5))
    whole = (hi - lo) / 6.0 * (flo + 4 * fmid + fhi)
    depth = 0
    while len(seg):
        if depth > max_depth:
            raise QuadratureError(
                "adaptive quadrature did not converge; a segment passes too close to the boundary"
            )
        mid = 0.5 * (lo + hi)
        fl = f(seg, 0.5 * (lo + mid))
        fr = f(seg, 0.5 * (mid + hi))
        left = (mid - lo) / 6.0 * (flo + 4 * fl + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4 * fr + fhi)
        both = left + right
        err = both - whole
        done = np.abs(err) <= 15.0 * rtol * np.abs(both)
        np.add.at(total, seg[done], both[done] + err[done] / 15.0)
        keep = ~done
        seg, lo, hi, mid = seg[keep], lo[keep], hi[keep], mid[keep]
        flo, fmid, fhi, fl, fr = flo[keep], fmid[keep], fhi[keep], fl[keep], fr[keep]
        left, right = left[keep], right[keep]
        # children: [lo, mid] and [mid, hi]
        seg = np.concatenate([seg, seg])
        lo, hi = np.concatenate([lo, mid]), np.concatenate([mid, hi])
        flo, fhi = np.concatenate([flo, fmid]), np.concatenate([fmid, fhi])
        fmid = np.concatenate([fl, fr])
        whole = np.concatenate([left, right])
        depth += 1
    return total * length
