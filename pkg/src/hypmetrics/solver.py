"""Upper-bound estimates of the path metrics k and m (and h on balls).

Pipeline for one pair ``x, y``:

1. A graded lattice: spacing ``h`` in nested boxes around both endpoints,
   doubling outward up to a coarse spacing covering the whole (clipped)
   domain. Nodes keep a clearance of ``boundary_margin`` times their local
   spacing from the boundary.
2. Edges to neighbours within a fixed stencil radius, weighted by the
   adaptive line integral of the density, and a Dijkstra search from x to y.
3. The lattice path is thinned and then refined: red-black coordinate
   descent moves every interior vertex along directions normal to its local
   chord (safeguarded parabolic line steps), and segments longer than the target
   density length are bisected, until no segment exceeds the target.

Every reported value is the adaptive-quadrature length of an interior
polyline, hence an upper bound for the true metric.
"""

from __future__ import annotations

import dataclasses
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import dijkstra
from scipy.spatial import cKDTree

from .density import DensityField
from .errors import DisconnectedLatticeError, PathError
from .geometry import Domain, as_point
from .paths import PolylinePath, metric_length, path_density_length
from .quadrature import gauss_segment_integrals, simpson_segment_integrals

log = logging.getLogger(__name__)

MAX_VERTICES = 8192
DESCENT_RTOL = 1e-9


@dataclass(frozen=True)
class SolverConfig:
    """Knobs for :func:`shortest_path_estimate`.

    ``resolution`` is the finest lattice spacing (used next to the endpoints)
    or ``"auto"``. ``segment_target`` is the density length allowed per
    refined polyline segment at auto resolution; it scales with
    ``resolution / auto_resolution`` so a finer lattice also means a finer
    polyline.
    """

    resolution: float | str = "auto"
    connectivity: int = 2
    refine_iters: int = 60
    quad_tol: float = 1e-8
    boundary_margin: float = 1.0
    coarse_cells: int = 40
    refine_box: int = 8
    segment_target: float = 0.1

    def __post_init__(self):
        if self.resolution != "auto" and not (float(self.resolution) > 0):
            raise ValueError("resolution must be positive or 'auto'")
        if self.connectivity not in (1, 2):
            raise ValueError("connectivity must be 1 or 2")
        if self.refine_iters < 0:
            raise ValueError("refine_iters must be nonnegative")
        if self.boundary_margin < 1:
            raise ValueError("boundary_margin must be at least 1")
        if not (0 < self.quad_tol < 1):
            raise ValueError("quad_tol must lie in (0, 1)")

    def replace(self, **changes) -> "SolverConfig":
        return dataclasses.replace(self, **changes)


@dataclass
class GeodesicEstimate:
    """Result of a solve; unpacks as ``value, path``."""

    value: float
    path: PolylinePath
    resolution: float
    lattice_value: float
    n_nodes: int
    n_edges: int

    def __iter__(self):
        yield self.value
        yield self.path


def auto_resolution(domain: Domain, x, y) -> float:
    """``min(delta(x), delta(y), diam/64) / 8``."""
    dx = domain.boundary_distance(x)
    dy = domain.boundary_distance(y)
    return min(dx, dy, domain.diameter / 64.0) / 8.0


def _lattice_box(domain: Domain, x, y):
    box = domain.bounding_box()
    if box is not None:
        lo, hi = box
        return np.minimum(lo, np.minimum(x, y)), np.maximum(hi, np.maximum(x, y))
    pad = 4.0 * np.linalg.norm(x - y) + 4.0 * max(domain._delta(x), domain._delta(y))
    return np.minimum(x, y) - pad, np.maximum(x, y) + pad


def _grid(kmin, kmax, step):
    axes = [np.arange(a, b + 1, step, dtype=np.int64) for a, b in zip(kmin, kmax)]
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=-1)


def build_lattice(domain: Domain, x, y, h: float, cfg: SolverConfig):
    """Node coordinates and per-node spacing of the graded lattice."""
    lo, hi = _lattice_box(domain, x, y)
    extent = float(np.max(hi - lo))
    levels = max(0, math.ceil(math.log2(extent / (cfg.coarse_cells * h))))
    kmax_box = np.ceil((hi - lo) / h).astype(np.int64)
    keys, spacing = [], []
    for level in range(levels + 1):
        step = 1 << (levels - level)
        if level == 0:
            k = _grid(np.zeros_like(kmax_box), kmax_box + step, step)
        else:
            blocks = []
            for e in (x, y):
                c = (e - lo) / h
                half = cfg.refine_box * step
                kmin = (np.floor((c - half) / step) * step).astype(np.int64)
                kmax = (np.ceil((c + half) / step) * step).astype(np.int64)
                blocks.append(_grid(kmin, kmax, step))
            k = np.concatenate(blocks)
        z = lo + k * h
        s = step * h
        inside = domain._contains(z)
        z, k = z[inside], k[inside]
        keep = domain._delta(z) >= cfg.boundary_margin * s
        keys.append(k[keep])
        spacing.append(np.full(int(keep.sum()), s))
    keys = np.concatenate(keys[::-1])
    spacing = np.concatenate(spacing[::-1])
    # the same lattice point can appear at several levels: keep its finest spacing
    _, first = np.unique(keys, axis=0, return_index=True)
    keys, spacing = keys[first], spacing[first]
    return lo + keys * h, spacing


def _stencil_radius(dim: int, connectivity: int) -> float:
    return math.sqrt(dim if connectivity == 1 else dim + 3) * (1 + 1e-9)


def _lattice_edges(points, spacing, tree, radius):
    rows, cols = [], []
    for s in np.unique(spacing):
        ids = np.flatnonzero(spacing == s)
        nbrs = tree.query_ball_point(points[ids], r=radius * s)
        counts = np.fromiter((len(n) for n in nbrs), dtype=np.int64, count=len(nbrs))
        if counts.sum() == 0:
            continue
        i = np.repeat(ids, counts)
        j = np.concatenate([np.asarray(n, dtype=np.int64) for n in nbrs if len(n)])
        sj = spacing[j]
        keep = (sj < s) | ((sj == s) & (j > i))
        rows.append(i[keep])
        cols.append(j[keep])
    if not rows:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    return np.concatenate(rows), np.concatenate(cols)


def _snap_edges(domain, points, spacing, tree, e, node_id):
    dist, nearest = tree.query(e, k=1)
    if not np.isfinite(dist):
        return np.empty(0, np.int64), np.empty(0, np.int64)
    cand = np.asarray(tree.query_ball_point(e, r=2.0 * spacing[nearest] * (1 + 1e-9)), dtype=np.int64)
    cand = cand[np.asarray(domain.segment_inside(np.broadcast_to(e, points[cand].shape), points[cand]), bool)] if len(cand) else cand
    if len(cand) == 0:
        k = min(16, len(points))
        _, near = tree.query(e, k=k)
        near = np.atleast_1d(near)
        ok = np.asarray(domain.segment_inside(np.broadcast_to(e, points[near].shape), points[near]), bool)
        cand = near[ok]
    return np.full(len(cand), node_id, dtype=np.int64), cand


def _lattice_path(field: DensityField, x, y, h: float, cfg: SolverConfig):
    domain = field.domain
    points, spacing = build_lattice(domain, x, y, h, cfg)
    n = len(points)
    if n == 0:
        raise DisconnectedLatticeError("lattice is empty; increase resolution (smaller h)")
    tree = cKDTree(points)
    i, j = _lattice_edges(points, spacing, tree, _stencil_radius(domain.dim, cfg.connectivity))
    xi, xj = _snap_edges(domain, points, spacing, tree, x, n)
    yi, yj = _snap_edges(domain, points, spacing, tree, y, n + 1)
    allp = np.vstack([points, x, y])
    i = np.concatenate([i, xi, yi])
    j = np.concatenate([j, xj, yj])
    if domain.segment_inside(x, y):
        i = np.append(i, n)
        j = np.append(j, n + 1)
    ok = np.asarray(domain.segment_inside(allp[i], allp[j]), bool)
    i, j = i[ok], j[ok]
    w = simpson_segment_integrals(field.weights, allp[i], allp[j], rtol=cfg.quad_tol)
    # csgraph drops explicit zeros; keep zero-length snap edges alive
    w = np.maximum(w, 1e-300)
    graph = coo_matrix((w, (i, j)), shape=(n + 2, n + 2)).tocsr()
    dist, pred = dijkstra(graph, directed=False, indices=n, return_predecessors=True)
    if not np.isfinite(dist[n + 1]):
        raise DisconnectedLatticeError(
            "endpoints fall in different lattice components; increase resolution (smaller h)"
        )
    order = [n + 1]
    while order[-1] != n:
        order.append(pred[order[-1]])
    verts = allp[order[::-1]]
    keep = np.ones(len(verts), bool)
    keep[1:] = np.any(verts[1:] != verts[:-1], axis=-1)
    return verts[keep], float(dist[n + 1]), n, len(w)


def _thin(weights, domain, V, step: float):
    """Subsample a vertex chain to roughly ``step`` density length per chord."""
    if len(V) <= 2:
        return V
    seg = gauss_segment_integrals(weights, V[:-1], V[1:])
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    marks = np.floor(cum / step)
    chosen = [0] + [i for i in range(1, len(V) - 1) if marks[i] != marks[i - 1]] + [len(V) - 1]
    chosen = sorted(set(chosen))
    # restore intermediate vertices wherever a chord would leave the domain
    while True:
        idx = np.array(chosen)
        ok = np.asarray(domain.segment_inside(V[idx[:-1]], V[idx[1:]]), bool)
        if ok.all():
            return V[idx]
        extra = [(idx[k] + idx[k + 1]) // 2 for k in np.flatnonzero(~ok)]
        chosen = sorted(set(chosen) | set(extra))


def _normal_directions(chord):
    """Orthonormal directions normal to each chord, shape ``(m, n-1, n)``."""
    m, n = chord.shape
    if n == 2:
        u = np.stack([-chord[:, 1], chord[:, 0]], axis=-1)
        return (u / np.linalg.norm(u, axis=-1, keepdims=True))[:, None, :]
    mat = np.concatenate([chord[:, :, None], np.broadcast_to(np.eye(n), (m, n, n))], axis=-1)
    q, _ = np.linalg.qr(mat)
    return np.swapaxes(q[:, :, 1:], 1, 2)


def _sweep(weights, domain, V, step) -> int:
    """One red-black pass of normal-direction moves, in place.

    Each vertex probes ``+-step`` along every normal, jumps to the vertex of
    the interpolating parabola (clipped to twice the probe width and to half
    its local clearance) and keeps the best of the evaluated positions.
    ``step`` holds one probe width per vertex and adapts to the last move.
    """
    moved = 0
    for parity in (1, 2):
        idx = np.arange(parity, len(V) - 1, 2)
        if len(idx) == 0:
            continue
        prev, nxt = V[idx - 1], V[idx + 1]
        dirs = _normal_directions(nxt - prev)
        for d in range(dirs.shape[1]):
            u = dirs[:, d, :]
            cur = V[idx]
            reach = 0.5 * np.minimum(
                domain._delta(cur),
                np.minimum(np.linalg.norm(cur - prev, axis=-1), np.linalg.norm(nxt - cur, axis=-1)),
            )
            s = np.minimum(step[idx], reach)

            def cost(t):
                p = cur + t[:, None] * u
                both = gauss_segment_integrals(
                    weights, np.concatenate([prev, p]), np.concatenate([p, nxt])
                )
                return both[: len(p)] + both[len(p) :]

            f0, fm, fp = cost(np.zeros(len(idx))), cost(-s), cost(s)
            curv = fm - 2.0 * f0 + fp
            with np.errstate(divide="ignore", invalid="ignore"):
                tq = np.where(curv > 0, 0.5 * s * (fm - fp) / curv, np.where(fm < fp, -2 * s, 2 * s))
            tq = np.clip(np.nan_to_num(tq), -np.minimum(2 * s, reach), np.minimum(2 * s, reach))
            fq = cost(tq)
            cand = np.stack([np.zeros_like(s), -s, s, tq])
            vals = np.stack([f0, fm, fp, fq])
            best = np.argmin(vals, axis=0)
            t = cand[best, np.arange(len(idx))]
            gain = f0 - vals[best, np.arange(len(idx))]
            # shrink the probe when the minimiser sits well inside it
            step[idx] = np.clip(np.maximum(2.0 * np.abs(t), 0.25 * s), 1e-14, None)
            go = (gain > 0) & (t != 0)
            if go.any():
                b = np.flatnonzero(go)
                newp = cur[b] + t[b, None] * u[b]
                ok = np.asarray(domain.segment_inside(prev[b], newp), bool) & np.asarray(
                    domain.segment_inside(newp, nxt[b]), bool
                )
                b = b[ok]
                V[idx[b]] = cur[b] + t[b, None] * u[b]
                moved += len(b)
    return moved


def _descend(weights, domain, V, max_sweeps: int):
    V = V.copy()
    if len(V) <= 2:
        return V
    seg = np.linalg.norm(V[1:] - V[:-1], axis=-1)
    step = np.full(len(V), 0.25) * np.minimum(np.concatenate([[seg[0]], seg]), np.concatenate([seg, [seg[-1]]]))
    total = float(np.sum(gauss_segment_integrals(weights, V[:-1], V[1:])))
    for _ in range(max_sweeps):
        if _sweep(weights, domain, V, step) == 0:
            break
        new = float(np.sum(gauss_segment_integrals(weights, V[:-1], V[1:])))
        if total - new <= DESCENT_RTOL * new:
            total = new
            break
        total = new
    return V


def _refine(field: DensityField, V, cfg: SolverConfig, target: float):
    weights, domain = field.weights, field.domain
    V = _thin(weights, domain, V, step=max(4 * target, 0.5))
    while True:
        V = _descend(weights, domain, V, cfg.refine_iters)
        seg = gauss_segment_integrals(weights, V[:-1], V[1:])
        long = seg > target
        if not long.any() or len(V) >= MAX_VERTICES:
            return V
        mids = 0.5 * (V[:-1][long] + V[1:][long])
        at = np.flatnonzero(long) + 1
        V = np.insert(V, at, mids, axis=0)


def shortest_path_estimate(field: DensityField, x, y, cfg: SolverConfig | None = None) -> GeodesicEstimate:
    """Upper-bound estimate of the path metric of ``field`` between ``x`` and ``y``."""
    cfg = cfg or SolverConfig()
    domain = field.domain
    x = as_point(x, domain.dim)
    y = as_point(y, domain.dim)
    domain._require_inside(np.stack([x, y]))
    h_auto = auto_resolution(domain, x, y)
    h = h_auto if cfg.resolution == "auto" else float(cfg.resolution)
    if np.array_equal(x, y):
        return GeodesicEstimate(0.0, PolylinePath.trivial(x), h, 0.0, 0, 0)
    lattice_verts, lattice_value, n_nodes, n_edges = _lattice_path(field, x, y, h, cfg)
    target = min(1.0, cfg.segment_target * h / h_auto)
    verts = _refine(field, lattice_verts, cfg, target) if cfg.refine_iters > 0 else lattice_verts
    path = PolylinePath(verts)
    try:
        value = path_density_length(field, path, cfg.quad_tol)
    except PathError:  # pragma: no cover - refinement only accepts interior moves
        log.warning("refined path rejected; falling back to the lattice path")
        path, value = PolylinePath(lattice_verts), lattice_value
    if lattice_value < value:
        path, value = PolylinePath(lattice_verts), lattice_value
    return GeodesicEstimate(value, path, h, lattice_value, n_nodes, n_edges)


def inner_metric_estimate(metric, field: DensityField, x, y, cfg: SolverConfig | None = None, depth: int = 12) -> float:
    """Partition length of ``metric`` along the candidate geodesic of ``field``.

    Upper bound for the inner metric of ``metric`` between ``x`` and ``y``.
    """
    est = shortest_path_estimate(field, x, y, cfg)
    return metric_length(metric, est.path, depth)
