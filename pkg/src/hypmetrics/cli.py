"""Command-line front end: ``hypmetrics eval|geodesic|balls|verify|uniformity``.

Exit codes: 0 success, 1 verification violations, 2 malformed input,
3 point outside the domain, 4 solver failure. Errors are reported as one
JSON object on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from . import __version__
from .analysis import (
    SUITES,
    VerifyConfig,
    closed_form_evaluator,
    fixed_factor_ball_radii,
    run_suites,
    solver_evaluator,
    straddle_ratios,
    uniformity_ratio,
    zeta_ball_radii,
)
from .density import DensityField, DensityKind
from .errors import DimensionError, OutsideDomainError, PathError, SolverError, UnsupportedDomainError
from .geometry import SlitDisk, as_point, domain_from_dict
from .metrics import MetricKind, closed_form
from .solver import SolverConfig, shortest_path_estimate
from .svg import SvgCanvas, view_box
from .tracing import trace_ball

EXIT_OK, EXIT_VIOLATIONS, EXIT_INPUT, EXIT_OUTSIDE, EXIT_SOLVER = 0, 1, 2, 3, 4


class InputError(ValueError):
    pass


def _g(v) -> str:
    return f"{float(v):.12g}"


# ---------------------------------------------------------------- parsing helpers


def load_domain(arg: str):
    text = arg if arg.lstrip().startswith("{") else _read(arg)
    try:
        desc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"domain is not valid JSON: {exc}") from None
    if not isinstance(desc, dict):
        raise InputError("domain JSON must be an object")
    try:
        return domain_from_dict(desc)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad domain descriptor: {exc}") from None


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def parse_point(text: str, dim: int | None = None) -> np.ndarray:
    try:
        p = np.array([float(c) for c in text.replace(" ", "").split(",")])
    except ValueError:
        raise InputError(f"cannot parse point {text!r}") from None
    return as_point(p, dim)


def parse_pairs_csv(text: str, dim: int) -> list[tuple[np.ndarray, np.ndarray]]:
    rows = [r for r in csv.reader(io.StringIO(text)) if r and not r[0].lstrip().startswith("#")]
    if not rows:
        raise InputError("pairs file is empty")
    header = [h.strip() for h in rows[0]]
    expect = [f"x{i}" for i in range(dim)] + [f"y{i}" for i in range(dim)]
    if header != expect:
        raise InputError(f"pairs header must be {','.join(expect)}, got {','.join(header)}")
    out = []
    for r in rows[1:]:
        try:
            v = [float(c) for c in r]
        except ValueError:
            raise InputError(f"non-numeric row in pairs file: {r}") from None
        if len(v) != 2 * dim:
            raise InputError(f"row has {len(v)} values, expected {2 * dim}")
        out.append((as_point(v[:dim], dim), as_point(v[dim:], dim)))
    return out


def parse_pair(text: str, dim: int):
    parts = text.split(";")
    if len(parts) != 2:
        raise InputError(f"a pair looks like 'x0,x1;y0,y1', got {text!r}")
    return parse_point(parts[0], dim), parse_point(parts[1], dim)


def solver_config(args) -> SolverConfig:
    kw = {}
    if getattr(args, "resolution", None) is not None:
        kw["resolution"] = "auto" if args.resolution == "auto" else float(args.resolution)
    for name in ("connectivity", "refine_iters", "quad_tol", "boundary_margin"):
        v = getattr(args, name, None)
        if v is not None:
            kw[name] = v
    return SolverConfig(**kw)


def _add_solver_flags(p):
    g = p.add_argument_group("solver")
    g.add_argument("--resolution", help="finest lattice spacing h, or 'auto'")
    g.add_argument("--connectivity", type=int, choices=(1, 2))
    g.add_argument("--refine-iters", dest="refine_iters", type=int)
    g.add_argument("--quad-tol", dest="quad_tol", type=float)
    g.add_argument("--boundary-margin", dest="boundary_margin", type=float)


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- subcommands


def cmd_eval(args) -> int:
    dom = load_domain(args.domain)
    pairs = []
    if args.pairs:
        pairs += parse_pairs_csv(_read(args.pairs), dom.dim)
    for p in args.pair or []:
        pairs.append(parse_pair(p, dom.dim))
    if not pairs:
        raise InputError("no pairs given; use --pairs FILE or --pair 'x0,x1;y0,y1'")
    kinds = [MetricKind.parse(m) for m in args.metric.split(",")]
    cfg = solver_config(args)
    for x, y in pairs:
        dom._require_inside(np.stack([x, y]))
    header = [f"x{i}" for i in range(dom.dim)] + [f"y{i}" for i in range(dom.dim)]
    for k in kinds:
        header += [f"{k.value}_estimate", f"{k.value}_resolution"] if not k.is_closed_form else [k.value]
    rows = []
    for x, y in pairs:
        row = [_g(c) for c in (*x, *y)]
        for k in kinds:
            if k.is_closed_form:
                row.append(_g(closed_form(k)(dom, x, y)))
            else:
                est = shortest_path_estimate(DensityField(DensityKind(k.value), dom), x, y, cfg)
                row += [_g(est.value), _g(est.resolution)]
        rows.append(row)
    if args.format == "json":
        text = json.dumps([dict(zip(header, map(float, r))) for r in rows], indent=2) + "\n"
    else:
        text = "\n".join(",".join(r) for r in [header, *rows]) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_geodesic(args) -> int:
    dom = load_domain(args.domain)
    x, y = parse_point(args.from_, dom.dim), parse_point(args.to, dom.dim)
    field = DensityField(DensityKind(args.density), dom)
    est = shortest_path_estimate(field, x, y, solver_config(args))
    _emit(est.path.to_csv(est.value), args.out)
    if args.svg:
        if dom.dim != 2:
            raise InputError("SVG output needs a 2-D domain")
        lo, hi = view_box(dom, x, y)
        cv = SvgCanvas(lo, hi)
        cv.domain(dom)
        cv.polyline(est.path.vertices, stroke="#c0392b", width=2, cls="geodesic")
        cv.dot(x, 3)
        cv.dot(y, 3)
        cv.text(lo + 0.02 * (hi - lo), f"{args.density}-length {_g(est.value)}")
        _write(args.svg, cv.render())
    return EXIT_OK


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_balls(args) -> int:
    dom = load_domain(args.domain)
    if dom.dim != 2:
        raise InputError("balls renders 2-D domains only")
    x = parse_point(args.center, 2)
    dom._require_inside(x)
    s = float(args.s)
    if not s > 0:
        raise InputError("--s must be positive")
    kind = MetricKind.parse(args.metric)
    if kind.is_closed_form:
        ev = closed_form_evaluator(kind, dom)
        rays, tol, clear = args.rays or 360, 1e-10, 1e-12
    else:
        cfg = solver_config(args)
        ev = solver_evaluator(DensityField(DensityKind(kind.value), dom), cfg)
        rays, tol, clear = args.rays or 48, 1e-3 * s, 1e-6
        print(
            f"warning: {kind.value}-ball traced with solver estimates (upper bounds, "
            f"resolution {cfg.resolution}); boundary accurate to about {_g(tol)} in metric value",
            file=sys.stderr,
        )
    lo, hi = view_box(dom, x)
    pts, clamped = trace_ball(dom, ev, x, s, rays, tol, t_max=float(np.max(hi - lo)) * 4, min_clearance=clear)
    cv = SvgCanvas(lo, hi)
    cv.domain(dom)
    if args.point_cloud:
        rng = np.random.default_rng(_seed(args))
        Z = rng.uniform(lo, hi, size=(args.point_cloud, 2))
        Z = Z[np.asarray(dom._contains(Z), bool)]
        if len(Z):
            inside = ev(x, Z) < s
            for z in Z[inside]:
                cv.dot(z, 1.0, "#2980b9")
    cv.polyline(pts, stroke="#2980b9", width=2, closed=True, cls="metric-ball")
    radii = _sandwich(kind, dom, x, s)
    if radii:
        cv.circle(x, radii[0], stroke="#27ae60", dash="4,3", label="inner")
        cv.circle(x, radii[1], stroke="#8e44ad", dash="4,3", label="outer")
    cv.dot(x, 3)
    cv.text(lo + 0.02 * (hi - lo), f"{kind.value}-ball, s={_g(s)}, clamped rays {int(clamped.sum())}")
    _write(args.svg, cv.render())
    info = {"metric": kind.value, "s": s, "rays": rays, "clamped_rays": int(clamped.sum())}
    if radii:
        info.update(inner_radius=radii[0], outer_radius=radii[1])
    sys.stdout.write(json.dumps(info) + "\n")
    return EXIT_OK


def _sandwich(kind, dom, x, s):
    if not dom.bounded:
        return None
    eta_x, d = float(dom.eta(x)), dom.diameter
    if kind in (MetricKind.Zeta, MetricKind.M):
        return zeta_ball_radii(s, eta_x, d)
    if kind is MetricKind.ZetaPrime:
        return fixed_factor_ball_radii("zetaprime_euclidean", s, eta_x, d)
    return None


def _seed(args) -> int:
    env = os.environ.get("HYPMETRICS_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"HYPMETRICS_SEED must be an integer, got {env!r}") from None
    return args.seed


def cmd_verify(args) -> int:
    if args.list:
        width = max(len(k) for k in SUITES)
        for sid, suite in SUITES.items():
            tag = " [solver]" if suite.uses_solver else ""
            sys.stdout.write(f"{sid:<{width}}  {suite.description}{tag}\n")
        return EXIT_OK
    ids = [i for s in args.suite for i in s.split(",")]
    for i in ids:
        if i != "all" and i not in SUITES:
            raise InputError(f"unknown suite {i!r}; see 'hypmetrics verify --list'")
    cfg = VerifyConfig(seed=_seed(args))
    if args.pairs:
        cfg.n_pairs = cfg.n_triples = args.pairs
    report = run_suites(ids, cfg)
    text = json.dumps(report.to_dict(), indent=2, sort_keys=False) + "\n"
    if args.report:
        _write(args.report, text)
        summary = {"ok": report.ok, "total_violations": report.total_violations, **report.to_dict()["summary"]}
        sys.stdout.write(json.dumps(summary, indent=2) + "\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.ok else EXIT_VIOLATIONS


def cmd_uniformity(args) -> int:
    dom = load_domain(args.domain)
    cfg = solver_config(args)
    est = uniformity_ratio(dom, args.pairs, cfg, args.which, rng=_seed(args))
    out = {"domain": dom.to_dict(), "which": args.which, **est.to_dict()}
    if isinstance(dom, SlitDisk) and args.straddle:
        out["straddle"] = straddle_ratios(dom, cfg=cfg).to_dict()
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypmetrics", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"hypmetrics {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate metrics on point pairs")
    e.add_argument("--domain", required=True, help="domain JSON file or inline JSON")
    e.add_argument("--pairs", help="CSV with header x0,x1[,x2],y0,y1[,y2]")
    e.add_argument("--pair", action="append", help="inline pair 'x0,x1;y0,y1' (repeatable)")
    e.add_argument("--metric", default="j,zeta", help="comma list of j,j_prime,zeta,zeta_prime,h,k,m")
    e.add_argument("--format", choices=("csv", "json"), default="csv")
    e.add_argument("--out")
    _add_solver_flags(e)
    e.set_defaults(func=cmd_eval)

    g = sub.add_parser("geodesic", help="estimate a k-, m- or h-geodesic")
    g.add_argument("--domain", required=True)
    g.add_argument("--from", dest="from_", required=True)
    g.add_argument("--to", required=True)
    g.add_argument("--density", choices=("k", "m", "h"), default="m")
    g.add_argument("--out", help="CSV path (default stdout)")
    g.add_argument("--svg")
    _add_solver_flags(g)
    g.set_defaults(func=cmd_geodesic)

    b = sub.add_parser("balls", help="render a metric ball and its Euclidean sandwich")
    b.add_argument("--domain", required=True)
    b.add_argument("--center", required=True)
    b.add_argument("--s", required=True, type=float)
    b.add_argument("--metric", default="zeta")
    b.add_argument("--svg", required=True)
    b.add_argument("--rays", type=int)
    b.add_argument("--point-cloud", dest="point_cloud", type=int, default=0,
                   help="also draw N rejection-sampled ball points (non-star-shaped balls)")
    b.add_argument("--seed", type=int, default=42)
    _add_solver_flags(b)
    b.set_defaults(func=cmd_balls)

    v = sub.add_parser("verify", help="run theorem verification suites")
    v.add_argument("--suite", action="append", default=None, help="suite id, comma list or 'all'")
    v.add_argument("--list", action="store_true", help="list suites and exit")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--pairs", type=int, help="random pairs per shape for closed-form suites")
    v.add_argument("--report", help="write the full JSON report here")
    v.set_defaults(func=cmd_verify)

    u = sub.add_parser("uniformity", help="estimate max m/zeta over random pairs")
    u.add_argument("--domain", required=True)
    u.add_argument("--pairs", type=int, default=200)
    u.add_argument("--which", choices=("zeta", "zeta_prime"), default="zeta")
    u.add_argument("--seed", type=int, default=42)
    u.add_argument("--straddle", action="store_true", help="slit disk: also report straddling-pair ratios")
    _add_solver_flags(u)
    u.set_defaults(func=cmd_uniformity)
    return p


def _fail(code: int, exc: BaseException) -> int:
    err = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    sys.stderr.write(json.dumps(err) + "\n")
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "command", None) == "verify" and args.suite is None:
        args.suite = ["all"]
    try:
        return args.func(args)
    except OutsideDomainError as exc:
        return _fail(EXIT_OUTSIDE, exc)
    except (SolverError, PathError) as exc:
        return _fail(EXIT_SOLVER, exc)
    except (InputError, DimensionError, UnsupportedDomainError, ValueError) as exc:
        return _fail(EXIT_INPUT, exc)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
