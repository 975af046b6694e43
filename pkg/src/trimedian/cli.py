"""Command line: ``trimedian {median,map,verify,degenerate,figure}``.

Exit codes: 0 success, 2 invalid input, 3 solver failure, 4 containment
violation (``verify``).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bounds import in_hyperbolic_triangle, in_quarter_triangle, verify_bounds
from .degenerate import limit_convergence_probe, m1_limit_barycentric, m2_limit_barycentric
from .figures import figure_1, figure_8, map_svg
from .geometry import (
    GeometryError,
    TriangleClass,
    classify,
    from_barycentric,
    to_barycentric,
    triangle_from_sides,
    validate_sides,
)
from .output import MAP_COLUMNS, RunManifest, csv_text, fmt, json_text, map_rows, write_atomic
from .solvers import ConvergenceError, MedianKind, SolverConfig, median_point
from .space import median_map, sample_nabla

EXIT_INVALID = 2
EXIT_SOLVER = 3
EXIT_VIOLATION = 4


def _config(args) -> SolverConfig:
    tol = getattr(args, "tol", None)
    return SolverConfig(grad_tol=tol) if tol else SolverConfig()


def _emit(path, text):
    if path:
        write_atomic(path, text)
    else:
        sys.stdout.write(text)


def _manifest(args, command) -> RunManifest:
    # output paths do not affect content, so they stay out of the manifest
    params = {k: v for k, v in sorted(vars(args).items())
              if k not in ("func", "command") and not k.startswith("out_")}
    return RunManifest(command, params, __version__, getattr(args, "seed", 0) or 0)


def cmd_median(args) -> int:
    try:
        sides = validate_sides(args.sides)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    kinds = list(MedianKind) if args.kind == "all" else [MedianKind(args.kind)]
    cfg = _config(args)
    tclass = classify(sides)
    t = triangle_from_sides(sides)
    results = {}
    code = 0
    for kind in kinds:
        entry = {}
        if tclass is not TriangleClass.ORDINARY:
            if kind is MedianKind.M0:
                entry["error"] = "vertex median has no barycentric limit on degenerate triangles"
                code = EXIT_INVALID
                results[kind.value] = entry
                continue
            limit = m1_limit_barycentric if kind is MedianKind.M1 else m2_limit_barycentric
            try:
                bary = limit(sides)
            except GeometryError as exc:
                entry["error"] = str(exc)
                code = EXIT_INVALID
                results[kind.value] = entry
                continue
            point = from_barycentric(t, bary)
            entry["annotation"] = "degenerate-limit"
        else:
            try:
                point = median_point(t, kind, cfg)
            except ConvergenceError as exc:
                entry["error"] = str(exc)
                code = code or EXIT_SOLVER
                results[kind.value] = entry
                continue
            bary = to_barycentric(t, point)
        entry["point"] = list(point)
        entry["barycentric"] = list(bary)
        if kind is MedianKind.M1:
            entry["in_quarter_triangle"] = bool(in_quarter_triangle(bary)[0])
        elif kind is MedianKind.M2:
            entry["in_hyperbolic_triangle"] = bool(in_hyperbolic_triangle(bary)[0])
        results[kind.value] = entry
    if args.json:
        sys.stdout.write(json_text({"sides": list(sides), "class": tclass.value,
                                    "vertices": [list(v) for v in t.vertices],
                                    "medians": results}))
    else:
        print(f"sides {fmt(sides.a)} {fmt(sides.b)} {fmt(sides.c)} ({tclass.value})")
        for name, entry in results.items():
            if "error" in entry:
                print(f"{name}: error: {entry['error']}")
                continue
            px, py = entry["point"]
            la, lb, lc = entry["barycentric"]
            line = (f"{name}: point ({fmt(px)}, {fmt(py)})  "
                    f"barycentric ({fmt(la)}, {fmt(lb)}, {fmt(lc)})")
            if "annotation" in entry:
                line += f"  [{entry['annotation']}]"
            if "in_quarter_triangle" in entry:
                line += f"  inside quarter triangle: {entry['in_quarter_triangle']}"
            if "in_hyperbolic_triangle" in entry:
                line += f"  inside hyperbolic triangle: {entry['in_hyperbolic_triangle']}"
            print(line)
    return code


def cmd_map(args) -> int:
    if args.resolution < 2:
        print("error: resolution must be >= 2", file=sys.stderr)
        return EXIT_INVALID
    kind = MedianKind(args.kind)
    samples = median_map(kind, sample_nabla(args.resolution), _config(args), workers=args.workers)
    include_boundary = kind is not MedianKind.M0
    rows = list(map_rows(samples, include_boundary))
    failures = sum(1 for s in samples if s.status.startswith("failed"))
    if args.out_csv or not args.out_svg:
        _emit(args.out_csv, csv_text(MAP_COLUMNS, rows))
    if args.out_svg:
        manifest = json.dumps(_manifest(args, "map").to_dict(), sort_keys=True)
        write_atomic(args.out_svg, map_svg(kind, samples, comment=manifest))
    if failures:
        print(f"warning: {failures} samples failed to converge", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    override = None
    if args.inject_m1:
        override = {MedianKind.M1: tuple(args.inject_m1)}
    report = verify_bounds(args.n, args.seed, _config(args), measure=args.measure,
                           override=override, workers=args.workers)
    doc = {"report": report.to_dict(), "manifest": _manifest(args, "verify").to_dict()}
    text = json_text(doc)
    if args.out_json:
        write_atomic(args.out_json, text)
    print(f"samples {report.n_samples}  m1 violations {report.m1_violations}  "
          f"m2 violations {report.m2_violations}  worst margins "
          f"{fmt(report.worst_m1_margin)} / {fmt(report.worst_m2_margin)}  "
          f"solver failures {report.solver_failures}")
    return EXIT_VIOLATION if report.m1_violations or report.m2_violations else 0


PROBE_COLUMNS = ("epsilon", "kind", "la", "lb", "lc", "limit_la", "limit_lb", "limit_lc",
                 "error", "vertex_distance", "limit_distance", "side_distance_ratio")


def cmd_degenerate(args) -> int:
    try:
        rows = limit_convergence_probe(args.sides, args.epsilons, _config(args), path=args.path)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    table = [(r.epsilon, r.kind.value, *r.barycentric, *r.limit, r.error, r.vertex_distance,
              r.limit_distance, r.side_distance_ratio) for r in rows]
    _emit(args.out_csv, csv_text(PROBE_COLUMNS, table))
    return 0


def cmd_figure(args) -> int:
    cfg = _config(args)
    comment = json.dumps(_manifest(args, "figure").to_dict(), sort_keys=True)
    if args.which == "1":
        svg = figure_1(cfg, comment)
    elif args.which == "8":
        svg = figure_8(args.epsilon, cfg=cfg, comment=comment)
    else:
        kind = {"5": MedianKind.M0, "6": MedianKind.M1, "7": MedianKind.M2}[args.which]
        samples = median_map(kind, sample_nabla(args.resolution), cfg, workers=args.workers)
        svg = map_svg(kind, samples, comment)
    _emit(args.out_svg, svg)
    return 0


def _positive_float(text):
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trimedian", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("median", help="medians of one triangle given by its sides")
    m.add_argument("sides", nargs=3, type=float, metavar="SIDE", help="side lengths a b c")
    m.add_argument("--kind", choices=["m0", "m1", "m2", "all"], default="all")
    m.add_argument("--tol", type=_positive_float, help="relative gradient tolerance")
    m.add_argument("--json", action="store_true")
    m.set_defaults(func=cmd_median)

    mp = sub.add_parser("map", help="median map over a lattice of the triangle space")
    mp.add_argument("--kind", choices=["m0", "m1", "m2"], required=True)
    mp.add_argument("--resolution", type=int, default=60)
    mp.add_argument("--out-csv")
    mp.add_argument("--out-svg")
    mp.add_argument("--seed", type=int, default=0, help="recorded in the manifest")
    mp.add_argument("--tol", type=_positive_float)
    mp.add_argument("--workers", type=int)
    mp.set_defaults(func=cmd_map)

    v = sub.add_parser("verify", help="check both containment bounds on random triangles")
    v.add_argument("--n", type=int, default=10000)
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--out-json")
    v.add_argument("--measure", choices=["nabla", "angles"], default="nabla")
    v.add_argument("--tol", type=_positive_float)
    v.add_argument("--workers", type=int)
    v.add_argument("--inject-m1", nargs=3, type=float, metavar=("LA", "LB", "LC"),
                   help="replace the first perimeter median (negative control)")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("degenerate", help="convergence towards the degenerate-limit formulas")
    d.add_argument("--sides", nargs=3, type=float, required=True, metavar=("A", "B", "C"))
    d.add_argument("--epsilons", nargs="+", type=_positive_float, default=[1e-2, 1e-3, 1e-4])
    d.add_argument("--path", choices=["grow", "lift"], default="grow")
    d.add_argument("--out-csv")
    d.add_argument("--tol", type=_positive_float)
    d.set_defaults(func=cmd_degenerate)

    f = sub.add_parser("figure", help="regenerate a figure as SVG")
    f.add_argument("--which", choices=["1", "5", "6", "7", "8"], required=True)
    f.add_argument("--out-svg")
    f.add_argument("--resolution", type=int, default=60)
    f.add_argument("--epsilon", type=_positive_float, default=1e-4)
    f.add_argument("--tol", type=_positive_float)
    f.add_argument("--workers", type=int)
    f.set_defaults(func=cmd_figure)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
