"""Command-line front end.

Subcommands:
    analyze   full report (spectra, coefficients, indices, polynomials, bounds)
    spectrum  both spectra and the eigenvalue mesh of one graph
    altpoly   alternating polynomials for a graph file or an explicit mesh
    bounds    bound/exact comparison reports for one graph
    verify    invariant suite over built-in families or seeded random graphs

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Graphs are read from the plain edge-list format (header ``n m``, one edge
per line, ``#`` comments); all floating-point output uses 12 significant
digits.
"""

import argparse
import json
import sys

from . import altpoly, bounds, randic, spectral, suite
from .graph import (
    FAMILY_NAMES,
    Graph,
    build_family,
    bipartition,
    connected_components,
    degree_profile,
    is_regular,
    parse_edge_list,
    random_connected_graphs,
)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degspec",
        description="Degree-adjacency spectra, Randic-type indices, alternating polynomials, and spectral bound verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one graph file")
    p.add_argument("file", help="edge-list file")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(handler=_run_analyze)

    p = sub.add_parser("spectrum", help="spectra and mesh for one graph file")
    p.add_argument("file", help="edge-list file")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(handler=_run_spectrum)

    p = sub.add_parser("bounds", help="bound/exact comparison reports for one graph file")
    p.add_argument("file", help="edge-list file")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(handler=_run_bounds)

    p = sub.add_parser("altpoly", help="alternating polynomials on a mesh or graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--mesh", help="comma-separated strictly descending mesh points")
    src.add_argument("--graph", help="edge-list file (mesh taken from its spectrum)")
    p.add_argument("--k", help="degree or range, e.g. 2 or 0..4 (default: all)")
    p.set_defaults(handler=_run_altpoly)

    p = sub.add_parser("verify", help="run the invariant suite over a graph collection")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=FAMILY_NAMES)
    src.add_argument("--random", action="store_true")
    p.add_argument("--n", help="size or range, e.g. 8 or 3..16")
    p.add_argument("--count", type=int, default=10, help="number of random graphs")
    p.add_argument("--seed", type=int, help="random seed (required with --random)")
    p.set_defaults(handler=_run_verify)
    return parser


def _read_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_edge_list(handle.read())


def _round12(value: float) -> float:
    return float(f"{value:.12g}")


def _jsonable(obj):
    """Recursively convert to JSON-safe values with floats at 12 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, float):
        return _round12(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def dumps_report(obj) -> str:
    """Serialize a report; parsing and re-serializing is byte-identical."""
    return json.dumps(_jsonable(obj), indent=2, sort_keys=True, allow_nan=False)


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def _bound_report_dict(r: bounds.BoundReport) -> dict:
    return {
        "name": r.name,
        "params": dict(r.params),
        "bound": r.bound,
        "exact": r.exact,
        "sound": r.sound,
        "tight": r.tight,
        "reason": r.reason,
    }


def build_analysis_report(g: Graph) -> dict:
    """Assemble the full analysis of one connected graph as a plain dict."""
    profile = degree_profile(g)
    matrix = spectral.degree_adjacency(g)  # names any isolated vertex
    comps = connected_components(g)
    if len(comps) != 1:
        raise ValueError(f"graph is disconnected ({len(comps)} components)")
    dspec = spectral.eigenvalues(matrix)
    sspec = spectral.standard_eigenvalues(g)
    coeffs = spectral.char_poly_from_spectrum(dspec)
    c123 = spectral.structural_coefficients(g)
    report = randic.randic_bound_report(g, deg_spectrum=dspec, std_spectrum=sspec)
    mesh = altpoly.mesh_from_spectrum(dspec)
    polys = [altpoly.alternating_polynomial_lp(mesh, k) for k in range(mesh.b)]
    bound_reports = [_bound_report_dict(r) for r in bounds.verify_all(g)] if g.n <= bounds.GRID_ORDER_CAP else []
    return {
        "graph": {
            "n": g.n,
            "m": g.m,
            "delta_min": profile.delta_min,
            "delta_max": profile.delta_max,
            "delta_star": profile.delta_star,
            "regular": is_regular(g),
            "bipartite": bipartition(g) is not None,
            "weight_regular": spectral.weight_regular(g),
        },
        "degree_adjacency_spectrum": list(dspec.values),
        "standard_spectrum": list(sspec.values),
        "char_poly": {
            "spectral": [float(c) for c in coeffs],
            "structural_c1_c2_c3": [float(c) for c in c123],
        },
        "randic": {
            "R": report.randic,
            "R0": report.zeroth,
            "zagreb2": report.zagreb2,
            "perron_overlap": report.perron_overlap,
            "R_alpha": {f"{a:g}": v for a, v in sorted(report.alpha_values.items())},
            "R_higher": {str(t): v for t, v in sorted(report.higher_values.items())},
            "checks": [
                {
                    "name": c.name,
                    "lhs": c.lhs,
                    "rhs": c.rhs,
                    "holds": c.holds,
                    "tight": c.tight,
                    "reason": c.reason,
                }
                for c in report.checks
            ],
        },
        "mesh": list(mesh.points),
        "alternating": [
            {"k": p.k, "value_at_1": p.value_at_1, "coefficients": list(p.coefficients)}
            for p in polys
        ],
        "bound_reports": bound_reports,
    }


def _run_analyze(args) -> int:
    report = build_analysis_report(_read_graph(args.file))
    if args.format == "json":
        print(dumps_report(report))
        return 0
    g = report["graph"]
    wr = g["weight_regular"]
    print(
        f"graph: n={g['n']} m={g['m']} delta={g['delta_min']} Delta={g['delta_max']} "
        f"regular={_yn(g['regular'])} bipartite={_yn(g['bipartite'])} "
        f"weight-regular={_fmt(wr) if wr is not None else 'no'}"
    )
    print("degree-adjacency spectrum: " + " ".join(_fmt(v) for v in report["degree_adjacency_spectrum"]))
    print("standard spectrum:         " + " ".join(_fmt(v) for v in report["standard_spectrum"]))
    print("char poly c1..cn:          " + " ".join(_fmt(v) for v in report["char_poly"]["spectral"]))
    print("structural c1 c2 c3:       " + " ".join(_fmt(v) for v in report["char_poly"]["structural_c1_c2_c3"]))
    r = report["randic"]
    print(f"indices: R={_fmt(r['R'])} R0={_fmt(r['R0'])} zagreb2={_fmt(r['zagreb2'])}")
    for name, value in r["R_alpha"].items():
        print(f"  R_alpha[{name}] = {_fmt(value)}")
    for name, value in r["R_higher"].items():
        print(f"  R_higher[{name}] = {_fmt(value)}")
    failing = [c["name"] for c in r["checks"] if c["holds"] is False]
    print(f"index checks: {len(r['checks'])} evaluated, failing: {failing if failing else 'none'}")
    print("mesh: " + " ".join(_fmt(v) for v in report["mesh"]))
    for entry in report["alternating"]:
        print(f"  P_{entry['k']}(1) = {_fmt(entry['value_at_1'])}")
    reports = report["bound_reports"]
    unsound = sum(1 for x in reports if not x["sound"])
    tight = sum(1 for x in reports if x["tight"])
    print(f"bound reports: {len(reports)} total, {unsound} unsound, {tight} tight")
    return 0


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _run_spectrum(args) -> int:
    g = _read_graph(args.file)
    dspec = spectral.eigenvalues(spectral.degree_adjacency(g))
    sspec = spectral.standard_eigenvalues(g)
    mesh_points = None
    if len(connected_components(g)) == 1:
        mesh_points = list(altpoly.mesh_from_spectrum(dspec).points)
    payload = {
        "n": g.n,
        "degree_adjacency_spectrum": list(dspec.values),
        "standard_spectrum": list(sspec.values),
        "mesh": mesh_points,
    }
    if args.format == "json":
        print(dumps_report(payload))
    else:
        print("degree-adjacency spectrum: " + " ".join(_fmt(v) for v in dspec.values))
        print("standard spectrum:         " + " ".join(_fmt(v) for v in sspec.values))
        if mesh_points is not None:
            print("mesh:                      " + " ".join(_fmt(v) for v in mesh_points))
        else:
            print("mesh:                      undefined (graph is disconnected)")
    return 0


def _run_bounds(args) -> int:
    g = _read_graph(args.file)
    reports = bounds.verify_all(g)
    unsound = [r for r in reports if not r.sound]
    if args.format == "json":
        print(dumps_report([_bound_report_dict(r) for r in reports]))
    else:
        for r in reports:
            params = " ".join(f"{k}={v}" for k, v in r.params)
            if r.bound is None:
                print(f"{r.name} {params}: not applicable ({r.reason}); exact {r.exact}")
            else:
                mark = "TIGHT" if r.tight else ("ok" if r.sound else "VIOLATION")
                print(f"{r.name} {params}: bound {_fmt(float(r.bound))} exact {r.exact} [{mark}]")
        print(f"summary: {len(reports)} reports, {len(unsound)} violations")
    return 1 if unsound else 0


def _parse_k_spec(text: str, b: int) -> list[int]:
    lo, hi = _parse_range(text, "k")
    if lo < 0 or hi > b - 1:
        raise ValueError(f"k must lie in 0..{b - 1}, got {text!r}")
    return list(range(lo, hi + 1))


def _parse_range(text: str, what: str) -> tuple[int, int]:
    raw = text.strip()
    try:
        if ".." in raw:
            lo_text, hi_text = raw.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(raw)
    except ValueError:
        raise ValueError(f"could not parse {what} specification {text!r}") from None
    if lo > hi:
        raise ValueError(f"empty {what} range {text!r}")
    return lo, hi


def _run_altpoly(args) -> int:
    if args.mesh is not None:
        points = tuple(float(tok) for tok in args.mesh.replace(",", " ").split())
        mesh = altpoly.Mesh(points=points)
    else:
        g = _read_graph(args.graph)
        mesh = altpoly.mesh_from_spectrum(spectral.eigenvalues(spectral.degree_adjacency(g)))
    ks = _parse_k_spec(args.k, mesh.b) if args.k else list(range(mesh.b))
    for k in ks:
        poly = altpoly.alternating_polynomial_lp(mesh, k)
        coeffs = " ".join(_fmt(c) for c in poly.coefficients)
        print(f"k={k}  value_at_1={_fmt(poly.value_at_1)}  coefficients: {coeffs}")
    return 0


def _verify_graph_list(args) -> list[tuple[str, Graph]]:
    if args.random:
        if args.seed is None:
            raise ValueError("--random needs an explicit --seed")
        if not args.n:
            raise ValueError("--random needs a size range via --n")
        lo, hi = _parse_range(args.n, "n")
        graphs = random_connected_graphs(lo, hi, args.count, args.seed)
        return [(f"random[{i}] (n={g.n}, m={g.m})", g) for i, g in enumerate(graphs)]
    name = args.family
    if name == "c4_pendant":
        return [(name, build_family(name))]
    if not args.n:
        raise ValueError(f"--family {name} needs a size range via --n")
    lo, hi = _parse_range(args.n, "n")
    out = []
    for n in range(lo, hi + 1):
        sizes = (n // 2, n - n // 2) if name == "complete_bipartite" else (n,)
        out.append((suite.family_label(name, sizes), build_family(name, *sizes)))
    return out


def _run_verify(args) -> int:
    graphs = _verify_graph_list(args)
    total = failures = 0
    failed_lines: list[str] = []
    for label, g in graphs:
        checks = suite.check_graph(g)
        if args.family == "c4_pendant":
            checks = checks + suite.c4_pendant_tightness_checks(g)
        ok = sum(1 for c in checks if c.passed)
        total += len(checks)
        failures += len(checks) - ok
        print(f"{label}: {ok}/{len(checks)} checks passed")
        for c in checks:
            if not c.passed:
                failed_lines.append(f"  FAIL {label} :: {c.name} {c.detail}")
    for line in failed_lines:
        print(line)
    print(f"summary: {len(graphs)} graphs, {total} checks, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
