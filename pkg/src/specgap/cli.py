"""Command-line interface.

Subcommands:
    spectra   print q, mu, rho and the Perron max vertex of one graph
    bounds    print every applicable gap bound for a graph or parameter set
    verify    run a verification campaign over family specs
    table     recompute the reference comparison table
    compare   print the bound-dominance thresholds for a parameter set
    gen       write a family graph in graph6 or edge-list form

Exit codes: 0 success, 1 verification violations, 2 usage errors,
3 parse/validation errors, 4 I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .bounds import BoundReport, bound_report, bound_thm1, bound_thm2, thresholds
from .families import FamilyError, FamilySpec, generate, parse_family_spec
from .graphs import (
    Graph,
    GraphError,
    bound_context,
    edgelist_dumps,
    edgelist_loads,
    graph6_dumps,
    graph6_loads,
    is_connected,
)
from .spectral import DEFAULT_TOL, NumericalError, mu_max, perron_vector, q_max, rho_max
from .verifier import (
    campaign,
    default_campaign_specs,
    reference_table,
    render_csv,
    render_json,
    render_markdown,
    render_table,
)

_PARAM_KEYS = ("n", "delta", "D", "k", "m")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specgap",
        description="Spectral radii of graph matrices and verification of "
        "spectral-gap bounds for subgraphs of regular graphs.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_graph_source(p: argparse.ArgumentParser) -> None:
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--gen", metavar="SPEC", help="family spec, e.g. cycle:6")
        src.add_argument("--input", metavar="PATH", help="graph file to read")
        p.add_argument(
            "--format",
            choices=("auto", "graph6", "edgelist"),
            default="auto",
            help="input file format (default: auto-detect)",
        )

    p = sub.add_parser("spectra", help="largest eigenvalues of one graph")
    add_graph_source(p)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_spectra)

    p = sub.add_parser("bounds", help="gap bounds for a graph or parameters")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--gen", metavar="SPEC")
    src.add_argument("--input", metavar="PATH")
    src.add_argument(
        "--params",
        metavar="KV",
        help="explicit parameters, e.g. n=6,delta=5,D=1,k=5[,m=15]",
    )
    p.add_argument(
        "--format", choices=("auto", "graph6", "edgelist"), default="auto"
    )
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("verify", help="verify the gap inequalities over families")
    p.add_argument(
        "specs",
        nargs="*",
        metavar="SPEC",
        help="family specs (default: the stock campaign list)",
    )
    p.add_argument("--output", choices=("csv", "md", "json"), default="csv")
    p.add_argument("--out", metavar="PATH", help="write output here, not stdout")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("table", help="recompute the reference comparison table")
    p.add_argument("--output", choices=("md", "csv", "json"), default="md")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("compare", help="bound dominance thresholds")
    p.add_argument(
        "--params",
        required=True,
        metavar="KV",
        help="n=..,delta=..,D=..[,k=..]",
    )
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("gen", help="write a family graph to a file or stdout")
    p.add_argument("spec", metavar="SPEC")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    return parser


def _with_seed(spec: FamilySpec, seed: int) -> FamilySpec:
    """Default the seed of seedless random specs to the CLI --seed value."""
    if spec.kind == "random_regular" and spec.seed is None:
        return replace(spec, seed=seed)
    return spec


def _load_graph(args) -> Graph:
    if getattr(args, "gen", None):
        spec = _with_seed(parse_family_spec(args.gen), getattr(args, "seed", 0))
        return generate(spec)
    text = Path(args.input).read_text()
    fmt = args.format
    if fmt == "auto":
        fmt = _detect_format(text)
    if fmt == "graph6":
        for line in text.splitlines():
            if line.strip():
                return graph6_loads(line)
        raise GraphError(f"{args.input}: no graph6 data found")
    return edgelist_loads(text)


def _detect_format(text: str) -> str:
    # An edge-list file starts with a bare integer line; digits are not
    # valid graph6 bytes (all graph6 characters are >= '?' = 63).
    for line in text.splitlines():
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            return "edgelist" if stripped.split()[0].isdigit() else "graph6"
    raise GraphError("empty graph input")


def _parse_params(text: str, required: tuple[str, ...]) -> dict[str, int]:
    values: dict[str, int] = {}
    for piece in text.split(","):
        key, sep, value = piece.partition("=")
        key = key.strip()
        if not sep or key not in _PARAM_KEYS:
            raise ValueError(
                f"bad parameter {piece!r}; expected key=value with keys "
                f"{', '.join(_PARAM_KEYS)}"
            )
        try:
            values[key] = int(value)
        except ValueError:
            raise ValueError(f"parameter {key} must be an integer") from None
    missing = [key for key in required if key not in values]
    if missing:
        raise ValueError(f"missing required parameter(s): {', '.join(missing)}")
    return values


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_spectra(args) -> int:
    g = _load_graph(args)
    print(f"q = {q_max(g, args.tol):.6f}")
    print(f"mu = {mu_max(g, args.tol):.6f}")
    print(f"rho = {rho_max(g, args.tol):.6f}")
    if g.n and is_connected(g):
        print(f"perron_max_vertex = {perron_vector(g, args.tol).max_vertex}")
    else:
        print("perron_max_vertex = undefined (disconnected graph)")
    return 0


def _print_report(report: BoundReport) -> None:
    print(f"eq1 = {report.eq1:.6f}")
    if report.eq2 is not None:
        print(f"eq2 = {report.eq2:.6f}")
    print(f"eq3 = {report.eq3:.6f}")
    if report.eq4 is not None:
        print(f"eq4 = {report.eq4:.6f}")
    if report.threshold_hi is not None:
        print(f"threshold_hi = {report.threshold_hi:.6f}")
        print(f"threshold_lo = {report.threshold_lo:.6f}")
    if report.dominant is not None:
        print(f"dominant = {report.dominant}")


def _cmd_bounds(args) -> int:
    if args.params:
        values = _parse_params(args.params, required=("n", "delta", "D", "k"))
        report = bound_report(
            values["n"], values["delta"], values["D"], values["k"], values.get("m")
        )
    else:
        ctx = bound_context(_load_graph(args))
        report = bound_report(
            ctx.n, ctx.max_degree, ctx.diameter, ctx.connectivity, ctx.m
        )
    _print_report(report)
    return 0


def _cmd_verify(args) -> int:
    spec_texts = args.specs if args.specs else default_campaign_specs()
    specs = [_with_seed(parse_family_spec(s), args.seed) for s in spec_texts]
    summary = campaign(specs, tol=args.tol)
    if args.output == "json":
        body = render_json(summary)
    elif args.output == "md":
        body = render_markdown(summary.records)
    else:
        body = render_csv(summary.records)
    _write(body, args.out)
    for spec_id, reason in summary.skipped:
        print(f"skipped {spec_id}: {reason}", file=sys.stderr)
    print(
        f"graphs={summary.graphs} records={len(summary.records)} "
        f"violations={summary.violations} tight={summary.tight_records} "
        f"threshold_inconsistencies={summary.threshold_inconsistencies} "
        f"skipped={len(summary.skipped)}",
        file=sys.stderr,
    )
    return 0 if summary.ok else 1


def _cmd_table(args) -> int:
    rows = reference_table()
    if args.output == "md":
        body = render_table(rows)
    elif args.output == "csv":
        lines = ["graph,subgraph,gap,eq3,eq4,ref_gap,ref_eq3,ref_eq4,note"]
        for row in rows:
            cells = [row.graph_label, row.subgraph_label]
            cells += [f"{c:.4f}" for c in row.computed]
            cells += ["" if p is None else str(p) for p in row.printed]
            cells.append(row.note.replace(",", ";"))
            lines.append(",".join(cells))
        body = "\n".join(lines) + "\n"
    else:
        import json

        body = (
            json.dumps(
                [
                    {
                        "graph": row.graph_label,
                        "subgraph": row.subgraph_label,
                        "computed": list(row.computed),
                        "printed": list(row.printed),
                        "matches": list(row.matches),
                        "note": row.note,
                    }
                    for row in rows
                ],
                indent=2,
            )
            + "\n"
        )
    _write(body, args.out)
    return 0


def _cmd_compare(args) -> int:
    values = _parse_params(args.params, required=("n", "delta", "D"))
    n, delta, D = values["n"], values["delta"], values["D"]
    thr = thresholds(n, delta, D)
    print(f"threshold_hi = {thr.hi:.6f}")
    print(f"threshold_lo = {thr.lo:.6f}")
    if "k" in values:
        k = values["k"]
        eq3 = bound_thm1(n, D)
        print(f"eq3 = {eq3:.6f}")
        if k >= 2:
            eq4 = bound_thm2(n, delta, k)
            print(f"eq4 = {eq4:.6f}")
            print(f"dominant = {'eq4' if eq4 > eq3 else 'eq3'}")
        else:
            print("eq4 = undefined (k < 2)")
        if k > thr.hi:
            print(f"classification: k={k} > threshold_hi, eq4 dominates")
        elif k < thr.lo:
            print(f"classification: k={k} < threshold_lo, eq3 dominates")
        else:
            print(f"classification: k={k} between thresholds, compare numerically")
    return 0


def _cmd_gen(args) -> int:
    spec = _with_seed(parse_family_spec(args.spec), args.seed)
    g = generate(spec)
    if args.format == "graph6":
        body = graph6_dumps(g) + "\n"
    else:
        body = edgelist_dumps(g)
    _write(body, args.out)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (FamilyError, GraphError, NumericalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
