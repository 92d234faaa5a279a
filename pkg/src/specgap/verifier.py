"""Verification harness for the spectral-gap inequalities.

For a connected Delta-regular graph G, every single-edge deletion H = G - e
must satisfy, strictly:

    2*Delta - q(H)  >  bound_thm1(n, D)            (checked as ``thm1``)
    2*Delta - q(H)  >  bound_thm2(n, Delta, k)     (``thm2``, when k >= 2)
    2*Delta - mu(H) >  bound_thm1(n, D)            (``cor1``)
    2*Delta - mu(H) >  bound_thm2(n, Delta, k)     (``cor2``, when k >= 2)

with G's own parameters n, Delta, D (diameter), k (vertex connectivity).
``verify_graph`` produces one record per edge; ``campaign`` sweeps whole
family lists and aggregates.  Because floating error must never flip a
strict inequality, a pass requires the margin ``difference > 1e-9``;
anything in (0, 1e-9] is reported as numerically tight instead of failing.

``reference_table`` rebuilds the reference comparison table: four
edge-transitive families computed exactly, plus candidate rows for the two
cubic diameter-2 parameter classes whose reference rows cannot be tied to a
specific graph; see the module docstring of :mod:`specgap.families`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .bounds import bound_thm1, bound_thm2, thresholds
from .families import (
    FamilyError,
    FamilySpec,
    diameter2_cubic_candidates,
    generate,
    maximal_subgraphs,
    parse_family_spec,
)
from .graphs import Graph, GraphError, diameter
from .connectivity import vertex_connectivity
from .spectral import DEFAULT_TOL, mu_max, q_max

STRICTNESS_MARGIN = 1e-9
TABLE_TOLERANCE = 5e-4

CSV_HEADER = (
    "graph_id,edge_u,edge_v,n,delta,D,k,gap,mu_gap,eq3,eq4,"
    "thm1,thm2,cor1,cor2,dominant,consistent"
)

CHECK_NAMES = ("thm1", "thm2", "cor1", "cor2")


@dataclass(frozen=True)
class VerificationRecord:
    """One (ambient graph, deleted edge) inequality check."""

    graph_id: str
    edge: tuple[int, int]
    n: int
    delta: int
    D: int
    k: int
    gap: float
    mu_gap: float
    eq3: float
    eq4: float | None
    thm1_pass: bool
    thm2_pass: bool | None
    cor1_pass: bool
    cor2_pass: bool | None
    dominant: str | None
    consistent: bool
    tight: tuple[str, ...] = ()

    @property
    def violated(self) -> bool:
        """True when some checked inequality failed outright (difference
        <= 0, not merely inside the tight margin)."""
        flags = {
            "thm1": self.thm1_pass,
            "thm2": self.thm2_pass,
            "cor1": self.cor1_pass,
            "cor2": self.cor2_pass,
        }
        return any(
            ok is False and name not in self.tight for name, ok in flags.items()
        )


def verify_graph(
    g: Graph,
    graph_id: str = "graph",
    tol: float = DEFAULT_TOL,
    margin: float = STRICTNESS_MARGIN,
) -> list[VerificationRecord]:
    """Check every maximal subgraph of a connected regular graph.

    Raises GraphError for irregular or disconnected input (the inequalities
    are statements about regular ambient graphs).
    """
    if g.n < 2:
        raise GraphError("verification needs a graph with at least one edge")
    if not g.is_regular():
        raise GraphError(f"{graph_id}: ambient graph must be regular")
    delta = g.max_degree()
    D = diameter(g)  # raises DisconnectedGraphError for disconnected input
    k = vertex_connectivity(g)
    n = g.n
    eq3 = bound_thm1(n, D)
    eq4 = bound_thm2(n, delta, k) if k >= 2 else None
    try:
        thr = thresholds(n, delta, D)
    except ValueError:
        thr = None
    dominant = None
    if eq4 is not None:
        dominant = "eq4" if eq4 > eq3 else "eq3"
    consistent = True
    if thr is not None and eq4 is not None:
        if k > thr.hi:
            consistent = dominant == "eq4"
        elif k < thr.lo:
            consistent = dominant == "eq3"

    def strict(lhs: float, bound: float) -> tuple[bool, bool]:
        diff = lhs - bound
        return diff > margin, 0.0 < diff <= margin

    records = []
    for edge, h in maximal_subgraphs(g):
        gap = 2.0 * delta - q_max(h, tol)
        mu_gap = 2.0 * delta - mu_max(h, tol)
        tight: list[str] = []
        thm1_pass, is_tight = strict(gap, eq3)
        if is_tight:
            tight.append("thm1")
        cor1_pass, is_tight = strict(mu_gap, eq3)
        if is_tight:
            tight.append("cor1")
        thm2_pass = cor2_pass = None
        if eq4 is not None:
            thm2_pass, is_tight = strict(gap, eq4)
            if is_tight:
                tight.append("thm2")
            cor2_pass, is_tight = strict(mu_gap, eq4)
            if is_tight:
                tight.append("cor2")
        records.append(
            VerificationRecord(
                graph_id=graph_id,
                edge=edge,
                n=n,
                delta=delta,
                D=D,
                k=k,
                gap=gap,
                mu_gap=mu_gap,
                eq3=eq3,
                eq4=eq4,
                thm1_pass=thm1_pass,
                thm2_pass=thm2_pass,
                cor1_pass=cor1_pass,
                cor2_pass=cor2_pass,
                dominant=dominant,
                consistent=consistent,
                tight=tuple(sorted(tight)),
            )
        )
    return records


@dataclass(frozen=True)
class CampaignSummary:
    """Aggregate of a verification campaign."""

    records: tuple[VerificationRecord, ...]
    skipped: tuple[tuple[str, str], ...]
    graphs: int
    violations: int
    tight_records: int
    threshold_inconsistencies: int
    min_ratio_eq3: float | None
    min_ratio_eq4: float | None

    @property
    def ok(self) -> bool:
        return self.violations == 0 and self.threshold_inconsistencies == 0


def campaign(
    specs,
    tol: float = DEFAULT_TOL,
    margin: float = STRICTNESS_MARGIN,
) -> CampaignSummary:
    """Verify every family spec in ``specs`` (strings or FamilySpec values).

    Specs that generate irregular or disconnected graphs are recorded as
    skipped rather than failing the whole run.
    """
    records: list[VerificationRecord] = []
    skipped: list[tuple[str, str]] = []
    graphs = 0
    for item in specs:
        spec = parse_family_spec(item) if isinstance(item, str) else item
        spec_id = str(spec)
        try:
            g = generate(spec)
            records.extend(verify_graph(g, spec_id, tol=tol, margin=margin))
            graphs += 1
        except (FamilyError, GraphError) as exc:
            skipped.append((spec_id, str(exc)))
    records.sort(key=lambda r: (r.graph_id, r.edge))
    ratios3 = [r.gap / r.eq3 for r in records]
    ratios4 = [r.gap / r.eq4 for r in records if r.eq4 is not None]
    return CampaignSummary(
        records=tuple(records),
        skipped=tuple(skipped),
        graphs=graphs,
        violations=sum(1 for r in records if r.violated),
        tight_records=sum(1 for r in records if r.tight),
        threshold_inconsistencies=sum(1 for r in records if not r.consistent),
        min_ratio_eq3=min(ratios3) if ratios3 else None,
        min_ratio_eq4=min(ratios4) if ratios4 else None,
    )


def default_campaign_specs() -> list[str]:
    """The stock family list: deterministic families plus 50 seeded random
    regular graphs, giving well over 500 (graph, edge) records."""
    specs = [f"cycle:{n}" for n in range(3, 21)]
    specs += [f"complete:{n}" for n in range(3, 15)]
    specs += [f"complete_bipartite:{d},{d}" for d in range(2, 7)]
    specs += [f"hypercube:{d}" for d in range(2, 5)]
    specs += ["petersen"]
    specs += [f"circulant:{n},1,2" for n in range(5, 13)]
    combos = [
        (6, 3), (8, 3), (10, 3), (12, 3), (14, 3),
        (8, 4), (10, 4), (12, 4), (14, 4), (12, 5),
    ]
    specs += [
        f"random_regular:{n},{d};seed={s}" for n, d in combos for s in range(1, 6)
    ]
    return specs


# ---------------------------------------------------------------------------
# Reference comparison table
# ---------------------------------------------------------------------------

# Printed reference cells (gap, eq3, eq4) for the four exactly identified
# rows.  The cycle:12 eq3 cell is a suspected misprint: the diameter-6
# formula gives 1/69 = 0.014493, not 0.0159; reference_table flags it.
_EXACT_ROWS = (
    ("cycle:6", "C6", "P6", (0.268, 0.0606, 0.05128)),
    ("cycle:12", "C12", "P12", (0.0682, 0.0159, 0.0094)),
    ("complete:6", "K6", "K6-e", (0.5359, 0.2222, 0.25397)),
    ("complete:12", "K12", "K12-e", (0.2918, 0.1111, 0.14948)),
)

# Printed reference cells for the two cubic diameter-2 parameter classes.
# They belong to unspecified members/edges of the class, so candidate rows
# carry them as notes rather than asserting equality.  (The 6-vertex class
# prints two different eq4 cells for subgraphs of one graph, which cannot
# both equal bound_thm2(6, 3, k); the computed value is reported alongside.)
_CLASS_ROWS: dict[int, tuple[tuple[float, float, float], ...]] = {
    6: ((0.4384, 0.0952, 0.1379), (0.4113, 0.0952, 0.2069)),
    8: ((0.2907, 0.0714, 0.0816),),
}


@dataclass(frozen=True)
class TableRow:
    """One comparison row: computed (gap, eq3, eq4) vs printed reference."""

    graph_label: str
    subgraph_label: str
    computed: tuple[float, float, float]
    printed: tuple[float | None, float | None, float | None]
    matches: tuple[bool | None, bool | None, bool | None]
    note: str = ""


def reference_table(
    table_tol: float = TABLE_TOLERANCE, tol: float = DEFAULT_TOL
) -> list[TableRow]:
    """Recompute the reference table rows and compare against printed cells."""
    rows: list[TableRow] = []
    for spec, g_label, h_label, printed in _EXACT_ROWS:
        record = verify_graph(generate(parse_family_spec(spec)), spec, tol=tol)[0]
        computed = (record.gap, record.eq3, record.eq4)
        matches = tuple(
            abs(c - p) <= table_tol for c, p in zip(computed, printed)
        )
        notes = [
            f"computed {name} = {c:.6f} differs from printed {p}"
            for name, c, p, ok in zip(
                ("gap", "eq3", "eq4"), computed, printed, matches
            )
            if not ok
        ]
        rows.append(
            TableRow(
                graph_label=g_label,
                subgraph_label=h_label,
                computed=computed,
                printed=printed,
                matches=matches,
                note="; ".join(notes),
            )
        )
    for order, printed_rows in sorted(_CLASS_ROWS.items()):
        candidates = diameter2_cubic_candidates()[order]
        reference_note = "class reference rows: " + "; ".join(
            f"({p[0]}, {p[1]}, {p[2]})" for p in printed_rows
        )
        for i, cand in enumerate(candidates, start=1):
            label = f"cubic_d2:{order}.{i}"
            records = verify_graph(cand, label, tol=tol)
            distinct: list[tuple[float, float, float]] = []
            for record in records:
                entry = (record.gap, record.eq3, record.eq4)
                if not any(abs(entry[0] - seen[0]) <= 1e-8 for seen in distinct):
                    distinct.append(entry)
            distinct.sort(reverse=True)
            for j, computed in enumerate(distinct, start=1):
                rows.append(
                    TableRow(
                        graph_label=label,
                        subgraph_label=f"-e (gap class {j})",
                        computed=computed,
                        printed=(None, None, None),
                        matches=(None, None, None),
                        note=reference_note if j == 1 else "",
                    )
                )
    return rows


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _fmt_float(x: float | None) -> str:
    return "" if x is None else f"{x:.6f}"


def _fmt_bool(x: bool | None) -> str:
    return "" if x is None else ("true" if x else "false")


def _record_fields(r: VerificationRecord) -> list[str]:
    return [
        r.graph_id,
        str(r.edge[0]),
        str(r.edge[1]),
        str(r.n),
        str(r.delta),
        str(r.D),
        str(r.k),
        _fmt_float(r.gap),
        _fmt_float(r.mu_gap),
        _fmt_float(r.eq3),
        _fmt_float(r.eq4),
        _fmt_bool(r.thm1_pass),
        _fmt_bool(r.thm2_pass),
        _fmt_bool(r.cor1_pass),
        _fmt_bool(r.cor2_pass),
        r.dominant or "",
        _fmt_bool(r.consistent),
    ]


def render_csv(records) -> str:
    lines = [CSV_HEADER]
    lines.extend(",".join(_record_fields(r)) for r in records)
    return "\n".join(lines) + "\n"


def render_markdown(records) -> str:
    header = CSV_HEADER.split(",")
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "---|" * len(header),
    ]
    lines.extend("| " + " | ".join(_record_fields(r)) + " |" for r in records)
    return "\n".join(lines) + "\n"


def render_json(summary: CampaignSummary) -> str:
    payload = {
        "summary": {
            "graphs": summary.graphs,
            "records": len(summary.records),
            "violations": summary.violations,
            "tight_records": summary.tight_records,
            "threshold_inconsistencies": summary.threshold_inconsistencies,
            "min_ratio_eq3": summary.min_ratio_eq3,
            "min_ratio_eq4": summary.min_ratio_eq4,
            "ok": summary.ok,
        },
        "skipped": [
            {"spec": spec, "reason": reason} for spec, reason in summary.skipped
        ],
        "records": [
            {
                "graph_id": r.graph_id,
                "edge": list(r.edge),
                "n": r.n,
                "delta": r.delta,
                "D": r.D,
                "k": r.k,
                "gap": r.gap,
                "mu_gap": r.mu_gap,
                "eq3": r.eq3,
                "eq4": r.eq4,
                "thm1": r.thm1_pass,
                "thm2": r.thm2_pass,
                "cor1": r.cor1_pass,
                "cor2": r.cor2_pass,
                "dominant": r.dominant,
                "consistent": r.consistent,
                "tight": list(r.tight),
            }
            for r in summary.records
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def render_table(rows: list[TableRow]) -> str:
    """Markdown rendering of the reference comparison table."""
    header = (
        "| graph | subgraph | gap | eq3 | eq4 | ref gap | ref eq3 | ref eq4 "
        "| status | note |"
    )
    lines = [header, "|" + "---|" * 10]
    for row in rows:
        if any(ok is False for ok in row.matches):
            status = "MISMATCH"
        elif all(ok is None for ok in row.matches):
            status = "candidate"
        else:
            status = "ok"
        cells = [
            row.graph_label,
            row.subgraph_label,
            *(f"{c:.4f}" for c in row.computed),
            *("" if p is None else f"{p}" for p in row.printed),
            status,
            row.note,
        ]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"
