"""Verification records, campaign aggregation, reference table, rendering."""

import json
import math

import pytest

from oracles import complete_minus_edge_q, path_q
from specgap.graphs import DisconnectedGraphError, GraphError, build_graph
from specgap.verifier import (
    CSV_HEADER,
    campaign,
    default_campaign_specs,
    reference_table,
    render_csv,
    render_json,
    render_markdown,
    render_table,
    verify_graph,
)
from specgap.families import generate, parse_family_spec


def fam(text):
    return generate(parse_family_spec(text))


class TestVerifyGraph:
    def test_cycle6(self):
        records = verify_graph(fam("cycle:6"), "cycle:6")
        assert len(records) == 6
        expected_gap = 4.0 - path_q(6)
        for r in records:
            assert (r.n, r.delta, r.D, r.k) == (6, 2, 3, 2)
            assert r.gap == pytest.approx(expected_gap, abs=1e-9)
            # Every edge deletion leaves a path, which is bipartite, so the
            # two gap flavors coincide.
            assert r.mu_gap == pytest.approx(r.gap, abs=1e-9)
            assert r.eq3 == pytest.approx(1.0 / 16.5, abs=1e-15)
            assert r.eq4 == pytest.approx(2.0 / 39.0, abs=1e-15)
            assert r.thm1_pass and r.thm2_pass and r.cor1_pass and r.cor2_pass
            assert r.dominant == "eq3"
            assert r.consistent and not r.tight and not r.violated

    def test_complete6(self):
        records = verify_graph(fam("complete:6"), "complete:6")
        assert len(records) == 15
        expected_gap = 10.0 - complete_minus_edge_q(6)
        for r in records:
            assert (r.n, r.delta, r.D, r.k) == (6, 5, 1, 5)
            assert r.gap == pytest.approx(expected_gap, abs=1e-9)
            assert r.mu_gap == pytest.approx(4.0, abs=1e-9)  # mu(K6 - e) = 6
            assert r.eq4 == pytest.approx(16.0 / 63.0, abs=1e-15)
            assert r.dominant == "eq4"
            assert not r.violated

    def test_single_edge_graph(self):
        (r,) = verify_graph(fam("complete:2"), "complete:2")
        assert (r.n, r.delta, r.D, r.k) == (2, 1, 1, 1)
        assert r.gap == pytest.approx(2.0, abs=1e-12)  # the subgraph is edgeless
        assert r.eq4 is None and r.thm2_pass is None and r.cor2_pass is None
        assert r.dominant is None and r.consistent
        assert r.thm1_pass and r.cor1_pass

    def test_rejects_irregular(self):
        with pytest.raises(GraphError, match="regular"):
            verify_graph(fam("path:3"))

    def test_rejects_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            verify_graph(build_graph(4, [(0, 1), (2, 3)]))

    def test_rejects_trivial(self):
        with pytest.raises(GraphError):
            verify_graph(build_graph(1, []))

    @pytest.mark.parametrize("spec", ["petersen", "hypercube:3", "circulant:8,1,2"])
    def test_record_invariants(self, spec):
        for r in verify_graph(fam(spec), spec):
            assert r.gap > 0.0
            assert r.mu_gap >= r.gap - 1e-12
            assert not r.violated and r.consistent

    def test_wide_margin_marks_tight_not_violated(self):
        # With an absurdly wide margin every pass lands in the tight band;
        # tight records must not count as violations.
        records = verify_graph(fam("cycle:6"), "cycle:6", margin=10.0)
        for r in records:
            assert not r.thm1_pass and r.tight == ("cor1", "cor2", "thm1", "thm2")
            assert not r.violated


class TestCampaign:
    def test_small_campaign(self):
        summary = campaign(["cycle:6", "complete:6"])
        assert summary.graphs == 2
        assert len(summary.records) == 21
        assert summary.violations == 0
        assert summary.threshold_inconsistencies == 0
        assert summary.ok
        assert summary.min_ratio_eq3 > 1.0
        assert summary.min_ratio_eq4 > 1.0

    def test_sorted_by_graph_then_edge(self):
        summary = campaign(["cycle:6", "complete:6"])
        keys = [(r.graph_id, r.edge) for r in summary.records]
        assert keys == sorted(keys)
        assert keys[0][0] == "complete:6"  # lexicographic graph order

    def test_skips_unusable_specs(self):
        summary = campaign(["cycle:6", "path:6", "random_regular:5,3;seed=1"])
        assert summary.graphs == 1
        assert len(summary.skipped) == 2
        reasons = dict(summary.skipped)
        assert "regular" in reasons["path:6"]
        assert "n*d must be even" in reasons["random_regular:5,3;seed=1"]

    def test_unparseable_spec_is_an_error(self):
        with pytest.raises(Exception):
            campaign(["not_a_kind:3"])

    def test_empty(self):
        summary = campaign([])
        assert summary.graphs == 0 and summary.records == ()
        assert summary.min_ratio_eq3 is None and summary.ok

    def test_default_specs_shape(self):
        specs = default_campaign_specs()
        assert len(specs) == len(set(specs))
        assert sum(1 for s in specs if s.startswith("random_regular")) == 50
        # Every spec parses, and the deterministic ones are regular by
        # construction; actually running them is the acceptance suite's job.
        for s in specs:
            parse_family_spec(s)


class TestRendering:
    def test_csv_header_is_pinned(self):
        assert CSV_HEADER == (
            "graph_id,edge_u,edge_v,n,delta,D,k,gap,mu_gap,eq3,eq4,"
            "thm1,thm2,cor1,cor2,dominant,consistent"
        )

    def test_csv_row_formatting(self):
        text = render_csv(verify_graph(fam("complete:2"), "complete:2"))
        lines = text.splitlines()
        assert lines[0] == CSV_HEADER
        assert lines[1] == (
            "complete:2,0,1,2,1,1,1,2.000000,2.000000,0.666667,"
            ",true,,true,,,true"
        )
        assert text.endswith("\n")

    def test_csv_full_row(self):
        line = render_csv(verify_graph(fam("cycle:6"), "cycle:6")).splitlines()[1]
        assert line == (
            "cycle:6,0,1,6,2,3,2,0.267949,0.267949,0.060606,0.051282,"
            "true,true,true,true,eq3,true"
        )

    def test_markdown(self):
        text = render_markdown(verify_graph(fam("cycle:6"), "cycle:6"))
        lines = text.splitlines()
        assert lines[0].startswith("| graph_id | edge_u |")
        assert lines[1] == "|" + "---|" * 17
        assert len(lines) == 2 + 6

    def test_json(self):
        summary = campaign(["cycle:6", "path:6"])
        payload = json.loads(render_json(summary))
        assert payload["summary"]["graphs"] == 1
        assert payload["summary"]["ok"] is True
        assert payload["skipped"][0]["spec"] == "path:6"
        record = payload["records"][0]
        assert record["graph_id"] == "cycle:6"
        assert record["edge"] == [0, 1]
        assert record["gap"] == pytest.approx(4.0 - path_q(6))


@pytest.fixture(scope="module")
def rows():
    return reference_table()


class TestReferenceTable:

    def test_exact_rows_status(self, rows):
        by_label = {}
        for row in rows:
            by_label.setdefault(row.graph_label, []).append(row)
        assert by_label["C6"][0].matches == (True, True, True)
        assert by_label["K6"][0].matches == (True, True, True)
        assert by_label["K12"][0].matches == (True, True, True)
        c12 = by_label["C12"][0]
        assert c12.matches == (True, False, True)
        assert "0.014493" in c12.note and "0.0159" in c12.note

    def test_computed_cells(self, rows):
        cells = {row.graph_label: row.computed for row in rows[:4]}
        assert cells["C6"] == pytest.approx(
            (4.0 - path_q(6), 1.0 / 16.5, 2.0 / 39.0), abs=1e-9
        )
        assert cells["K12"][0] == pytest.approx(
            22.0 - complete_minus_edge_q(12), abs=1e-9
        )

    def test_candidate_rows(self, rows):
        candidates = [r for r in rows if r.graph_label.startswith("cubic_d2:")]
        labels = {r.graph_label for r in candidates}
        assert labels == {"cubic_d2:6.1", "cubic_d2:6.2", "cubic_d2:8.1", "cubic_d2:8.2"}
        for row in candidates:
            assert row.printed == (None, None, None)
            assert row.matches == (None, None, None)
            order = int(row.graph_label.split(":")[1].split(".")[0])
            assert row.computed[1] == pytest.approx(
                1.0 / (order * 1.75), abs=1e-12
            )
            expected_eq4 = {6: 4.0 / 29.0, 8: 8.0 / 106.0}[order]
            assert row.computed[2] == pytest.approx(expected_eq4, abs=1e-12)
        # Gap classes are listed in descending order within one candidate.
        for label in sorted(labels):
            gaps = [r.computed[0] for r in candidates if r.graph_label == label]
            assert gaps == sorted(gaps, reverse=True)

    def test_class_reference_note_present(self, rows):
        notes = [r.note for r in rows if r.graph_label == "cubic_d2:6.1"]
        assert notes[0].startswith("class reference rows:")
        assert all(not n for n in notes[1:])

    def test_render_table(self, rows):
        text = render_table(rows)
        lines = text.splitlines()
        assert lines[0].startswith("| graph | subgraph |")
        assert sum(1 for line in lines if "| MISMATCH |" in line) == 1
        assert "C12" in next(line for line in lines if "MISMATCH" in line)
        assert sum(1 for line in lines if "| ok |" in line) == 3
        assert sum(1 for line in lines if "| candidate |" in line) == len(lines) - 2 - 4
