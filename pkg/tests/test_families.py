"""Family spec parsing, generators, isomorphism, and cubic enumeration."""

import pytest

from specgap.families import (
    FAMILY_KINDS,
    FamilyError,
    FamilySpec,
    cubic_graphs,
    diameter2_cubic_candidates,
    generate,
    isomorphic,
    maximal_subgraphs,
    parse_family_spec,
)
from specgap.graphs import GraphError, build_graph, diameter, is_bipartite, is_connected


def fam(text):
    return generate(parse_family_spec(text))


PRISM = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


class TestParsing:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("cycle:6", FamilySpec("cycle", (6,))),
            ("petersen", FamilySpec("petersen")),
            ("complete_bipartite:3,4", FamilySpec("complete_bipartite", (3, 4))),
            ("circulant:9,1,2,4", FamilySpec("circulant", (9, 1, 2, 4))),
            ("random_regular:10,3;seed=7", FamilySpec("random_regular", (10, 3), 7)),
            ("  cycle : 6 ", FamilySpec("cycle", (6,))),
        ],
    )
    def test_accepts(self, text, expected):
        assert parse_family_spec(text) == expected

    @pytest.mark.parametrize(
        "text",
        [
            "moebius:8",
            "cycle:six",
            "cycle:6;sid=3",
            "cycle:6;seed",
            "random_regular:10,3;seed=x",
            "",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(FamilyError):
            parse_family_spec(text)

    @pytest.mark.parametrize(
        "text",
        ["cycle:6", "petersen", "complete_bipartite:3,4", "random_regular:10,3;seed=7"],
    )
    def test_round_trip(self, text):
        assert str(parse_family_spec(text)) == text

    def test_every_kind_is_parseable(self):
        for kind in FAMILY_KINDS:
            assert parse_family_spec(f"{kind}:3,3").kind == kind


class TestGenerators:
    @pytest.mark.parametrize("n", [3, 4, 9])
    def test_cycle(self, n):
        g = fam(f"cycle:{n}")
        assert (g.n, g.m) == (n, n)
        assert g.is_regular() and g.max_degree() == 2
        assert diameter(g) == n // 2

    def test_path(self):
        g = fam("path:5")
        assert (g.n, g.m) == (5, 4)
        assert sorted(g.degrees()) == [1, 1, 2, 2, 2]
        assert diameter(g) == 4
        assert fam("path:1").m == 0

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_complete(self, n):
        g = fam(f"complete:{n}")
        assert (g.n, g.m) == (n, n * (n - 1) // 2)
        assert g.is_regular()

    def test_complete_bipartite(self):
        g = fam("complete_bipartite:2,4")
        assert (g.n, g.m) == (6, 8)
        assert sorted(g.degrees()) == [2, 2, 2, 2, 4, 4]
        assert is_bipartite(g) and diameter(g) == 2

    def test_circulant(self):
        assert isomorphic(fam("circulant:5,1,2"), fam("complete:5"))
        assert isomorphic(fam("circulant:6,1"), fam("cycle:6"))
        # The half-offset contributes one neighbor, not two.
        g = fam("circulant:8,1,4")
        assert g.is_regular() and g.max_degree() == 3

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_hypercube(self, d):
        g = fam(f"hypercube:{d}")
        assert g.n == 1 << d
        assert g.is_regular() and g.max_degree() == d
        assert is_bipartite(g) and diameter(g) == d

    def test_petersen(self):
        g = fam("petersen")
        assert (g.n, g.m) == (10, 15)
        assert g.is_regular() and g.max_degree() == 3
        assert diameter(g) == 2 and not is_bipartite(g)

    @pytest.mark.parametrize(
        "text",
        [
            "cycle:2",
            "path:0",
            "complete:0",
            "complete_bipartite:0,3",
            "circulant:6",
            "circulant:6,4",
            "circulant:2,1",
            "hypercube:0",
            "hypercube:17",
            "cycle:3,3",
            "petersen:5",
        ],
    )
    def test_parameter_validation(self, text):
        with pytest.raises(FamilyError):
            fam(text)


class TestRandomRegular:
    @pytest.mark.parametrize(
        "n, d, seed", [(8, 3, 1), (10, 3, 2), (9, 4, 3), (12, 5, 4), (2, 1, 5)]
    )
    def test_simple_regular_connected(self, n, d, seed):
        g = fam(f"random_regular:{n},{d};seed={seed}")
        assert g.n == n
        assert g.is_regular() and g.max_degree() == d
        assert is_connected(g)

    def test_deterministic(self):
        a = fam("random_regular:10,3;seed=7")
        b = fam("random_regular:10,3;seed=7")
        assert a.adj == b.adj

    @pytest.mark.parametrize(
        "text",
        [
            "random_regular:5,3;seed=1",  # odd degree sum
            "random_regular:4,4;seed=1",  # degree not below n
            "random_regular:6,1;seed=1",  # cannot be connected
            "random_regular:10,3",  # seed missing
        ],
    )
    def test_infeasible(self, text):
        with pytest.raises(FamilyError):
            fam(text)


class TestMaximalSubgraphs:
    def test_each_deletion_once(self):
        g = fam("cycle:6")
        pairs = maximal_subgraphs(g)
        assert [e for e, _ in pairs] == g.edges()
        for edge, h in pairs:
            assert h.m == g.m - 1
            assert not h.has_edge(*edge)
            assert isomorphic(h, fam("path:6"))

    def test_single_edge_graph(self):
        ((edge, h),) = maximal_subgraphs(fam("path:2"))
        assert edge == (0, 1) and h.m == 0

    def test_edgeless_rejected(self):
        with pytest.raises(GraphError):
            maximal_subgraphs(build_graph(3, []))


class TestIsomorphism:
    def test_relabeled_cycle(self):
        g = build_graph(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
        assert isomorphic(g, fam("cycle:5"))

    def test_same_degrees_different_structure(self):
        two_triangles = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert not isomorphic(two_triangles, fam("cycle:6"))
        assert not isomorphic(PRISM, fam("complete_bipartite:3,3"))

    def test_size_mismatch(self):
        assert not isomorphic(fam("path:3"), fam("path:4"))
        assert not isomorphic(fam("cycle:4"), fam("complete:4"))


class TestCubicEnumeration:
    def test_order4(self):
        (g,) = cubic_graphs(4)
        assert isomorphic(g, fam("complete:4"))

    def test_order6(self):
        graphs = cubic_graphs(6)
        assert len(graphs) == 2
        assert any(isomorphic(g, PRISM) for g in graphs)
        assert any(isomorphic(g, fam("complete_bipartite:3,3")) for g in graphs)

    def test_order8(self):
        graphs = cubic_graphs(8)
        assert len(graphs) == 5
        for g in graphs:
            assert g.is_regular() and g.max_degree() == 3 and is_connected(g)
        for i, g in enumerate(graphs):
            for h in graphs[i + 1:]:
                assert not isomorphic(g, h)

    @pytest.mark.parametrize("n", [3, 5, 2, 12])
    def test_unsupported_orders(self, n):
        with pytest.raises(FamilyError):
            cubic_graphs(n)

    def test_diameter2_candidates(self):
        candidates = diameter2_cubic_candidates()
        assert sorted(candidates) == [6, 8]
        assert [len(candidates[n]) for n in (6, 8)] == [2, 2]
        for graphs in candidates.values():
            for g in graphs:
                assert diameter(g) == 2
                assert g.is_regular() and g.max_degree() == 3
        # Both order-6 cubic classes have diameter 2; order 8 keeps 2 of 5.
        assert any(isomorphic(g, PRISM) for g in candidates[6])
