"""Minimal-data model recognition: reconstruction, relations, invariants."""

import random

import pytest

from gkmkit import (
    Edge,
    FixedPoint,
    FixedPointData,
    Multigraph,
    Relation,
    chern_report,
    cpn,
    expected_chi_y,
    gkm_relations,
    petrie_verify,
    s6,
    simplex_realization,
    transform,
    triangle_identity,
)
from gkmkit.weights import apply_matrix, sub

from conftest import mutate_one_weight, random_relabel, random_unimodular, shuffled


class TestTriangleIdentity:
    def test_model_triple_holds(self):
        assert triangle_identity((1, 0), (0, 1), (-1, 1))

    @pytest.mark.parametrize("wij", [(1, 1), (1, -1), (-2, 2), (0, 3)])
    def test_other_triples_fail(self, wij):
        assert not triangle_identity((1, 0), (0, 1), wij)

    def test_parallel_arms_rejected(self):
        with pytest.raises(ValueError, match="parallel"):
            triangle_identity((1, 0), (-2, 0), (1, 1))

    def test_zero_third_weight_rejected(self):
        with pytest.raises(ValueError, match="zero"):
            triangle_identity((1, 0), (0, 1), (0, 0))

    def test_holds_exactly_at_difference(self, rng):
        for _ in range(40):
            a = (rng.randint(-5, 5), rng.randint(-5, 5))
            b = (rng.randint(-5, 5), rng.randint(-5, 5))
            if a[0] * b[1] - a[1] * b[0] == 0:
                continue
            c = sub(b, a)
            assert triangle_identity(a, b, c)
            delta = (rng.choice((-2, -1, 1, 2)), rng.randint(-2, 2))
            moved = (c[0] + delta[0], c[1] + delta[1])
            if moved != c and any(moved):
                assert not triangle_identity(a, b, moved)


class TestExpectedChiY:
    def test_all_ones(self):
        assert expected_chi_y(3).coeffs == (1, 1, 1, 1)
        assert expected_chi_y(0).coeffs == (1,)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            expected_chi_y(-1)


class TestVerifyOnModel:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_identity_model_matches(self, n):
        entry = cpn(n)
        report = petrie_verify(entry.data, entry.graph, up_to_gl=True)
        assert report.matched
        assert report.verdict == "match"
        assert report.base_point == "p0"
        expected_basis = tuple(
            tuple(1 if i == j else 0 for i in range(n)) for j in range(n))
        assert report.basis == expected_basis
        assert report.relabeling == {f"p{i}": i for i in range(n + 1)}
        assert report.simplex == ((0,) * n,) + expected_basis
        assert report.graph_consistent is True
        assert report.gl_normalized_equal is True

    def test_invariant_table(self):
        report = petrie_verify(cpn(2).data)
        inv = report.invariants
        assert inv["chi_y"] == (1, 1, 1)
        assert inv["euler"] == 3
        assert inv["todd"] == 1
        assert inv["signature"] == 1
        assert inv["chern"] == {(1, 1): 9, (2,): 3}
        assert inv["chi_y"] == expected_chi_y(2).coeffs

    def test_graph_defaults_to_unchecked(self):
        report = petrie_verify(cpn(2).data)
        assert report.graph_consistent is None
        assert report.gl_normalized_equal is None

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_transformed_relabeled_shuffled_roundtrip(self, n):
        rng = random.Random(900 + n)
        chars = [tuple(0 for _ in range(n))] + [
            tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
        for _ in range(5):
            rows = random_unimodular(rng, n)
            moved = transform(cpn(n).data, rows)
            renamed, mapping = random_relabel(rng, moved, prefix="q")
            scrambled = shuffled(rng, renamed)
            report = petrie_verify(scrambled, up_to_gl=True)
            assert report.matched
            assert report.gl_normalized_equal is True
            assert report.base_point == min(scrambled.ids())
            # the recovered basis is the transformed character differences
            # taken from whichever original point became the base
            back = {new: old for old, new in mapping.items()}
            m = int(back[report.base_point][1:])
            expect = sorted(
                apply_matrix(rows, sub(chars[j], chars[m]))
                for j in range(n + 1) if j != m)
            assert sorted(report.basis) == expect
            assert report.invariants["chi_y"] == (1,) * (n + 1)


class TestVerifyRejections:
    def test_unflagged_data(self):
        report = petrie_verify(s6().data)
        assert report.verdict == "precondition-failed"
        assert "flag" in report.witness

    def test_rank_dimension_mismatch(self):
        data = FixedPointData(2, 3, s6().data.points, torus_manifold=True)
        report = petrie_verify(data)
        assert report.verdict == "precondition-failed"
        assert "rank" in report.witness

    def test_non_basis_weights(self):
        pts = []
        for p in cpn(2).data.points:
            if p.id == "p2":
                ws = tuple((2, 0) if w == (1, -1) else w for w in p.weights)
                pts.append(FixedPoint(p.id, ws))
            else:
                pts.append(p)
        data = FixedPointData(2, 2, tuple(pts), torus_manifold=True)
        report = petrie_verify(data)
        assert report.verdict == "precondition-failed"
        assert "lattice basis" in report.witness

    def test_wrong_point_count(self):
        extra = cpn(2).data.points + (FixedPoint("p3", ((1, 0), (0, 1))),)
        data = FixedPointData(2, 2, extra, torus_manifold=True)
        report = petrie_verify(data)
        assert report.verdict == "precondition-failed"
        assert "fixed points" in report.witness

    def test_pattern_violation_is_no_match(self):
        pts = []
        for p in cpn(2).data.points:
            if p.id == "p2":
                pts.append(FixedPoint(p.id, ((0, -1), (1, -2))))
            else:
                pts.append(p)
        data = FixedPointData(2, 2, tuple(pts), torus_manifold=True)
        report = petrie_verify(data)
        assert report.verdict == "no-match"
        assert "p2" in report.witness

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_single_weight_mutants_never_match(self, n):
        rng = random.Random(7000 + n)
        for _ in range(25):
            rows = random_unimodular(rng, n)
            moved = transform(cpn(n).data, rows)
            mutant = mutate_one_weight(rng, moved)
            assert not petrie_verify(mutant).matched


class TestGraphConsistency:
    def test_model_graph_accepted(self):
        report = petrie_verify(cpn(3).data, cpn(3).graph)
        assert report.matched and report.graph_consistent is True

    def test_reversed_edge_accepted(self):
        entry = cpn(2)
        edges = list(entry.graph.edges)
        e = edges[0]
        edges[0] = Edge(e.to_id, e.from_id, tuple(-x for x in e.label))
        graph = Multigraph(entry.graph.vertex_ids, tuple(edges))
        report = petrie_verify(entry.data, graph)
        assert report.matched and report.graph_consistent is True

    def test_bad_label_rejected(self):
        entry = cpn(2)
        edges = list(entry.graph.edges)
        e = edges[0]
        edges[0] = Edge(e.from_id, e.to_id, (5, 7))
        graph = Multigraph(entry.graph.vertex_ids, tuple(edges))
        report = petrie_verify(entry.data, graph)
        assert report.verdict == "no-match"
        assert report.graph_consistent is False
        assert "label" in report.witness

    def test_missing_edge_rejected(self):
        entry = cpn(2)
        graph = Multigraph(entry.graph.vertex_ids, entry.graph.edges[:-1])
        report = petrie_verify(entry.data, graph)
        assert report.verdict == "no-match"
        assert "complete" in report.witness

    def test_duplicate_edge_rejected(self):
        entry = cpn(2)
        graph = Multigraph(entry.graph.vertex_ids,
                           entry.graph.edges + (entry.graph.edges[0],))
        report = petrie_verify(entry.data, graph)
        assert report.verdict == "no-match"
        assert "duplicate" in report.witness

    def test_self_loop_rejected(self):
        entry = cpn(2)
        edges = entry.graph.edges[:-1] + (Edge("p0", "p0", (1, 0)),)
        graph = Multigraph(entry.graph.vertex_ids, edges)
        report = petrie_verify(entry.data, graph)
        assert report.verdict == "no-match"
        assert "self-loop" in report.witness


class TestRelationsAndSimplex:
    def test_cp2_relations(self):
        report = petrie_verify(cpn(2).data)
        rels = gkm_relations(report)
        assert rels == (
            Relation("p0", "p1", (1, 0)),
            Relation("p0", "p2", (0, 1)),
            Relation("p1", "p2", (-1, 1)),
        )

    def test_relation_count(self):
        for n in (2, 3, 4):
            report = petrie_verify(cpn(n).data)
            assert len(gkm_relations(report)) == n * (n + 1) // 2

    def test_simplex_vertices(self):
        report = petrie_verify(cpn(2).data)
        assert simplex_realization(report) == ((0, 0), (1, 0), (0, 1))

    def test_requires_match(self):
        report = petrie_verify(s6().data)
        with pytest.raises(ValueError):
            gkm_relations(report)
        with pytest.raises(ValueError):
            simplex_realization(report)

    def test_chern_table_matches_direct_computation(self):
        report = petrie_verify(cpn(3).data)
        assert report.invariants["chern"] == chern_report(cpn(3).data).values

    def test_relations_cover_every_pair_once(self):
        rng = random.Random(31)
        renamed, _ = random_relabel(rng, cpn(3).data, prefix="m")
        report = petrie_verify(renamed)
        assert report.matched
        rels = gkm_relations(report)
        pairs = {frozenset((r.from_id, r.to_id)) for r in rels}
        assert len(pairs) == len(rels) == 6
        ids = set(renamed.ids())
        assert {x for pair in pairs for x in pair} == ids
        # a divisor is a weight at its tail and occurs negated at its head
        for r in rels:
            assert r.divisor in set(renamed.point(r.from_id).weights)
            assert tuple(-x for x in r.divisor) in set(renamed.point(r.to_id).weights)
