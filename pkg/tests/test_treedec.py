import pytest

from tlkit import (
    TreeDecomposition,
    all_pairs_distances,
    decomposition_from_ordering,
    decomposition_metrics,
    elimination_bag,
    expanded_cluster_decomposition,
    generate_family,
    is_chordal,
    tl_tb_oracle,
    validate_decomposition,
)
from tlkit.layering import cluster_metrics, layering_partition

from conftest import brute_tl_tb, small_corpus


class TestValidate:
    def test_path_decomposition_ok(self):
        g = generate_family("path", n=3)
        td = TreeDecomposition(bags=((0, 1), (1, 2)), tree=((0, 1),))
        assert validate_decomposition(g, td) is None

    def test_uncovered_edge(self):
        g = generate_family("path", n=3)
        td = TreeDecomposition(bags=((0, 1), (2,)), tree=((0, 1),))
        violation = validate_decomposition(g, td)
        assert violation.axiom == 2 and violation.witness == (1, 2)

    def test_broken_vertex_subtree(self, c6):
        td = TreeDecomposition(
            bags=((0, 1, 2), (2, 3, 4), (4, 5, 0)), tree=((0, 1), (1, 2))
        )
        violation = validate_decomposition(c6, td)
        assert violation.axiom == 3 and violation.witness == (0,)

    def test_missing_vertex(self, c6):
        td = TreeDecomposition(bags=((0, 1), (1, 2)), tree=((0, 1),))
        violation = validate_decomposition(c6, td)
        assert violation.axiom == 1

    def test_malformed_tree_raises(self, c6):
        td = TreeDecomposition(bags=((0, 1), (1, 2), (2, 3)), tree=((0, 1),))
        with pytest.raises(ValueError, match="not a tree"):
            validate_decomposition(c6, td)

    def test_json_round_trip(self, c6):
        d = all_pairs_distances(c6)
        td = expanded_cluster_decomposition(c6, d, 0)
        again = TreeDecomposition.from_json(td.to_json())
        assert again == td


class TestMetrics:
    def test_c6_star_decomposition(self, c6):
        d = all_pairs_distances(c6)
        td = TreeDecomposition(
            bags=((0, 1, 2), (0, 2, 4), (2, 3, 4), (0, 4, 5)),
            tree=((1, 0), (1, 2), (1, 3)),
        )
        assert validate_decomposition(c6, td) is None
        metrics = decomposition_metrics(c6, d, td)
        assert metrics.length == 2

    def test_single_bag_is_diameter(self, c6):
        d = all_pairs_distances(c6)
        td = TreeDecomposition(bags=(tuple(range(6)),), tree=())
        assert decomposition_metrics(c6, d, td).length == 3

    def test_tree_edge_bags(self):
        g = generate_family("path", n=4)
        d = all_pairs_distances(g)
        td = TreeDecomposition(
            bags=((0, 1), (1, 2), (2, 3)), tree=((0, 1), (1, 2))
        )
        metrics = decomposition_metrics(g, d, td)
        assert metrics.length == 1 and metrics.breadth == 1

    def test_inner_metrics_disconnected_bag(self, c6):
        d = all_pairs_distances(c6)
        td = TreeDecomposition(bags=((0, 3), (0, 1, 2, 3), (3, 4, 5, 0)), tree=((0, 1), (0, 2)))
        metrics = decomposition_metrics(c6, d, td)
        assert metrics.inner_length is None and metrics.inner_breadth is None

    @pytest.mark.parametrize("g", small_corpus())
    def test_breadth_length_sandwich(self, g):
        d = all_pairs_distances(g)
        td = expanded_cluster_decomposition(g, d, 0)
        metrics = decomposition_metrics(g, d, td)
        assert metrics.breadth <= metrics.length <= 2 * metrics.breadth


class TestExpandedClusters:
    def test_tree_bags_are_edges(self):
        g = generate_family("random-tree", n=8, seed=2)
        d = all_pairs_distances(g)
        td = expanded_cluster_decomposition(g, d, 0)
        assert validate_decomposition(g, td) is None
        assert decomposition_metrics(g, d, td).length == 1

    def test_c6_bags(self, c6):
        d = all_pairs_distances(c6)
        td = expanded_cluster_decomposition(c6, d, 0)
        assert td.bags == ((0,), (0, 1, 5), (1, 2, 4, 5), (2, 3, 4))
        assert validate_decomposition(c6, td) is None
        # bag {1,2,4,5} holds the antipodal-ish pair (1,4): length is 3,
        # still within three times the tree-length (2)
        assert decomposition_metrics(c6, d, td).length == 3

    @pytest.mark.parametrize("g", small_corpus())
    def test_valid_for_every_source(self, g):
        d = all_pairs_distances(g)
        for s in range(g.n):
            td = expanded_cluster_decomposition(g, d, s)
            assert validate_decomposition(g, td) is None

    @pytest.mark.parametrize("g", [g for g in small_corpus() if g.n <= 9])
    def test_three_approximation(self, g):
        d = all_pairs_distances(g)
        oracle = tl_tb_oracle(g, d)
        for s in range(g.n):
            metrics = decomposition_metrics(g, d, expanded_cluster_decomposition(g, d, s))
            assert metrics.length <= 3 * oracle.tl
            assert metrics.breadth <= 3 * oracle.tb

    def test_chordal_length_at_most_three(self):
        for seed in range(4):
            g = generate_family("random-chordal", n=14, seed=seed)
            d = all_pairs_distances(g)
            metrics = decomposition_metrics(g, d, expanded_cluster_decomposition(g, d, 0))
            assert metrics.length <= 3


class TestEliminationBag:
    def test_empty_set_gives_closed_neighborhood(self, c6):
        assert elimination_bag(c6, 0, []) == [0, 1, 5]

    def test_reach_through_eliminated(self, c6):
        assert elimination_bag(c6, 1, [0]) == [1, 2, 5]

    def test_path_through_middle(self, p5):
        assert elimination_bag(p5, 2, [1]) == [0, 2, 3]


class TestOracle:
    def test_trees(self):
        g = generate_family("random-tree", n=9, seed=9)
        d = all_pairs_distances(g)
        result = tl_tb_oracle(g, d)
        assert (result.tl, result.tb) == (1, 1)

    def test_c6(self, c6):
        d = all_pairs_distances(c6)
        result = tl_tb_oracle(c6, d)
        assert (result.tl, result.tb) == (2, 2)

    def test_c12(self, c12):
        d = all_pairs_distances(c12)
        assert tl_tb_oracle(c12, d).tl == 4

    def test_cap_skips(self, c12):
        d = all_pairs_distances(c12)
        result = tl_tb_oracle(c12, d, cap_n=10)
        assert result.status == "skipped" and result.tl is None

    def test_single_vertex(self):
        g = generate_family("path", n=1)
        d = all_pairs_distances(g)
        result = tl_tb_oracle(g, d)
        assert (result.tl, result.tb) == (0, 0)

    @pytest.mark.parametrize("g", [g for g in small_corpus() if 2 <= g.n <= 6])
    def test_matches_permutation_brute_force(self, g):
        d = all_pairs_distances(g)
        result = tl_tb_oracle(g, d)
        assert (result.tl, result.tb) == brute_tl_tb(g, d)

    @pytest.mark.parametrize("g", [g for g in small_corpus() if g.n >= 2])
    def test_tl_one_iff_chordal(self, g):
        d = all_pairs_distances(g)
        assert (tl_tb_oracle(g, d).tl == 1) == is_chordal(g)[0]

    @pytest.mark.parametrize("g", small_corpus())
    def test_sandwich_against_layering(self, g):
        d = all_pairs_distances(g)
        result = tl_tb_oracle(g, d)
        if result.status != "exact" or g.n < 2:
            return
        for s in range(g.n):
            diameter, radius = cluster_metrics(g, d, layering_partition(g, d, s))
            assert diameter / 3 <= result.tl <= diameter + 1
            assert radius / 3 <= result.tb <= radius + 1
            assert radius <= 2 * result.tl
        assert result.tb <= result.tl <= 2 * result.tb


class TestDecompositionFromOrdering:
    def test_tree_any_order_is_valid(self):
        # arbitrary orders stay valid; length 1 needs a leaf-first order
        # (eliminating a star center first bags vertices at distance 2)
        g = generate_family("random-tree", n=8, seed=1)
        d = all_pairs_distances(g)
        td = decomposition_from_ordering(g, list(range(8)))
        assert validate_decomposition(g, td) is None
        _, peo = is_chordal(g)
        td = decomposition_from_ordering(g, peo)
        assert validate_decomposition(g, td) is None
        assert decomposition_metrics(g, d, td).length == 1

    def test_witness_achieves_oracle_values(self, c6):
        d = all_pairs_distances(c6)
        result = tl_tb_oracle(c6, d)
        td = decomposition_from_ordering(c6, result.tl_order)
        assert validate_decomposition(c6, td) is None
        assert decomposition_metrics(c6, d, td).length == result.tl

    @pytest.mark.parametrize("g", [g for g in small_corpus() if g.n <= 9])
    def test_witnesses_on_corpus(self, g):
        d = all_pairs_distances(g)
        result = tl_tb_oracle(g, d)
        td_l = decomposition_from_ordering(g, result.tl_order)
        td_b = decomposition_from_ordering(g, result.tb_order)
        assert validate_decomposition(g, td_l) is None
        assert validate_decomposition(g, td_b) is None
        assert decomposition_metrics(g, d, td_l).length == result.tl
        assert decomposition_metrics(g, d, td_b).breadth == result.tb

    def test_chordal_peo_gives_length_one(self, bow):
        ok, peo = is_chordal(bow)
        assert ok
        d = all_pairs_distances(bow)
        td = decomposition_from_ordering(bow, peo)
        assert validate_decomposition(bow, td) is None
        assert decomposition_metrics(bow, d, td).length == 1

    def test_rejects_non_permutation(self, c6):
        with pytest.raises(ValueError):
            decomposition_from_ordering(c6, [0, 1, 2])
