import pytest

from tlkit import all_pairs_distances, generate_family, tl_tb_oracle
from tlkit.layering import cluster_metrics, cluster_metrics_all, layering_partition
from tlkit.params import (
    balanced_separator_for_set,
    bottleneck_constant,
    disk_separates_all_paths,
    mccarty_width,
    mccarty_width_k,
    mcw_upper_from_separators,
    recertify_separator,
)

from conftest import all_simple_paths, small_corpus


class TestBottleneck:
    def test_trees_are_zero(self):
        g = generate_family("random-tree", n=10, seed=8)
        d = all_pairs_distances(g)
        assert bottleneck_constant(g, d)[0] == 0
        assert bottleneck_constant(g, d, "all")[0] == 0

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_small_cycles_are_one(self, n):
        g = generate_family("cycle", n=n)
        d = all_pairs_distances(g)
        assert bottleneck_constant(g, d)[0] == 1

    def test_c12_is_three(self, c12):
        # antipodal pair at distance 6: the middle vertex's disk must grow
        # to radius 3 before it swallows an endpoint; nothing separates
        # earlier because removing one arc leaves a single path
        d = all_pairs_distances(c12)
        assert bottleneck_constant(c12, d)[0] == 3

    @pytest.mark.parametrize("g", small_corpus())
    def test_modes_agree(self, g):
        d = all_pairs_distances(g)
        assert bottleneck_constant(g, d)[0] == bottleneck_constant(g, d, "all")[0]

    @pytest.mark.parametrize("g", small_corpus())
    def test_cluster_diameter_bounds(self, g):
        d = all_pairs_distances(g)
        value, _ = bottleneck_constant(g, d)
        for diameter, _ in cluster_metrics_all(g, d).per_source:
            assert diameter - 2 <= 4 * value
            assert 2 * value <= 3 * diameter

    def test_rejects_unknown_mode(self, c6):
        d = all_pairs_distances(c6)
        with pytest.raises(ValueError):
            bottleneck_constant(c6, d, "middles")


class TestDiskSeparation:
    def test_small_disk_misses_far_path(self, c6):
        d = all_pairs_distances(c6)
        assert not disk_separates_all_paths(c6, d, 0, 1, 2, 4)

    def test_absorbing_disk(self, c6):
        d = all_pairs_distances(c6)
        assert disk_separates_all_paths(c6, d, 0, 2, 2, 4)

    def test_tree_cut_vertex(self, p5):
        d = all_pairs_distances(p5)
        assert disk_separates_all_paths(p5, d, 2, 0, 0, 4)

    @pytest.mark.parametrize("g", [g for g in small_corpus() if 3 <= g.n <= 7])
    def test_equals_path_enumeration(self, g):
        d = all_pairs_distances(g)
        import itertools

        for a, b in itertools.combinations(range(g.n), 2):
            paths = all_simple_paths(g, a, b)
            for c in range(g.n):
                for r in range(max(d[c]) + 1):
                    covered = set(v for v in range(g.n) if d[c][v] <= r)
                    expected = all(covered & set(p) for p in paths)
                    assert disk_separates_all_paths(g, d, c, r, a, b) == expected


class TestMcCartyWidth:
    def test_trees_are_zero(self):
        g = generate_family("random-tree", n=9, seed=13)
        d = all_pairs_distances(g)
        assert mccarty_width(g, d)[0] == 0

    def test_bow_is_one(self, bow):
        d = all_pairs_distances(bow)
        assert mccarty_width(bow, d)[0] == 1

    def test_c6_is_one(self, c6):
        d = all_pairs_distances(c6)
        assert mccarty_width(c6, d)[0] == 1

    @pytest.mark.parametrize("g", [g for g in small_corpus() if 3 <= g.n <= 7])
    def test_matches_definition_brute_force(self, g):
        import itertools

        d = all_pairs_distances(g)

        def settles(x, r, triple):
            return all(
                disk_separates_all_paths(g, d, x, r, a, b)
                for a, b in itertools.combinations(triple, 2)
            )

        worst = 0
        for triple in itertools.combinations(range(g.n), 3):
            best = min(
                next(r for r in range(g.n) if settles(x, r, triple))
                for x in range(g.n)
            )
            worst = max(worst, best)
        assert mccarty_width(g, d)[0] == worst

    @pytest.mark.parametrize("g", small_corpus())
    def test_rho_upper_bound(self, g):
        d = all_pairs_distances(g)
        assert mccarty_width(g, d)[0] <= mcw_upper_from_separators(g, d)

    @pytest.mark.parametrize("g", [g for g in small_corpus() if g.n <= 9])
    def test_tb_upper_bound(self, g):
        d = all_pairs_distances(g)
        assert mccarty_width(g, d)[0] <= tl_tb_oracle(g, d).tb


class TestMcCartyWidthK:
    def test_bow_order_four_drops_to_zero(self, bow):
        d = all_pairs_distances(bow)
        assert mccarty_width_k(bow, d, 4) == 0

    def test_block_triangles_parity_jump(self):
        g = generate_family("block-triangles", blocks=3)
        d = all_pairs_distances(g)
        assert mccarty_width_k(g, d, 4) == 0
        assert mccarty_width_k(g, d, 5) == 1

    def test_double_cycle_full_set(self):
        g = generate_family("double-cycle", p=2)
        d = all_pairs_distances(g)
        assert mccarty_width_k(g, d, g.n) == 0
        assert mccarty_width(g, d)[0] >= 2

    def test_even_no_worse_than_preceding_odd(self, bow):
        d = all_pairs_distances(bow)
        for k in (4,):
            assert mccarty_width_k(bow, d, k) <= mccarty_width_k(bow, d, k - 1)

    def test_cap_skips(self, c12):
        d = all_pairs_distances(c12)
        assert mccarty_width_k(c12, d, 6, subset_cap=10) is None

    def test_rejects_bad_k(self, c6):
        d = all_pairs_distances(c6)
        with pytest.raises(ValueError):
            mccarty_width_k(c6, d, 2)


class TestBalancedSeparators:
    def test_p5_layering_median(self, p5):
        d = all_pairs_distances(p5)
        cert = balanced_separator_for_set(p5, d, [0, 1, 2, 3, 4], "layering", source=0)
        assert cert.center == 2 and cert.radius == 0
        assert cert.component_loads == (2, 2)

    def test_c6_exhaustive(self, c6):
        d = all_pairs_distances(c6)
        cert = balanced_separator_for_set(c6, d, [0, 2, 4], "exhaustive")
        assert cert.radius == 1
        assert recertify_separator(c6, d, cert)

    def test_singleton_marked_set(self, c6):
        d = all_pairs_distances(c6)
        cert = balanced_separator_for_set(c6, d, [3], "exhaustive")
        assert cert.radius == 0 and cert.center == 3

    def test_empty_marked_set_rejected(self, c6):
        d = all_pairs_distances(c6)
        with pytest.raises(ValueError):
            balanced_separator_for_set(c6, d, [])

    @pytest.mark.parametrize("g", [g for g in small_corpus() if g.n >= 3])
    def test_layering_radius_within_cluster_diameter(self, g):
        d = all_pairs_distances(g)
        marked = [v for v in range(g.n) if v % 2 == 0]
        for s in range(g.n):
            cert = balanced_separator_for_set(g, d, marked, "layering", source=s)
            diameter, _ = cluster_metrics(g, d, layering_partition(g, d, s))
            assert cert.radius <= diameter
            assert recertify_separator(g, d, cert)

    @pytest.mark.parametrize("g", [g for g in small_corpus() if g.n >= 3 and g.n <= 9])
    def test_exhaustive_radius_within_tree_breadth(self, g):
        d = all_pairs_distances(g)
        tb = tl_tb_oracle(g, d).tb
        marked = list(range(g.n))
        cert = balanced_separator_for_set(g, d, marked, "exhaustive")
        assert cert.radius <= tb
        assert recertify_separator(g, d, cert)

    def test_certificate_json_shape(self, c6):
        d = all_pairs_distances(c6)
        cert = balanced_separator_for_set(c6, d, [0, 2, 4], "exhaustive")
        payload = cert.to_json_dict()
        assert set(payload) == {"center", "radius", "set", "component_loads"}
