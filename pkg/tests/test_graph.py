import pytest

from tlkit import (
    EdgeListError,
    Graph,
    all_pairs_distances,
    components_after_removal,
    disk,
    generate_family,
    is_chordal,
    parse_graph,
)

from conftest import brute_is_chordal, small_corpus


class TestParse:
    def test_path3(self):
        g = parse_graph("0 1\n1 2")
        assert g.n == 3 and g.m == 2
        assert g.adj == ((1,), (0, 2), (1,))

    def test_disconnected_rejected(self):
        with pytest.raises(EdgeListError, match="disconnected"):
            parse_graph("0 1\n2 3")

    def test_remap_preserves_original_ids(self):
        g = parse_graph("5 7\n7 9\n9 5")
        assert g.n == 3 and g.m == 3
        assert g.original_ids == (5, 7, 9)

    def test_comments_and_blank_lines(self):
        g = parse_graph("# a triangle\n0 1\n\n1 2  # closing\n2 0\n")
        assert g.n == 3 and g.m == 3

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("0 0", "loop"),
            ("0 1\n1 0", "duplicate"),
            ("0 x", "non-integer"),
            ("", "empty graph"),
            ("0 1 2", "two integers"),
            ("-1 2", "nonnegative"),
        ],
    )
    def test_errors(self, text, fragment):
        with pytest.raises(EdgeListError, match=fragment):
            parse_graph(text)

    def test_error_carries_line_number(self):
        with pytest.raises(EdgeListError) as exc:
            parse_graph("0 1\n1 1")
        assert exc.value.line == 2

    def test_round_trip(self):
        g = generate_family("grid", p=3, q=3)
        again = parse_graph(g.to_edge_list_text())
        assert again.adj == g.adj


class TestDistances:
    def test_path_end_to_end(self, p5):
        d = all_pairs_distances(p5)
        assert d[0][4] == 4

    def test_cycle_values(self, c6):
        d = all_pairs_distances(c6)
        assert d[0][3] == 3 and d[1][5] == 2

    def test_bow_through_cut_vertex(self, bow):
        d = all_pairs_distances(bow)
        assert d[0][3] == 2

    @pytest.mark.parametrize("g", small_corpus())
    def test_matrix_invariants(self, g):
        d = all_pairs_distances(g)
        n = g.n
        for u in range(n):
            assert d[u][u] == 0
            for v in range(n):
                assert d[u][v] == d[v][u]
                assert (d[u][v] == 1) == (v in g.adj[u])
        for u in range(n):
            for v in range(n):
                for w in range(n):
                    assert d[u][w] <= d[u][v] + d[v][w]


class TestDisk:
    def test_cycle_neighbors(self, c6):
        d = all_pairs_distances(c6)
        assert disk(d, 0, 1) == [0, 1, 5]

    def test_radius_zero(self, c6):
        d = all_pairs_distances(c6)
        assert disk(d, 3, 0) == [3]

    def test_covers_everything(self, p5):
        d = all_pairs_distances(p5)
        assert disk(d, 2, 2) == [0, 1, 2, 3, 4]


class TestComponents:
    def test_cycle_arc(self, c6):
        assert components_after_removal(c6, [5, 0, 1]) == [[2, 3, 4]]

    def test_cycle_cut_by_antipodes(self, c6):
        assert components_after_removal(c6, [0, 3]) == [[1, 2], [4, 5]]

    def test_full_removal(self, c6):
        assert components_after_removal(c6, range(6)) == []

    @pytest.mark.parametrize("g", small_corpus())
    def test_parts_are_separated_and_connected(self, g):
        removed = [v for v in range(g.n) if v % 3 == 0]
        removed_set = set(removed)
        parts = components_after_removal(g, removed)
        seen = set()
        for part in parts:
            part_set = set(part)
            assert not (part_set & removed_set)
            assert not (part_set & seen)
            seen |= part_set
            # internally connected
            stack, comp = [part[0]], {part[0]}
            while stack:
                v = stack.pop()
                for u in g.adj[v]:
                    if u in part_set and u not in comp:
                        comp.add(u)
                        stack.append(u)
            assert comp == part_set
        for part in parts:
            for other in parts:
                if part is other:
                    continue
                assert not any(
                    u in set(other) for v in part for u in g.adj[v]
                )
        assert seen == set(range(g.n)) - removed_set


class TestChordal:
    def test_bow_is_chordal(self, bow):
        ok, order = is_chordal(bow)
        assert ok and sorted(order) == list(range(5))

    def test_c6_is_not(self, c6):
        assert is_chordal(c6) == (False, None)

    def test_trees_are_chordal(self):
        ok, _ = is_chordal(generate_family("random-tree", n=9, seed=4))
        assert ok

    @pytest.mark.parametrize("g", [g for g in small_corpus() if g.n <= 8])
    def test_agrees_with_chordless_cycle_search(self, g):
        assert is_chordal(g)[0] == brute_is_chordal(g)


class TestGraphValidation:
    def test_loop_rejected(self):
        with pytest.raises(ValueError, match="loop"):
            Graph(2, [(0, 0)])

    def test_duplicate_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph(2, [(0, 1), (1, 0)])

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError, match="disconnected"):
            Graph(4, [(0, 1), (2, 3)])

    def test_hash_is_stable(self, c6):
        assert c6.content_hash() == generate_family("cycle", n=6).content_hash()
