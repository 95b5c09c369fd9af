"""Shared fixtures and independent brute-force oracles.

The brute oracles deliberately re-derive everything from first
principles (path enumeration, per-layer BFS, permutation search) so the
library's optimized routines are checked against a different method,
not against themselves.
"""

from itertools import combinations, permutations

import pytest
from hypothesis import settings

from tlkit import Graph, all_pairs_distances, generate_family

settings.register_profile("suite", deadline=None, max_examples=40)
settings.load_profile("suite")


@pytest.fixture
def p5():
    return generate_family("path", n=5)


@pytest.fixture
def c6():
    return generate_family("cycle", n=6)


@pytest.fixture
def c12():
    return generate_family("cycle", n=12)


@pytest.fixture
def bow():
    return generate_family("bow")


@pytest.fixture
def k4_minus_edge():
    # a 2-connected graph whose best layering has unit cluster diameter
    return Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def small_corpus():
    """Deterministic mixed bag of small graphs for cross-cutting checks."""
    graphs = [
        generate_family("path", n=1),
        generate_family("path", n=2),
        generate_family("path", n=5),
        generate_family("cycle", n=4),
        generate_family("cycle", n=5),
        generate_family("cycle", n=6),
        generate_family("cycle", n=7),
        generate_family("bow"),
        generate_family("block-triangles", blocks=3),
        generate_family("grid", p=2, q=3),
        generate_family("random-tree", n=7, seed=1),
        generate_family("random-chordal", n=9, seed=2),
    ]
    for seed in range(3):
        graphs.append(generate_family("random-connected", n=7, m=9, seed=seed))
    return graphs


def brute_cluster_sets(g, dist, s):
    """Per-layer components of the induced 'outside the disk' subgraphs."""
    drow = dist[s]
    q = max(drow)
    clusters = []
    for i in range(q + 1):
        allowed = {v for v in range(g.n) if drow[v] >= i}
        layer = sorted(v for v in range(g.n) if drow[v] == i)
        seen = set()
        for start in layer:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for u in g.adj[v]:
                    if u in allowed and u not in comp:
                        comp.add(u)
                        stack.append(u)
            members = frozenset(v for v in comp if drow[v] == i)
            seen |= members
            clusters.append((i, members))
    return set(clusters)


def brute_is_chordal(g):
    """No vertex subset induces a plain cycle of length >= 4."""
    for k in range(4, g.n + 1):
        for subset in combinations(range(g.n), k):
            inside = set(subset)
            degs = [sum(1 for u in g.adj[v] if u in inside) for v in subset]
            if any(d != 2 for d in degs):
                continue
            comp = {subset[0]}
            stack = [subset[0]]
            while stack:
                v = stack.pop()
                for u in g.adj[v]:
                    if u in inside and u not in comp:
                        comp.add(u)
                        stack.append(u)
            if len(comp) == k:
                return False
    return True


def all_simple_paths(g, a, b):
    """Every simple a..b path, by DFS; fine for tiny graphs only."""
    paths = []
    stack = [(a, [a])]
    while stack:
        v, path = stack.pop()
        if v == b:
            paths.append(path)
            continue
        for u in g.adj[v]:
            if u not in path:
                stack.append((u, path + [u]))
    return paths


def brute_simple_cycles(g):
    """Canonical simple cycles via permutation search (tiny graphs)."""
    found = set()
    for k in range(3, g.n + 1):
        for subset in combinations(range(g.n), k):
            root = subset[0]
            for perm in permutations(subset[1:]):
                cycle = (root,) + perm
                if cycle[1] > cycle[-1]:
                    continue
                ok = all(
                    cycle[(i + 1) % k] in g.adj[cycle[i]] for i in range(k)
                )
                if ok:
                    found.add(cycle)
    return found


def brute_tl_tb(g, dist):
    """min-max elimination cost over every permutation (n <= 6)."""
    from tlkit.treedec import elimination_bag

    n = g.n
    if n == 1:
        return 0, 0
    best_tl = best_tb = None
    for perm in permutations(range(n)):
        worst_d = 0
        worst_r = 0
        gone = []
        for v in perm:
            bag = elimination_bag(g, v, gone)
            for i, u in enumerate(bag):
                for w in bag[i + 1:]:
                    worst_d = max(worst_d, dist[u][w])
            if len(bag) > 1:
                rad = min(max(dist[x][u] for u in bag) for x in range(n))
                worst_r = max(worst_r, rad)
            gone.append(v)
        best_tl = worst_d if best_tl is None else min(best_tl, worst_d)
        best_tb = worst_r if best_tb is None else min(best_tb, worst_r)
    return max(1, best_tl), max(1, best_tb)


def connected_graph_strategy():
    """Hypothesis strategy: deterministic seeded sparse connected graphs."""
    from hypothesis import strategies as st

    def build(draw):
        n = draw(st.integers(min_value=2, max_value=9))
        max_m = n * (n - 1) // 2
        m = draw(st.integers(min_value=n - 1, max_value=min(max_m, n + 4)))
        seed = draw(st.integers(min_value=0, max_value=2**32))
        return generate_family("random-connected", n=n, m=m, seed=seed)

    return st.composite(build)()
