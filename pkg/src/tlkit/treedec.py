"""Tree decompositions: validation, metrics, a linear-time 3-approximation,
and exact tree-length / tree-breadth oracles.

The oracles rest on the elimination-game view: eliminating the vertices
of G in some order creates one bag per step ({v} plus everything
reachable from v through already-eliminated vertices), these bags form a
valid tree decomposition of a chordal supergraph, and minimizing the
worst bag diameter (radius) over all orders yields exactly the
tree-length (tree-breadth). Because a step's bag depends only on the
*set* of vertices eliminated before it, the optimum is a min-max search
over subsets rather than over all n! orders.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[tuple[int, ...], ...]
    tree: tuple[tuple[int, int], ...]

    def to_json(self) -> str:
        return json.dumps(
            {"bags": [list(b) for b in self.bags], "tree": [list(e) for e in self.tree]},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "TreeDecomposition":
        data = json.loads(text)
        if not isinstance(data, dict) or "bags" not in data or "tree" not in data:
            raise ValueError("expected an object with 'bags' and 'tree'")
        bags = tuple(tuple(sorted(int(v) for v in bag)) for bag in data["bags"])
        tree = tuple(tuple(int(x) for x in e) for e in data["tree"])
        if any(len(e) != 2 for e in tree):
            raise ValueError("tree edges must be [i, j] pairs")
        return cls(bags=bags, tree=tree)


@dataclass(frozen=True)
class Violation:
    axiom: int  # 1 = vertex missing, 2 = edge uncovered, 3 = broken subtree
    witness: tuple
    message: str


@dataclass(frozen=True)
class DecompositionMetrics:
    length: int
    breadth: int
    inner_length: int | None  # None encodes infinity (a bag induces a
    inner_breadth: int | None  # disconnected subgraph)


def _bag_tree_adjacency(td: TreeDecomposition) -> list[list[int]]:
    count = len(td.bags)
    adj: list[list[int]] = [[] for _ in range(count)]
    for i, j in td.tree:
        if not (0 <= i < count and 0 <= j < count) or i == j:
            raise ValueError(f"malformed bag tree edge ({i}, {j})")
        adj[i].append(j)
        adj[j].append(i)
    return adj


def _check_is_tree(td: TreeDecomposition) -> list[list[int]]:
    adj = _bag_tree_adjacency(td)
    count = len(td.bags)
    if count == 0:
        raise ValueError("decomposition has no bags")
    if len(td.tree) != count - 1:
        raise ValueError("bag tree is not a tree: wrong edge count")
    seen = [False] * count
    stack = [0]
    seen[0] = True
    reached = 1
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                reached += 1
                stack.append(y)
    if reached != count:
        raise ValueError("bag tree is not a tree: disconnected")
    return adj


def validate_decomposition(g: Graph, td: TreeDecomposition) -> Violation | None:
    """First violated decomposition axiom, or None when valid.

    A malformed bag tree (cycle, disconnection, bad indices) raises
    ValueError instead: it is an input error, not an axiom violation.
    """
    adj = _check_is_tree(td)
    covered = [False] * g.n
    for bag in td.bags:
        for v in bag:
            if not (0 <= v < g.n):
                raise ValueError(f"bag vertex {v} out of range")
            covered[v] = True
    for v in range(g.n):
        if not covered[v]:
            return Violation(1, (v,), f"vertex {v} appears in no bag")
    bag_sets = [frozenset(b) for b in td.bags]
    for u in range(g.n):
        for v in g.adj[u]:
            if u < v and not any(u in b and v in b for b in bag_sets):
                return Violation(2, (u, v), f"edge ({u}, {v}) covered by no bag")
    for v in range(g.n):
        holding = [i for i, b in enumerate(bag_sets) if v in b]
        if len(holding) <= 1:
            continue
        member = set(holding)
        stack = [holding[0]]
        seen = {holding[0]}
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in member and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(holding):
            return Violation(3, (v,), f"bags containing vertex {v} are disconnected")
    return None


def _induced_distances(g: Graph, bag: Sequence[int]) -> dict[int, dict[int, int]]:
    inside = set(bag)
    out: dict[int, dict[int, int]] = {}
    for s in bag:
        row = {s: 0}
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for u in g.adj[v]:
                if u in inside and u not in row:
                    row[u] = row[v] + 1
                    queue.append(u)
        out[s] = row
    return out


def decomposition_metrics(
    g: Graph, dist: Sequence[Sequence[int]], td: TreeDecomposition
) -> DecompositionMetrics:
    """Length/breadth (distances in G) and their induced-subgraph variants.

    Breadth centers range over all of V; inner-breadth centers must lie in
    the bag with distances measured inside the induced subgraph. Inner
    values are None when some bag induces a disconnected subgraph.
    """
    length = 0
    breadth = 0
    inner_length: int | None = 0
    inner_breadth: int | None = 0
    for bag in td.bags:
        k = len(bag)
        for i in range(k):
            row = dist[bag[i]]
            for j in range(i + 1, k):
                d = row[bag[j]]
                if d > length:
                    length = d
        cover = 0 if k <= 1 else min(
            max(dist[v][u] for u in bag) for v in range(g.n)
        )
        if cover > breadth:
            breadth = cover
        if inner_length is None:
            continue
        ind = _induced_distances(g, bag)
        if any(len(ind[s]) != k for s in bag):
            inner_length = None
            inner_breadth = None
            continue
        bag_inner_len = max((d for s in bag for d in ind[s].values()), default=0)
        bag_inner_rad = 0 if k <= 1 else min(
            max(ind[s].values()) for s in bag
        )
        if bag_inner_len > inner_length:
            inner_length = bag_inner_len
        if inner_breadth is not None and bag_inner_rad > inner_breadth:
            inner_breadth = bag_inner_rad
    return DecompositionMetrics(length, breadth, inner_length, inner_breadth)


def expanded_cluster_decomposition(
    g: Graph, dist: Sequence[Sequence[int]], s: int
) -> TreeDecomposition:
    """Expand each layering cluster by its previous-layer neighbors.

    One bag per cluster of the layering partition from s, arranged along
    the layering tree. The result is always a valid decomposition whose
    length (breadth) is at most 3x the optimal tree-length (tree-breadth),
    which makes it a linear-time 3-approximation.
    """
    from .layering import layering_partition, layering_tree

    lp = layering_partition(g, dist, s)
    gamma = layering_tree(g, lp)
    layer_of = lp.layer_of
    bags = []
    for layer, members in lp.clusters:
        bag = set(members)
        if layer > 0:
            for v in members:
                for u in g.adj[v]:
                    if layer_of[u] == layer - 1:
                        bag.add(u)
        bags.append(tuple(sorted(bag)))
    return TreeDecomposition(bags=tuple(bags), tree=gamma.edges)


def elimination_bag(g: Graph, v: int, eliminated: Sequence[int]) -> list[int]:
    """{v} plus every vertex reachable from v through eliminated vertices.

    This is exactly the neighborhood v would have in the elimination game
    after the vertices of ``eliminated`` are gone, plus v itself.
    """
    inside = set(eliminated)
    if v in inside:
        raise ValueError("v must not be eliminated already")
    bag = {v}
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for u in g.adj[x]:
            if u in seen:
                continue
            seen.add(u)
            if u in inside:
                stack.append(u)
            else:
                bag.add(u)
    return sorted(bag)


@dataclass(frozen=True)
class OracleResult:
    status: str  # "exact" or "skipped"
    tl: int | None
    tb: int | None
    tl_order: tuple[int, ...] | None
    tb_order: tuple[int, ...] | None
    cap: int


def tl_tb_oracle(g: Graph, dist: Sequence[Sequence[int]], cap_n: int = 18) -> OracleResult:
    """Exact tree-length and tree-breadth with witness elimination orders.

    Min-max search over eliminated-vertex subsets with memoization;
    candidates at each state are tried cheapest-first so that branches
    whose immediate cost already matches the best known completion are
    pruned. Graphs above ``cap_n`` are skipped rather than attempted.
    """
    n = g.n
    if n > cap_n:
        return OracleResult("skipped", None, None, None, None, cap_n)
    if n == 1:
        return OracleResult("exact", 0, 0, (0,), (0,), cap_n)

    adj_mask = [0] * n
    for v in range(n):
        for u in g.adj[v]:
            adj_mask[v] |= 1 << u
    full = (1 << n) - 1
    cost_cache: dict[int, tuple[int, int]] = {}

    def bag_mask(v: int, smask: int) -> int:
        seen = 1 << v
        frontier = adj_mask[v] & ~seen
        reached = 0
        while frontier:
            seen |= frontier
            reached |= frontier & ~smask
            expand = frontier & smask
            nxt = 0
            while expand:
                low = expand & -expand
                nxt |= adj_mask[low.bit_length() - 1]
                expand ^= low
            frontier = nxt & ~seen
        return reached | (1 << v)

    def bag_costs(bmask: int) -> tuple[int, int]:
        cached = cost_cache.get(bmask)
        if cached is not None:
            return cached
        members = []
        m = bmask
        while m:
            low = m & -m
            members.append(low.bit_length() - 1)
            m ^= low
        diam = 0
        for i, u in enumerate(members):
            row = dist[u]
            for w in members[i + 1:]:
                d = row[w]
                if d > diam:
                    diam = d
        if len(members) == 1:
            rad = 0
        else:
            rad = min(max(dist[x][u] for u in members) for x in range(n))
        result = (diam, rad)
        cost_cache[bmask] = result
        return result

    def solve(which: int) -> dict[int, int]:
        memo: dict[int, int] = {full: 0}

        def f(smask: int) -> int:
            val = memo.get(smask)
            if val is not None:
                return val
            cands = []
            rem = full & ~smask
            m = rem
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                cands.append((bag_costs(bag_mask(v, smask))[which], v))
            cands.sort()
            best = n + 1  # costs never exceed the graph diameter < n
            for cost, v in cands:
                if cost >= best:
                    break
                sub = f(smask | (1 << v))
                step = sub if sub > cost else cost
                if step < best:
                    best = step
            memo[smask] = best
            return best

        f(0)
        return memo

    def reconstruct(memo: dict[int, int], which: int) -> tuple[int, ...]:
        budget = memo[0]
        order = []
        smask = 0

        def value(mask: int) -> int:
            got = memo.get(mask)
            if got is not None:
                return got
            # state pruned during search: evaluate it on demand
            best = n + 1
            rem = full & ~mask
            m = rem
            cands = []
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                cands.append((bag_costs(bag_mask(v, mask))[which], v))
            cands.sort()
            for cost, v in cands:
                if cost >= best:
                    break
                sub = value(mask | (1 << v))
                step = sub if sub > cost else cost
                if step < best:
                    best = step
            memo[mask] = best
            return best

        for _ in range(n):
            for v in range(n):
                bit = 1 << v
                if smask & bit:
                    continue
                cost = bag_costs(bag_mask(v, smask))[which]
                if cost <= budget and value(smask | bit) <= budget:
                    order.append(v)
                    smask |= bit
                    break
            else:  # pragma: no cover - guarded by the DP's correctness
                raise RuntimeError("witness reconstruction failed")
        return tuple(order)

    memo_tl = solve(0)
    memo_tb = solve(1)
    tl = max(1, memo_tl[0])
    tb = max(1, memo_tb[0])
    return OracleResult(
        "exact", tl, tb, reconstruct(memo_tl, 0), reconstruct(memo_tb, 1), cap_n
    )


def decomposition_from_ordering(g: Graph, order: Sequence[int]) -> TreeDecomposition:
    """Materialize the elimination bags of an ordering as a decomposition.

    Each bag links to the bag of the first-eliminated vertex of its
    remainder, which is the usual clique-tree construction for the
    chordal supergraph the ordering induces.
    """
    n = g.n
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the vertices")
    position = {v: i for i, v in enumerate(order)}
    bags = []
    eliminated: list[int] = []
    for v in order:
        bags.append(tuple(elimination_bag(g, v, eliminated)))
        eliminated.append(v)
    tree = []
    for i, v in enumerate(order):
        remainder = [u for u in bags[i] if u != v]
        if not remainder:
            continue
        target = min(remainder, key=lambda u: position[u])
        tree.append((i, position[target]))
    return TreeDecomposition(bags=tuple(bags), tree=tuple(tree))
