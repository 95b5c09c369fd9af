"""Layering partitions, layering trees, and canonical spanning trees.

A layering partition from a source s splits each BFS layer into clusters:
two vertices of layer i share a cluster exactly when some path avoiding
the disk of radius i-1 around s connects them. The quotient graph of the
clusters is always a tree; the per-source cluster diameter and radius of
the partition bound a large family of width-style graph parameters, and
attaching each cluster to one connector vertex in the previous layer
yields a spanning tree that approximates all distances additively.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph


@dataclass(frozen=True)
class LayeringPartition:
    source: int
    layer_of: tuple[int, ...]
    cluster_of: tuple[int, ...]
    # clusters[j] = (layer index, sorted member tuple); ids are assigned in
    # (layer, smallest member) lexicographic order for stable diffing
    clusters: tuple[tuple[int, tuple[int, ...]], ...]


@dataclass(frozen=True)
class LayeringTree:
    node_count: int
    edges: tuple[tuple[int, int], ...]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.node_count)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        for row in adj:
            row.sort()
        return adj


@dataclass(frozen=True)
class CanonicalTree:
    source: int
    parent: tuple[int | None, ...]

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v, p in enumerate(self.parent):
            if p is not None:
                out.append((min(v, p), max(v, p)))
        out.sort()
        return out

    def to_text(self) -> str:
        """Edge-list serialization with a leading root comment."""
        lines = [f"# root {self.source}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class LayeringMetrics:
    per_source: tuple[tuple[int, int], ...]  # (diameter, radius) for each s
    delta_min: int
    delta_max: int
    rho_min: int
    rho_max: int
    delta_min_source: int
    delta_max_source: int
    rho_min_source: int
    rho_max_source: int


def _find(parent: list[int], x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def layering_partition(g: Graph, dist: Sequence[Sequence[int]], s: int) -> LayeringPartition:
    """Partition each BFS layer from s into outside-connected clusters.

    Works top layer down with a union-find: once all vertices of layers
    >= i are merged along their edges, the groups inside layer i are
    exactly connectivity outside the radius-(i-1) disk, without ever
    materializing induced subgraphs.
    """
    n = g.n
    drow = dist[s]
    q = max(drow)
    layers: list[list[int]] = [[] for _ in range(q + 1)]
    for v in range(n):
        layers[drow[v]].append(v)
    parent = list(range(n))
    groups_per_layer: list[list[list[int]]] = [[] for _ in range(q + 1)]
    for i in range(q, -1, -1):
        for v in layers[i]:
            for u in g.adj[v]:
                if drow[u] >= i:
                    ru, rv = _find(parent, u), _find(parent, v)
                    if ru != rv:
                        parent[max(ru, rv)] = min(ru, rv)
        by_root: dict[int, list[int]] = {}
        for v in layers[i]:
            by_root.setdefault(_find(parent, v), []).append(v)
        groups_per_layer[i] = sorted(
            (sorted(members) for members in by_root.values()), key=lambda c: c[0]
        )
    clusters: list[tuple[int, tuple[int, ...]]] = []
    cluster_of = [0] * n
    for i in range(q + 1):
        for members in groups_per_layer[i]:
            cid = len(clusters)
            clusters.append((i, tuple(members)))
            for v in members:
                cluster_of[v] = cid
    return LayeringPartition(
        source=s,
        layer_of=tuple(drow),
        cluster_of=tuple(cluster_of),
        clusters=tuple(clusters),
    )


def layering_tree(g: Graph, lp: LayeringPartition) -> LayeringTree:
    """Quotient of G by the clusters; raises if it is not a tree."""
    edge_set: set[tuple[int, int]] = set()
    for u in range(g.n):
        cu = lp.cluster_of[u]
        for v in g.adj[u]:
            if u < v:
                cv = lp.cluster_of[v]
                if cu != cv:
                    edge_set.add((min(cu, cv), max(cu, cv)))
    count = len(lp.clusters)
    edges = tuple(sorted(edge_set))
    if len(edges) != count - 1 or not _connected(count, edges):
        raise RuntimeError(
            "layering quotient is not a tree; the partition is corrupt"
        )
    return LayeringTree(node_count=count, edges=edges)


def _connected(count: int, edges: Sequence[tuple[int, int]]) -> bool:
    if count == 0:
        return False
    adj: list[list[int]] = [[] for _ in range(count)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
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
    return reached == count


def cluster_metrics(
    g: Graph, dist: Sequence[Sequence[int]], lp: LayeringPartition
) -> tuple[int, int]:
    """(cluster diameter, cluster radius) of one layering partition.

    Diameter is the largest pairwise distance inside a cluster; radius is
    the smallest r such that every cluster fits in some radius-r disk,
    where the disk center may be any vertex of the graph.
    """
    diameter = 0
    radius = 0
    for _, members in lp.clusters:
        k = len(members)
        if k > 1:
            for idx in range(k):
                row = dist[members[idx]]
                for jdx in range(idx + 1, k):
                    d = row[members[jdx]]
                    if d > diameter:
                        diameter = d
        best_cover = 0 if k == 1 else None
        if best_cover is None:
            best_cover = min(
                max(dist[v][u] for u in members) for v in range(g.n)
            )
        if best_cover > radius:
            radius = best_cover
    return diameter, radius


def cluster_metrics_all(
    g: Graph,
    dist: Sequence[Sequence[int]],
    sources: Sequence[int] | None = None,
    threads: int = 1,
) -> LayeringMetrics:
    """Cluster diameter/radius for every source, with argmin/argmax.

    Sources may be restricted; ties between sources break toward the
    smaller vertex id, so results do not depend on thread scheduling.
    """
    pool = list(range(g.n)) if sources is None else sorted(set(sources))

    def one(s: int) -> tuple[int, int]:
        return cluster_metrics(g, dist, layering_partition(g, dist, s))

    if threads > 1 and len(pool) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            per = list(ex.map(one, pool))
    else:
        per = [one(s) for s in pool]
    deltas = [d for d, _ in per]
    rhos = [r for _, r in per]
    d_min = min(deltas)
    d_max = max(deltas)
    r_min = min(rhos)
    r_max = max(rhos)
    return LayeringMetrics(
        per_source=tuple(per),
        delta_min=d_min,
        delta_max=d_max,
        rho_min=r_min,
        rho_max=r_max,
        delta_min_source=pool[deltas.index(d_min)],
        delta_max_source=pool[deltas.index(d_max)],
        rho_min_source=pool[rhos.index(r_min)],
        rho_max_source=pool[rhos.index(r_max)],
    )


def canonical_tree(g: Graph, lp: LayeringPartition) -> CanonicalTree:
    """Spanning tree hanging every cluster below one connector vertex.

    For each non-root cluster C in layer i, the connector is the
    smallest-id vertex of layer i-1 with a neighbor in C, and every
    member of C gets that connector as its parent.
    """
    parent: list[int | None] = [None] * g.n
    layer_of = lp.layer_of
    for layer, members in lp.clusters:
        if layer == 0:
            continue
        connector = None
        for v in members:
            for u in g.adj[v]:
                if layer_of[u] == layer - 1 and (connector is None or u < connector):
                    connector = u
        if connector is None:  # unreachable on a connected graph
            raise RuntimeError("cluster with no neighbor in the previous layer")
        for v in members:
            parent[v] = connector
    return CanonicalTree(source=lp.source, parent=tuple(parent))


def tree_distances(n: int, edges: Sequence[tuple[int, int]]) -> list[list[int]]:
    """All-pairs distances of a tree given as an edge list."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    out = []
    for s in range(n):
        row = [-1] * n
        row[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            dv = row[v] + 1
            for u in adj[v]:
                if row[u] < 0:
                    row[u] = dv
                    queue.append(u)
        out.append(row)
    return out


def tree_additive_deviation(
    g: Graph, dist: Sequence[Sequence[int]], edges: Sequence[tuple[int, int]]
) -> tuple[int, int]:
    """Exact (max overshoot, max undershoot) of a spanning tree's metric.

    Overshoot is max(d_T - d_G) and undershoot is max(d_G - d_T) over all
    vertex pairs. The edge list must describe a spanning tree of G's
    vertex set; anything else raises ValueError.
    """
    n = g.n
    if len(edges) != n - 1:
        raise ValueError("not a spanning tree: wrong edge count")
    seen_v = {x for e in edges for x in e}
    if n > 1 and (seen_v != set(range(n))):
        raise ValueError("not a spanning tree: vertex set mismatch")
    tdist = tree_distances(n, edges)
    if any(d < 0 for row in tdist for d in row):
        raise ValueError("not a spanning tree: disconnected")
    max_over = 0
    max_under = 0
    for u in range(n):
        grow = dist[u]
        trow = tdist[u]
        for v in range(u + 1, n):
            diff = trow[v] - grow[v]
            if diff > max_over:
                max_over = diff
            elif -diff > max_under:
                max_under = -diff
    return max_over, max_under
