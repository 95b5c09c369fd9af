"""Additive distortion of unweighted same-vertex-set tree embeddings.

The exact oracle enumerates every labeled tree on the vertex set via
Pruefer sequences and minimizes the worst additive error |d_G - d_T|;
that is n^(n-2) trees, so it is capped to small n. The upper bound
builds the canonical layering tree from every source and keeps the best
measured deviation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from ..generate import prufer_to_edges
from ..graph import Graph


@dataclass(frozen=True)
class AdtResult:
    status: str  # "exact" or "skipped"
    value: int | None
    tree_edges: tuple[tuple[int, int], ...] | None
    cap: int


def _deviation_capped(dist, edges, n: int, cutoff: int) -> int | None:
    """Max |d_G - d_T|, or None once it reaches the cutoff."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    worst = 0
    for s in range(n):
        seen = [False] * n
        seen[s] = True
        frontier = [(s, 0)]
        head = 0
        grow = dist[s]
        while head < len(frontier):
            v, dv = frontier[head]
            head += 1
            if v > s:
                diff = dv - grow[v]
                if diff < 0:
                    diff = -diff
                if diff > worst:
                    worst = diff
                    if worst >= cutoff:
                        return None
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    frontier.append((u, dv + 1))
    return worst


def adt_oracle(g: Graph, dist: Sequence[Sequence[int]], cap_n: int = 8) -> AdtResult:
    """Exact minimum additive distortion over all labeled spanning trees.

    Enumeration follows lexicographic Pruefer order and keeps the first
    optimum, so the witness tree is reproducible. Graphs larger than the
    cap are skipped.
    """
    n = g.n
    if n > cap_n:
        return AdtResult("skipped", None, None, cap_n)
    if n <= 2:
        edges = tuple((u, v) for u, v in g.edges())
        return AdtResult("exact", 0, edges, cap_n)
    lower = 0 if g.m == n - 1 else 1  # only a tree embeds a tree exactly
    best = None
    best_edges = None
    for seq in product(range(n), repeat=n - 2):
        edges = prufer_to_edges(list(seq), n)
        cutoff = best if best is not None else n + 1
        dev = _deviation_capped(dist, edges, n, cutoff)
        if dev is None:
            continue
        if best is None or dev < best:
            best = dev
            best_edges = tuple(edges)
            if best == lower:
                break
    return AdtResult("exact", best, best_edges, cap_n)


def adt_upper(
    g: Graph, dist: Sequence[Sequence[int]]
) -> tuple[int, tuple[tuple[int, int], ...], int]:
    """(deviation, tree edges, source): best canonical layering tree.

    The canonical tree from any source deviates by at most
    max(2, cluster diameter of that source), so this is a certified
    upper bound for the exact additive tree distortion.
    """
    from ..layering import canonical_tree, layering_partition, tree_additive_deviation

    best = None
    best_edges = None
    best_source = 0
    for s in range(g.n):
        lp = layering_partition(g, dist, s)
        tree = canonical_tree(g, lp)
        edges = tuple(tree.edges())
        over, under = tree_additive_deviation(g, dist, edges)
        dev = max(over, under)
        if best is None or dev < best:
            best = dev
            best_edges = edges
            best_source = s
    return best, best_edges, best_source
