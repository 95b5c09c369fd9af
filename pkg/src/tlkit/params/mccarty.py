"""McCarty widths and balanced disk separators.

A disk is a balanced separator for a marked set X when no component of
the graph minus the disk keeps more than |X|/2 marked vertices. The
order-3 width asks for the least radius that settles every vertex
triple; order k generalizes to every k-subset. Balance comparisons are
done as 2*load <= |X| in integers; nothing here touches floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ..graph import Graph, components_after_removal
from ._separation import components_labels, min_separating_radii


@dataclass(frozen=True)
class SeparatorCertificate:
    center: int
    radius: int
    marked: tuple[int, ...]  # the set X the separator balances
    component_loads: tuple[int, ...]  # |component ∩ X| per component,
    # components ordered by their minimum vertex
    method: str = "exhaustive"

    def to_json_dict(self) -> dict:
        return {
            "center": self.center,
            "radius": self.radius,
            "set": list(self.marked),
            "component_loads": list(self.component_loads),
        }


def disk_separates_all_paths(
    g: Graph, dist: Sequence[Sequence[int]], c: int, r: int, a: int, b: int
) -> bool:
    """Does the radius-r disk at c intercept every a,b-path?

    Equivalent to: a or b lies inside the disk, or they fall into
    different components of the remainder. No path enumeration needed.
    """
    if a == b:
        raise ValueError("endpoints must be distinct")
    crow = dist[c]
    if crow[a] <= r or crow[b] <= r:
        return True
    removed = [crow[v] <= r for v in range(g.n)]
    labels = components_labels(g, removed)
    return labels[a] != labels[b]


def _component_loads(g: Graph, center: int, radius: int, marked: Sequence[int],
                     dist: Sequence[Sequence[int]]) -> tuple[int, ...]:
    crow = dist[center]
    removed = [v for v in range(g.n) if crow[v] <= radius]
    marked_set = set(marked)
    comps = components_after_removal(g, removed)
    return tuple(sum(1 for v in comp if v in marked_set) for comp in comps)


def _balanced_at(g: Graph, dist, center: int, radius: int, marked_set: set) -> bool:
    crow = dist[center]
    removed = [crow[v] <= radius for v in range(g.n)]
    labels = components_labels(g, removed)
    counts: dict[int, int] = {}
    k = len(marked_set)
    for v in marked_set:
        lab = labels[v]
        if lab < 0:
            continue
        counts[lab] = counts.get(lab, 0) + 1
        if 2 * counts[lab] > k:
            return False
    return True


def balanced_separator_for_set(
    g: Graph,
    dist: Sequence[Sequence[int]],
    marked: Sequence[int],
    method: str = "exhaustive",
    source: int = 0,
) -> SeparatorCertificate:
    """Balanced disk separator for the marked set X.

    ``layering``: weight the clusters of the layering partition from
    ``source`` by how much of X they hold, pick a weighted median node of
    the layering tree (ties: smallest cluster id), center the disk on the
    smallest vertex of that cluster and grow it until the cluster is
    covered. The radius never exceeds the partition's cluster diameter.

    ``exhaustive``: scan every center, growing the radius over the
    distinct distances from it, and return the overall minimum
    (ties: smaller radius, then smaller center id).
    """
    if not marked:
        raise ValueError("marked set must be nonempty")
    marked = tuple(sorted(set(marked)))
    for v in marked:
        if not (0 <= v < g.n):
            raise ValueError(f"marked vertex {v} out of range")
    if method == "layering":
        center, radius = _layering_separator(g, dist, marked, source)
    elif method == "exhaustive":
        center, radius = _exhaustive_separator(g, dist, marked)
    else:
        raise ValueError("method must be 'layering' or 'exhaustive'")
    loads = _component_loads(g, center, radius, marked, dist)
    return SeparatorCertificate(center, radius, marked, loads, method)


def _layering_separator(g, dist, marked, source) -> tuple[int, int]:
    from ..layering import layering_partition, layering_tree

    lp = layering_partition(g, dist, source)
    gamma = layering_tree(g, lp)
    marked_set = set(marked)
    weights = [sum(1 for v in members if v in marked_set) for _, members in lp.clusters]
    total = sum(weights)
    adj = gamma.adjacency()
    count = gamma.node_count
    median = None
    for node in range(count):
        # component weights of the tree minus this node
        heaviest = 0
        seen = [False] * count
        seen[node] = True
        for start in adj[node]:
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            weight = 0
            while stack:
                x = stack.pop()
                weight += weights[x]
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            heaviest = max(heaviest, weight)
        if 2 * heaviest <= total:
            median = node
            break  # node ids ascend, so the first hit is the smallest
    if median is None:  # cannot happen: every weighted tree has a median
        raise RuntimeError("no median node found in the layering tree")
    members = lp.clusters[median][1]
    center = members[0]
    radius = max(dist[center][v] for v in members)
    return center, radius


def _exhaustive_separator(g, dist, marked) -> tuple[int, int]:
    marked_set = set(marked)
    best: tuple[int, int] | None = None  # (radius, center)
    for center in range(g.n):
        if best is not None and best[0] == 0:
            break
        crow = dist[center]
        for r in sorted(set(crow)):
            if best is not None and r >= best[0]:
                break
            if _balanced_at(g, dist, center, r, marked_set):
                if best is None or (r, center) < best:
                    best = (r, center)
                break
    if best is None:
        # radius = eccentricity always balances (everything swallowed)
        raise RuntimeError("no balancing radius found")
    return best[1], best[0]


def recertify_separator(
    g: Graph, dist: Sequence[Sequence[int]], cert: SeparatorCertificate
) -> bool:
    """Recompute the certificate's loads from scratch and check balance."""
    loads = _component_loads(g, cert.center, cert.radius, cert.marked, dist)
    if loads != cert.component_loads:
        return False
    k = len(cert.marked)
    return all(2 * load <= k for load in loads)


def mccarty_width(
    g: Graph, dist: Sequence[Sequence[int]]
) -> tuple[int, tuple[int, int, int] | None]:
    """(width, witness triple): the worst triple's best settling radius.

    For every vertex triple, some disk of this radius leaves no component
    holding two of the three. Brute force over triples and centers, with
    per-center settling radii shared across all pairs.
    """
    n = g.n
    if n < 3:
        return 0, None
    all_pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    tables = []
    for x in range(n):
        radii = min_separating_radii(g, dist, x, all_pairs)
        flat = [0] * (n * n)
        for (a, b), r in radii.items():
            flat[a * n + b] = r
            flat[b * n + a] = r
        tables.append(flat)
    width = 0
    witness: tuple[int, int, int] | None = None
    for a, b, c in combinations(range(n), 3):
        ab, ac, bc = a * n + b, a * n + c, b * n + c
        best = None
        for x in range(n):
            t = tables[x]
            r = max(t[ab], t[ac], t[bc])
            if best is None or r < best:
                best = r
                if best == 0:
                    break
        if best > width:
            width = best
            witness = (a, b, c)
    return width, witness


def mccarty_width_k(
    g: Graph,
    dist: Sequence[Sequence[int]],
    k: int,
    subset_cap: int | None = 500_000,
) -> int | None:
    """Order-k width: worst k-subset's best balancing radius.

    Returns None (caller reports "skipped") when C(n, k) exceeds the cap.
    """
    n = g.n
    if not (3 <= k <= n):
        raise ValueError("k must satisfy 3 <= k <= n")
    if subset_cap is not None and math.comb(n, k) > subset_cap:
        return None
    width = 0
    for subset in combinations(range(n), k):
        cert_center, cert_radius = _exhaustive_separator(g, dist, subset)
        if cert_radius > width:
            width = cert_radius
    return width


def mcw_upper_from_separators(g: Graph, dist: Sequence[Sequence[int]]) -> int:
    """Certified upper bound for every McCarty width: the best cluster radius.

    Any k-subset admits a balanced disk separator of radius at most the
    cluster radius of any layering partition, so the minimum over sources
    upper-bounds mcw and every mcw_k.
    """
    from ..layering import cluster_metrics_all

    return cluster_metrics_all(g, dist).rho_min
