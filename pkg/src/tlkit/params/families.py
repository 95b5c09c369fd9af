"""Families of connected subgraphs: brambles, Helly families, paths.

A bramble is a family of connected subgraphs that pairwise touch
(intersect or are joined by an edge); a Helly family pairwise intersects.
The interception radius of a family is the smallest disk radius meeting
every member. Members are given as vertex sets; the "is a path" flag
asks whether the member carries a simple path through all its vertices,
which does not require the path to be induced.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ..graph import Graph


@dataclass(frozen=True)
class FamilyCheckResult:
    is_bramble: bool
    is_helly: bool
    all_paths: bool
    bramble_witness: tuple[int, int] | None  # first non-touching member pair
    helly_witness: tuple[int, int] | None  # first non-intersecting pair
    path_witness: int | None  # first member that is not a path


def _induced_connected(g: Graph, members: Sequence[int]) -> bool:
    inside = set(members)
    start = members[0]
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in g.adj[v]:
            if u in inside and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(inside)


def _touches(g: Graph, a: set, b: set) -> bool:
    if a & b:
        return True
    return any(u in b for v in a for u in g.adj[v])


def _has_spanning_path(g: Graph, members: Sequence[int]) -> bool:
    """Hamiltonian path inside the induced subgraph, by subset DP."""
    k = len(members)
    if k <= 2:
        return True  # connected members of size <= 2 are trivially paths
    index = {v: i for i, v in enumerate(members)}
    nbr_mask = [0] * k
    for v in members:
        for u in g.adj[v]:
            if u in index:
                nbr_mask[index[v]] |= 1 << index[u]
    full = (1 << k) - 1
    # reach[mask] = bitmask of possible path endpoints covering mask
    reach = [0] * (1 << k)
    for i in range(k):
        reach[1 << i] = 1 << i
    for mask in range(1, 1 << k):
        ends = reach[mask]
        if not ends:
            continue
        m = ends
        while m:
            low = m & -m
            i = low.bit_length() - 1
            m ^= low
            grow = nbr_mask[i] & ~mask
            while grow:
                lowg = grow & -grow
                reach[mask | lowg] |= lowg
                grow ^= lowg
    return reach[full] != 0


def family_check(g: Graph, members: Sequence[Sequence[int]]) -> FamilyCheckResult:
    """Classify a family of vertex sets; every member must induce a
    connected subgraph (anything else raises ValueError)."""
    if not members:
        raise ValueError("family must be nonempty")
    cleaned = []
    for idx, member in enumerate(members):
        ms = tuple(sorted(set(member)))
        if not ms:
            raise ValueError(f"member {idx} is empty")
        for v in ms:
            if not (0 <= v < g.n):
                raise ValueError(f"member {idx} has out-of-range vertex {v}")
        if not _induced_connected(g, ms):
            raise ValueError(f"member {idx} does not induce a connected subgraph")
        cleaned.append(ms)
    sets = [set(ms) for ms in cleaned]
    bramble_witness = None
    helly_witness = None
    for i, j in combinations(range(len(sets)), 2):
        if helly_witness is None and not (sets[i] & sets[j]):
            helly_witness = (i, j)
        if bramble_witness is None and not _touches(g, sets[i], sets[j]):
            bramble_witness = (i, j)
        if bramble_witness is not None and helly_witness is not None:
            break
    path_witness = None
    for idx, ms in enumerate(cleaned):
        if not _has_spanning_path(g, ms):
            path_witness = idx
            break
    return FamilyCheckResult(
        is_bramble=bramble_witness is None,
        is_helly=helly_witness is None,
        all_paths=path_witness is None,
        bramble_witness=bramble_witness,
        helly_witness=helly_witness,
        path_witness=path_witness,
    )


def interception_radius(
    g: Graph, dist: Sequence[Sequence[int]], members: Sequence[Sequence[int]]
) -> tuple[int, int]:
    """(center, radius): smallest disk meeting every member of the family.

    The center is the smallest-id vertex among the minimizers.
    """
    if not members:
        raise ValueError("family must be nonempty")
    cleaned = [tuple(sorted(set(m))) for m in members]
    best_center = 0
    best_radius = None
    for v in range(g.n):
        row = dist[v]
        worst = 0
        for member in cleaned:
            gap = min(row[u] for u in member)
            if gap > worst:
                worst = gap
        if best_radius is None or worst < best_radius:
            best_radius = worst
            best_center = v
    return best_center, best_radius
