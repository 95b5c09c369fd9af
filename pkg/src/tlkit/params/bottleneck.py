"""Bottleneck constants.

The bottleneck constant is the least r such that whenever w sits midway
on a shortest u,v-path, every u,v-path passes within distance r of w.
Two quantifications are supported: ``even-middles`` restricts w to exact
middle vertices of even-length shortest paths (maximized over every
shortest path of the pair), while ``all`` lets w be any vertex on any
shortest u,v-path. The two always agree, which the test suite checks.
"""

from __future__ import annotations

from typing import Sequence

from ..graph import Graph
from ._separation import min_separating_radii

MODES = ("even-middles", "all")


def _qualifying_pairs(
    dist: Sequence[Sequence[int]], w: int, n: int, mode: str
) -> list[tuple[int, int]]:
    pairs = []
    wrow = dist[w]
    for u in range(n):
        if u == w:
            continue
        durow = dist[u]
        du = wrow[u]
        for v in range(u + 1, n):
            if v == w:
                continue
            duv = durow[v]
            if mode == "even-middles":
                if duv % 2 == 0 and du == wrow[v] == duv // 2:
                    pairs.append((u, v))
            else:
                if du + wrow[v] == duv:
                    pairs.append((u, v))
    return pairs


def bottleneck_constant(
    g: Graph, dist: Sequence[Sequence[int]], mode: str = "even-middles"
) -> tuple[int, tuple[int, int, int] | None]:
    """(value, witness) where witness = (u, v, w) realizing the maximum.

    The value is the largest, over qualifying triples, of the least
    radius at which the disk around w settles the pair (u, v).
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    n = g.n
    best = 0
    witness: tuple[int, int, int] | None = None
    for w in range(n):
        pairs = _qualifying_pairs(dist, w, n, mode)
        if not pairs:
            continue
        radii = min_separating_radii(g, dist, w, pairs)
        for (u, v), r in sorted(radii.items()):
            if r > best:
                best = r
                witness = (u, v, w)
    return best, witness
