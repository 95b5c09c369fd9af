"""Shared disk-separation machinery.

A disk around a center "settles" a vertex pair once either endpoint is
swallowed by the disk or the endpoints fall into different components of
the remainder. The settling radius is monotone, so one upward sweep of
the radius per center resolves every pair at once.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ..graph import Graph


def components_labels(g: Graph, removed_flags: Sequence[bool]) -> list[int]:
    """Component id per vertex of G minus the flagged set (-1 if removed)."""
    labels = [-1] * g.n
    next_label = 0
    for start in range(g.n):
        if removed_flags[start] or labels[start] >= 0:
            continue
        labels[start] = next_label
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if not removed_flags[u] and labels[u] < 0:
                    labels[u] = next_label
                    stack.append(u)
        next_label += 1
    return labels


def min_separating_radii(
    g: Graph,
    dist: Sequence[Sequence[int]],
    center: int,
    pairs: Iterable[tuple[int, int]],
) -> dict[tuple[int, int], int]:
    """Least radius at which the disk around center settles each pair."""
    drow = dist[center]
    unresolved = set(pairs)
    result: dict[tuple[int, int], int] = {}
    ecc = max(drow)
    for r in range(ecc + 1):
        if not unresolved:
            break
        removed = [drow[v] <= r for v in range(g.n)]
        labels = components_labels(g, removed)
        for pair in list(unresolved):
            a, b = pair
            if drow[a] <= r or drow[b] <= r or labels[a] != labels[b]:
                result[pair] = r
                unresolved.discard(pair)
    return result
