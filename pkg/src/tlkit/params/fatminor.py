"""Fat triangle minors: constructive witnesses and their verifier.

A K-fat triangle minor is three connected subgraphs joined pairwise by
three paths, every pair of branch sets, every path and the opposite
branch set, and every pair of paths staying at distance at least K. The
constructor follows the layering recipe: whenever some cluster has
diameter at least 5K, the two far cluster vertices, the source disk, and
the outside path connecting them yield a verifiable witness.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from ..graph import Graph, disk
from ..layering import layering_partition


@dataclass(frozen=True)
class FatMinorWitness:
    h1: tuple[int, ...]
    h2: tuple[int, ...]
    h3: tuple[int, ...]
    p12: tuple[int, ...]
    p23: tuple[int, ...]
    p13: tuple[int, ...]
    k: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "h1": list(self.h1),
                "h2": list(self.h2),
                "h3": list(self.h3),
                "p12": list(self.p12),
                "p23": list(self.p23),
                "p13": list(self.p13),
                "k": self.k,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "FatMinorWitness":
        data = json.loads(text)
        return cls(
            h1=tuple(data["h1"]),
            h2=tuple(data["h2"]),
            h3=tuple(data["h3"]),
            p12=tuple(data["p12"]),
            p23=tuple(data["p23"]),
            p13=tuple(data["p13"]),
            k=int(data["k"]),
        )


@dataclass(frozen=True)
class FatMinorViolation:
    constraint: str  # e.g. "d(h1,h3)" or "endpoints(p12)"
    pair: tuple[int, int] | None
    message: str


def _bfs_parent_path(g: Graph, dist, s: int, target: int) -> list[int]:
    """Shortest path target..s along smallest-id BFS parents."""
    srow = dist[s]
    path = [target]
    v = target
    while v != s:
        v = min(u for u in g.adj[v] if srow[u] == srow[v] - 1)
        path.append(v)
    return path


def _outside_path(g: Graph, dist, s: int, level: int, x: int, y: int) -> list[int]:
    """Shortest x..y path through vertices at distance >= level from s."""
    srow = dist[s]
    allowed = [srow[v] >= level for v in range(g.n)]
    prev = [-1] * g.n
    prev[x] = x
    queue = [x]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        if v == y:
            break
        for u in g.adj[v]:
            if allowed[u] and prev[u] < 0:
                prev[u] = v
                queue.append(u)
    if prev[y] < 0:  # unreachable: x and y share a cluster
        raise RuntimeError("cluster vertices not connected outside the disk")
    path = [y]
    while path[-1] != x:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def fat_minor_construct(
    g: Graph, dist: Sequence[Sequence[int]], s: int, k: int
) -> FatMinorWitness:
    """Build a K-fat triangle witness from a big cluster; K = ``k``.

    Requires the layering partition from s to contain a cluster of
    diameter at least 5k (ValueError otherwise; smaller diameters say
    nothing about fat minors either way). Determinism: the realizing
    cluster with the smallest id wins, then the lexicographically
    smallest far pair; shortest paths break ties toward smaller ids.
    """
    if k < 1:
        raise ValueError("fatness level must be at least 1")
    lp = layering_partition(g, dist, s)
    best = None  # (cluster id, x, y) with maximal distance
    best_d = -1
    for cid, (_, members) in enumerate(lp.clusters):
        for i, u in enumerate(members):
            row = dist[u]
            for v in members[i + 1:]:
                if row[v] > best_d:
                    best_d = row[v]
                    best = (cid, u, v)
    if best_d < 5 * k:
        raise ValueError(
            f"precondition unmet: largest cluster diameter {best_d} < 5k = {5 * k}"
        )
    _, x, y = best
    level = dist[s][x]
    path_q = _outside_path(g, dist, s, level, x, y)
    path_sx = _bfs_parent_path(g, dist, s, x)  # runs x .. s
    path_sy = _bfs_parent_path(g, dist, s, y)
    h1 = tuple(disk(dist, x, k))
    h2 = tuple(disk(dist, y, k))
    h3 = tuple(disk(dist, s, level - 2 * k))
    p13 = tuple(path_sx[k : 2 * k + 1])  # from distance k to 2k along the path
    p23 = tuple(path_sy[k : 2 * k + 1])
    xrow = dist[x]
    yrow = dist[y]
    idx_x = max(i for i, v in enumerate(path_q) if xrow[v] <= k)
    idx_y = min(i for i, v in enumerate(path_q) if yrow[v] <= k)
    if idx_x >= idx_y:  # impossible when the cluster diameter is >= 5k
        raise RuntimeError("outside path collapsed; construction invariant broken")
    p12 = tuple(path_q[idx_x : idx_y + 1])
    return FatMinorWitness(h1=h1, h2=h2, h3=h3, p12=p12, p23=p23, p13=p13, k=k)


def _set_distance(dist, a: Sequence[int], b: Sequence[int]) -> tuple[int, tuple[int, int]]:
    best = None
    pair = (a[0], b[0])
    for u in a:
        row = dist[u]
        for v in b:
            if best is None or row[v] < best:
                best = row[v]
                pair = (u, v)
    return best, pair


def _check_path(g: Graph, path: Sequence[int], name: str) -> None:
    if not path:
        raise ValueError(f"{name} is empty")
    if len(set(path)) != len(path):
        raise ValueError(f"{name} repeats a vertex")
    for a, b in zip(path, path[1:]):
        if b not in g.adj[a]:
            raise ValueError(f"{name} uses the non-edge ({a}, {b})")


def fat_minor_verify(
    g: Graph, dist: Sequence[Sequence[int]], w: FatMinorWitness, k: int
) -> FatMinorViolation | None:
    """First violated fatness constraint at level k, or None when K-fat.

    Structural defects (disconnected branch set, broken path, endpoint
    multiplicity) raise ValueError; distance shortfalls come back as
    violations naming the realizing vertex pair.
    """
    from .families import _induced_connected

    subgraphs = {"h1": w.h1, "h2": w.h2, "h3": w.h3}
    for name, members in subgraphs.items():
        if not members:
            raise ValueError(f"{name} is empty")
        if not _induced_connected(g, members):
            raise ValueError(f"{name} does not induce a connected subgraph")
    paths = {"p12": w.p12, "p23": w.p23, "p13": w.p13}
    for name, path in paths.items():
        _check_path(g, path, name)
    endpoint_rules = {
        "p12": ("h1", "h2"),
        "p23": ("h2", "h3"),
        "p13": ("h1", "h3"),
    }
    for pname, (first, second) in endpoint_rules.items():
        path = paths[pname]
        for hname, endpoint in ((first, path[0]), (second, path[-1])):
            hits = set(path) & set(subgraphs[hname])
            if hits != {endpoint}:
                raise ValueError(
                    f"{pname} must meet {hname} exactly at its endpoint; "
                    f"intersection is {sorted(hits)}"
                )
    checks: list[tuple[str, Sequence[int], Sequence[int]]] = [
        ("d(h1,h2)", w.h1, w.h2),
        ("d(h1,h3)", w.h1, w.h3),
        ("d(h2,h3)", w.h2, w.h3),
        ("d(p12,h3)", w.p12, w.h3),
        ("d(p23,h1)", w.p23, w.h1),
        ("d(p13,h2)", w.p13, w.h2),
        ("d(p12,p23)", w.p12, w.p23),
        ("d(p12,p13)", w.p12, w.p13),
        ("d(p23,p13)", w.p23, w.p13),
    ]
    for name, a, b in checks:
        value, pair = _set_distance(dist, a, b)
        if value < k:
            return FatMinorViolation(
                constraint=name,
                pair=pair,
                message=f"{name} = {value} < {k} at pair {pair}",
            )
    return None
