"""Graph container, metric primitives, and edge-list I/O.

Vertices are always the contiguous range 0..n-1. Graphs are simple
(no loops, no parallel edges), undirected, and connected; violating any
of these at construction time is an error, never a silent repair.
All distances are unweighted hop counts obtained by BFS.
"""

from __future__ import annotations

import hashlib
from typing import Iterable, Sequence


class EdgeListError(ValueError):
    """Malformed or unusable edge-list input.

    Carries the 1-based line number of the offending line when one exists.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class Graph:
    """Immutable simple connected undirected graph on vertices 0..n-1.

    ``adj`` is a tuple of sorted neighbor tuples, one per vertex, so the
    object is safe for concurrent reads and iteration order is always
    deterministic. ``original_ids`` preserves the pre-remap vertex labels
    of a parsed edge list (``original_ids[i]`` is the label that became
    vertex ``i``); it is None for programmatically built graphs.
    """

    __slots__ = ("n", "adj", "original_ids")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        original_ids: Sequence[int] | None = None,
    ):
        if n <= 0:
            raise ValueError("graph must have at least one vertex")
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            if v in neighbor_sets[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in neighbor_sets)
        if original_ids is not None and len(original_ids) != n:
            raise ValueError("original_ids must have one entry per vertex")
        self.original_ids = tuple(original_ids) if original_ids is not None else None
        if len(_bfs_row(self.adj, 0, n, stop_at_unreached=True)) != n:
            raise ValueError("graph is disconnected")

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def content_hash(self) -> str:
        """Stable 16-hex-digit fingerprint of the adjacency structure."""
        payload = f"{self.n}|" + ",".join(f"{u}-{v}" for u, v in self.edges())
        return hashlib.sha256(payload.encode("ascii")).hexdigest()[:16]

    def to_edge_list_text(self) -> str:
        """Serialize in the parseable edge-list format (one edge per line)."""
        return "".join(f"{u} {v}\n" for u, v in self.edges())

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


def _bfs_row(
    adj: Sequence[Sequence[int]], s: int, n: int, stop_at_unreached: bool = False
) -> list[int]:
    """Hop distances from s; -1 entries are trimmed when asked to."""
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
    if stop_at_unreached:
        return queue
    return row


def parse_graph(text: str) -> Graph:
    """Parse an edge list: one "u v" pair per line, ``#`` starts a comment.

    Vertex labels may be any nonnegative integers; they are remapped to
    0..n-1 in ascending label order and the mapping is retained on the
    returned graph. Loops, duplicate edges (in either orientation),
    non-integer tokens, empty input, and disconnected graphs are all
    reported as EdgeListError with the offending line number.
    """
    raw_edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if len(tokens) != 2:
            raise EdgeListError(
                f"expected two integers, got {len(tokens)} tokens", lineno
            )
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListError(f"non-integer token in {tokens!r}", lineno) from None
        if u < 0 or v < 0:
            raise EdgeListError("vertex labels must be nonnegative", lineno)
        if u == v:
            raise EdgeListError(f"loop edge at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(f"duplicate edge ({u}, {v})", lineno)
        seen.add(key)
        raw_edges.append((u, v))
    if not raw_edges:
        raise EdgeListError("empty graph: no edges found")
    labels = sorted({x for e in raw_edges for x in e})
    index = {label: i for i, label in enumerate(labels)}
    edges = [(index[u], index[v]) for u, v in raw_edges]
    try:
        return Graph(len(labels), edges, original_ids=labels)
    except ValueError as exc:
        raise EdgeListError(str(exc)) from None


def all_pairs_distances(g: Graph) -> list[list[int]]:
    """n x n matrix of BFS hop distances."""
    adj = g.adj
    n = g.n
    return [_bfs_row(adj, s, n) for s in range(n)]


def eccentricity(dist: Sequence[Sequence[int]], v: int) -> int:
    return max(dist[v])


def disk(dist: Sequence[Sequence[int]], v: int, r: int) -> list[int]:
    """Vertices within hop distance r of v, ascending."""
    row = dist[v]
    return [u for u in range(len(row)) if row[u] <= r]


def components_after_removal(g: Graph, removed: Iterable[int]) -> list[list[int]]:
    """Connected components of G minus a vertex set.

    Components are sorted vertex lists, ordered by their minimum vertex.
    Removing everything yields the empty partition.
    """
    gone = [False] * g.n
    for v in removed:
        gone[v] = True
    seen = [False] * g.n
    components: list[list[int]] = []
    for start in range(g.n):
        if gone[start] or seen[start]:
            continue
        comp = [start]
        seen[start] = True
        head = 0
        while head < len(comp):
            v = comp[head]
            head += 1
            for u in g.adj[v]:
                if not gone[u] and not seen[u]:
                    seen[u] = True
                    comp.append(u)
        comp.sort()
        components.append(comp)
    return components


def is_chordal(g: Graph) -> tuple[bool, list[int] | None]:
    """Chordality test via maximum cardinality search.

    Returns (True, order) where order is a perfect elimination ordering
    (first vertex to eliminate first), or (False, None). A graph is
    chordal exactly when the reversed MCS visit order is a perfect
    elimination ordering, which is verified directly.
    """
    n = g.n
    weight = [0] * n
    visited = [False] * n
    visit_order: list[int] = []
    for _ in range(n):
        best = -1
        best_w = -1
        for v in range(n):
            if not visited[v] and weight[v] > best_w:
                best, best_w = v, weight[v]
        visited[best] = True
        visit_order.append(best)
        for u in g.adj[best]:
            if not visited[u]:
                weight[u] += 1
    peo = list(reversed(visit_order))
    pos = [0] * n
    for i, v in enumerate(peo):
        pos[v] = i
    neighbor_sets = [set(a) for a in g.adj]
    for v in peo:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        first = min(later, key=lambda u: pos[u])
        for u in later:
            if u != first and u not in neighbor_sets[first]:
                return False, None
    return True, peo
