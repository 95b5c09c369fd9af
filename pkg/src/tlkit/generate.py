"""Deterministic graph generators.

Every randomized family draws from SplitMix64, a fixed 64-bit stream
generator chosen for the lifetime of this project (documented in the
README; changing it would silently change every seeded corpus). Draws
are consumed in one documented order per family, so a GeneratorSpec
always produces a bit-identical graph.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .graph import Graph

_MASK64 = (1 << 64) - 1

FAMILIES = (
    "path",
    "cycle",
    "grid",
    "random-connected",
    "random-chordal",
    "bow",
    "double-cycle",
    "block-triangles",
    "random-tree",
)


class SplitMix64:
    """SplitMix64 stream generator; integer-only, fixed constants."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), unbiased via rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class GeneratorSpec:
    """A reproducible graph recipe: family name, integer params, seed."""

    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def label(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.family}({inner};seed={self.seed})"


def prufer_to_edges(seq: list[int], n: int) -> list[tuple[int, int]]:
    """Decode a Pruefer sequence over 0..n-1 into tree edges."""
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    if len(seq) != n - 2:
        raise ValueError("sequence length must be n-2")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges


def _need(params: dict, key: str, minimum: int) -> int:
    if key not in params:
        raise ValueError(f"missing required parameter '{key}'")
    value = int(params[key])
    if value < minimum:
        raise ValueError(f"parameter '{key}'={value} must be >= {minimum}")
    return value


def _gen_path(params, rng):
    n = _need(params, "n", 1)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def _gen_cycle(params, rng):
    n = _need(params, "n", 3)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def _gen_grid(params, rng):
    p = _need(params, "p", 1)
    q = _need(params, "q", 1)
    edges = []
    for i in range(p):
        for j in range(q):
            v = i * q + j
            if j + 1 < q:
                edges.append((v, v + 1))
            if i + 1 < p:
                edges.append((v, v + q))
    return Graph(p * q, edges)


def _gen_bow(params, rng):
    # two triangles sharing vertex 2
    return Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def _gen_double_cycle(params, rng):
    # two cycles of length 6p sharing vertex 0; n = 12p - 1
    p = _need(params, "p", 1)
    k = 6 * p
    edges = [(i, (i + 1) % k) for i in range(k)]
    second = [0] + list(range(k, 2 * k - 1))
    for i in range(len(second)):
        a, b = second[i], second[(i + 1) % len(second)]
        edges.append((min(a, b), max(a, b)))
    return Graph(2 * k - 1, edges)


def _gen_block_triangles(params, rng):
    # chain of b triangles glued at articulation vertices 2i
    b = _need(params, "blocks", 1)
    edges = []
    for i in range(b):
        a = 2 * i
        edges.extend([(a, a + 1), (a, a + 2), (a + 1, a + 2)])
    return Graph(2 * b + 1, edges)


def _gen_random_tree(params, rng):
    n = _need(params, "n", 1)
    if n <= 2:
        return Graph(n, [(0, 1)] if n == 2 else [])
    seq = [rng.below(n) for _ in range(n - 2)]
    return Graph(n, prufer_to_edges(seq, n))


def _gen_random_connected(params, rng):
    """Uniform-ish G(n, m): shuffle all pairs, keep m, retry until connected."""
    n = _need(params, "n", 1)
    max_m = n * (n - 1) // 2
    m = _need(params, "m", 0) if n > 1 else 0
    if n > 1 and not (n - 1 <= m <= max_m):
        raise ValueError(f"edge count m={m} must be in [{n - 1}, {max_m}]")
    if n == 1:
        return Graph(1, [])
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    while True:
        rng.shuffle(pairs)
        try:
            return Graph(n, pairs[:m])
        except ValueError:
            continue  # disconnected sample; redraw from the same stream


def _gen_random_chordal(params, rng):
    """Incremental chordal construction with a known elimination ordering.

    Each new vertex is attached to a clique of the existing graph (grown
    greedily from a random anchor), so the reverse insertion order is a
    perfect elimination ordering. ``max_clique`` caps how many clique
    vertices a new vertex may attach to (default 3, keeping the cycle
    space small even at n = 40).
    """
    n = _need(params, "n", 1)
    cap = int(params.get("max_clique", 3))
    if cap < 1:
        raise ValueError("max_clique must be >= 1")
    neighbor_sets: list[set[int]] = [set() for _ in range(n)]
    edges = []
    for v in range(1, n):
        anchor = rng.below(v)
        clique = [anchor]
        want = 1 + rng.below(cap)
        candidates = [u for u in sorted(neighbor_sets[anchor]) if u < v]
        rng.shuffle(candidates)
        for u in candidates:
            if len(clique) >= want:
                break
            if all(u in neighbor_sets[w] for w in clique):
                clique.append(u)
        for u in clique:
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
            edges.append((u, v))
    return Graph(n, edges)


_BUILDERS = {
    "path": _gen_path,
    "cycle": _gen_cycle,
    "grid": _gen_grid,
    "random-connected": _gen_random_connected,
    "random-chordal": _gen_random_chordal,
    "bow": _gen_bow,
    "double-cycle": _gen_double_cycle,
    "block-triangles": _gen_block_triangles,
    "random-tree": _gen_random_tree,
}


def generate(spec: GeneratorSpec) -> Graph:
    """Build the graph a spec describes; same spec, same graph, always."""
    if spec.family not in _BUILDERS:
        raise ValueError(
            f"unknown family '{spec.family}'; known: {', '.join(FAMILIES)}"
        )
    rng = SplitMix64(spec.seed)
    return _BUILDERS[spec.family](spec.params, rng)


def generate_family(family: str, seed: int = 0, **params: int) -> Graph:
    return generate(GeneratorSpec(family, dict(params), seed))
