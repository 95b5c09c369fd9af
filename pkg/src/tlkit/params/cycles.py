"""Simple-cycle enumeration and the cycle-based parameters.

Three parameters live here. The cycle bridging constant is the least k
such that any cycle vertex whose two k-th cycle-neighbors sit at graph
distance exactly 2k can see, within k, some vertex of the opposite arc.
The non-locally-geodesic bridging constant asks every arc that realizes
a graph-geodesic stretch of mu+1 on a cycle to throw a short bridge to
the rest of the cycle. The geodesic-loaded-cycle maximum is the largest
number of cycle edges that can be marked without the marked arc counts
ever beating the true graph distance.

All three quantify over every simple cycle, so enumeration caps turn
"exact" into "lower" rather than erroring: a truncated enumeration can
only miss violations or better loads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..graph import Graph


@dataclass(frozen=True)
class CycleEnumeration:
    cycles: tuple[tuple[int, ...], ...]
    truncated: bool


@dataclass(frozen=True)
class LoadedCycle:
    cycle: tuple[int, ...]
    loaded: frozenset[tuple[int, int]]  # subset of the cycle's edges

    @classmethod
    def from_json_dict(cls, data: dict) -> "LoadedCycle":
        cycle = tuple(int(v) for v in data["cycle"])
        loaded = frozenset(
            (min(int(u), int(v)), max(int(u), int(v))) for u, v in data["loaded"]
        )
        return cls(cycle=cycle, loaded=loaded)

    def to_json_dict(self) -> dict:
        return {
            "cycle": list(self.cycle),
            "loaded": [list(e) for e in sorted(self.loaded)],
        }


def enumerate_simple_cycles(
    g: Graph, max_cycles: int = 1_000_000, max_len: int | None = None
) -> CycleEnumeration:
    """All simple cycles, each listed once, rooted at its smallest vertex.

    Backtracking over paths whose interior stays above the root, with the
    usual direction canon (second vertex smaller than last). ``truncated``
    turns on when the cycle budget runs out or when the length cap may
    have hidden longer cycles.
    """
    if max_cycles <= 0:
        raise ValueError("max_cycles must be positive")
    n = g.n
    cap_len = n if max_len is None else min(max_len, n)
    if cap_len < 3:
        cap_len = 3 if max_len is None else cap_len
    cycles: list[tuple[int, ...]] = []
    truncated = False
    adj = g.adj
    for root in range(n):
        if truncated:
            break
        path = [root]
        on_path = [False] * n
        on_path[root] = True
        # iterator stack for lexicographic DFS
        iters = [iter(adj[root])]
        while iters:
            if truncated:
                break
            it = iters[-1]
            advanced = False
            for u in it:
                if u == root:
                    if len(path) >= 3 and path[1] < path[-1]:
                        cycles.append(tuple(path))
                        if len(cycles) >= max_cycles:
                            truncated = True
                            break
                    continue
                if u < root or on_path[u]:
                    continue
                if len(path) >= cap_len:
                    truncated = True  # a longer cycle may exist out there
                    continue
                path.append(u)
                on_path[u] = True
                iters.append(iter(adj[u]))
                advanced = True
                break
            if not advanced:
                iters.pop()
                dropped = path.pop()
                if path:
                    on_path[dropped] = False
                else:
                    break
    return CycleEnumeration(cycles=tuple(cycles), truncated=truncated)


def _delta_hat(g: Graph, dist) -> int:
    from ..layering import cluster_metrics_all

    return cluster_metrics_all(g, dist).delta_max


def _cyclic_dist(i: int, j: int, length: int) -> int:
    gap = (i - j) % length
    return min(gap, length - gap)


def _cbc_holds(cycles, dist, k: int) -> bool:
    for cycle in cycles:
        length = len(cycle)
        if length < 2 * k + 1:
            continue
        for i, v in enumerate(cycle):
            x = cycle[(i - k) % length]
            y = cycle[(i + k) % length]
            if x == y or dist[x][y] != 2 * k:
                continue
            vrow = dist[v]
            bridged = False
            for j in range(length):
                if _cyclic_dist(i, j, length) > k and vrow[cycle[j]] <= k:
                    bridged = True
                    break
            if not bridged:
                return False
    return True


def cycle_bridging_constant(
    g: Graph,
    dist: Sequence[Sequence[int]],
    max_cycles: int = 1_000_000,
    max_len: int | None = None,
    enumeration: CycleEnumeration | None = None,
) -> tuple[int, str]:
    """(value, status): the least k with the bridging property everywhere.

    Scans k upward; the scan cannot pass ceil((max cluster diameter + 1)/2),
    so it always terminates. status is "exact" unless enumeration was
    truncated, in which case the value is only a lower bound.
    """
    enum = enumeration or enumerate_simple_cycles(g, max_cycles, max_len)
    status = "lower" if enum.truncated else "exact"
    if not enum.cycles:
        return 1, status
    cap = max(1, (_delta_hat(g, dist) + 2) // 2)
    for k in range(1, cap + 1):
        if _cbc_holds(enum.cycles, dist, k):
            return k, status
    raise RuntimeError("bridging scan exceeded its provable cap")  # pragma: no cover


def _bgc_holds(cycles, dist, mu: int) -> bool:
    bridge = (mu + 1) // 2
    for cycle in cycles:
        length = len(cycle)
        if length < 2 * (mu + 1):
            continue  # cyclic distance cannot reach mu + 1
        for i in range(length):
            j = (i + mu + 1) % length
            if _cyclic_dist(i, j, length) != mu + 1:
                continue
            if dist[cycle[i]][cycle[j]] != mu + 1:
                continue
            # the arc i..j of length mu + 1 realizes the stretch
            side = [(i + t) % length for t in range(mu + 2)]
            side_set = set(side)
            rest = [t for t in range(length) if t not in side_set]
            found = False
            for p in side:
                prow = dist[cycle[p]]
                for q in rest:
                    if (
                        prow[cycle[q]] <= bridge
                        and _cyclic_dist(p, q, length) > bridge
                    ):
                        found = True
                        break
                if found:
                    break
            if not found:
                return False
    return True


def bridging_geodesic_constant(
    g: Graph,
    dist: Sequence[Sequence[int]],
    max_cycles: int = 1_000_000,
    max_len: int | None = None,
    enumeration: CycleEnumeration | None = None,
) -> tuple[int, str]:
    """(value, status): least mu bridging every non-mu-locally-geodesic cycle.

    Every arc of a cycle realizing graph distance mu+1 must contain one
    end of a floor((mu+1)/2)-bridge to the remainder of the cycle. The
    scan is capped by (max cluster diameter) + 1, which always suffices.
    """
    enum = enumeration or enumerate_simple_cycles(g, max_cycles, max_len)
    status = "lower" if enum.truncated else "exact"
    if not enum.cycles:
        return 1, status
    cap = max(1, _delta_hat(g, dist) + 1)
    for mu in range(1, cap + 1):
        if _bgc_holds(enum.cycles, dist, mu):
            return mu, status
    raise RuntimeError("geodesic bridging scan exceeded its provable cap")  # pragma: no cover


def _validate_loaded_cycle(g: Graph, lc: LoadedCycle) -> list[tuple[int, int]]:
    cycle = lc.cycle
    length = len(cycle)
    if length < 3:
        raise ValueError("cycle must have at least three vertices")
    if len(set(cycle)) != length:
        raise ValueError("cycle vertices must be distinct")
    edges = []
    for i, v in enumerate(cycle):
        u = cycle[(i + 1) % length]
        if u not in g.adj[v]:
            raise ValueError(f"({v}, {u}) is not an edge of the graph")
        edges.append((min(u, v), max(u, v)))
    extra = lc.loaded - set(edges)
    if extra:
        raise ValueError(f"loaded edges {sorted(extra)} are not on the cycle")
    return edges


def loaded_cycle_geodesic(
    g: Graph, dist: Sequence[Sequence[int]], lc: LoadedCycle
) -> bool:
    """Is the loaded cycle geodesic: marked arc counts never beat d_G?"""
    edges = _validate_loaded_cycle(g, lc)
    length = len(lc.cycle)
    marked = [e in lc.loaded for e in edges]
    prefix = [0]
    for flag in marked:
        prefix.append(prefix[-1] + (1 if flag else 0))
    total = prefix[-1]
    for i in range(length):
        for j in range(i + 1, length):
            arc1 = prefix[j] - prefix[i]
            weight = min(arc1, total - arc1)
            if dist[lc.cycle[i]][lc.cycle[j]] < weight:
                return False
    return True


def _max_load_for_cycle(cycle, dist, floor: int) -> int:
    """Largest geodesic load on one cycle, or ``floor`` if unbeatable."""
    length = len(cycle)
    full = (1 << length) - 1
    pairs = []
    upper = length
    for i in range(length):
        irow = dist[cycle[i]]
        for j in range(i + 1, length):
            d = irow[cycle[j]]
            arc = 0
            for t in range(i, j):
                arc |= 1 << t
            span = j - i
            if d < min(span, length - span):
                pairs.append((d, arc, full ^ arc))
            upper = min(upper, d + max(span, length - span))
    if upper <= floor:
        return floor
    if not pairs:
        return length  # the cycle is geodesic; load everything

    def first_violation(fmask: int):
        for d, arc, other in pairs:
            a = (fmask & arc).bit_count()
            if a <= d:
                continue
            if (fmask & other).bit_count() > d:
                return fmask & (arc | other)
            # only one side exceeds; keep scanning
        return None

    best = floor
    seen: set[int] = set()
    stack = [full]
    while stack:
        fmask = stack.pop()
        if fmask in seen or fmask.bit_count() <= best:
            continue
        seen.add(fmask)
        bad = first_violation(fmask)
        if bad is None:
            best = fmask.bit_count()
            continue
        drop = bad & fmask
        while drop:
            low = drop & -drop
            drop ^= low
            stack.append(fmask ^ low)
    return best


def glc_oracle(
    g: Graph,
    dist: Sequence[Sequence[int]],
    max_cycles: int = 1_000_000,
    max_len: int | None = None,
    enumeration: CycleEnumeration | None = None,
) -> tuple[int, str]:
    """(max geodesic load, status); 0 on acyclic graphs.

    Branch-and-bound per cycle, pruned by the monotone structure
    (unmarking edges preserves geodesicity) and a per-cycle upper bound.
    """
    enum = enumeration or enumerate_simple_cycles(g, max_cycles, max_len)
    status = "lower" if enum.truncated else "exact"
    best = 0
    for cycle in sorted(enum.cycles, key=len, reverse=True):
        if len(cycle) <= best:
            break
        best = _max_load_for_cycle(cycle, dist, best)
    return best, status
