"""Rainbow-connectivity and noncompleteness checks.

Searches run over (vertex, used-color-set) states. A rainbow walk that
revisits a vertex can be shortcut into a rainbow path with fewer colors, so
the shortest rainbow walk between two vertices is always a path and its
length is the minimum rainbow-path length. A pair is *exceptional* when that
minimum equals K, i.e. every rainbow path between them uses all colors.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .edge_coloring import EdgeColoring
from .errors import NotRainbowConnected, UncoloredEdge, VertexOutOfRange
from .graph import Edge, Graph

INF = float("inf")


@dataclass(frozen=True)
class RainbowWitness:
    pair: tuple[int, int]
    path: tuple[int, ...]
    used_colors: frozenset[int]
    complete: bool

    @property
    def length(self) -> int:
        return max(len(self.path) - 1, 0)


@dataclass
class RainbowReport:
    rainbow_connected: bool
    noncomplete: bool
    color_count: int
    exceptional_pairs: list[tuple[int, int]] = field(default_factory=list)
    failing_pairs: list[tuple[int, int]] = field(default_factory=list)

    @property
    def K(self) -> int:
        return self.color_count

    def to_dict(self) -> dict:
        return {
            "rainbow_connected": self.rainbow_connected,
            "noncomplete": self.noncomplete,
            "K": self.color_count,
            "exceptional_pairs": [list(p) for p in self.exceptional_pairs],
            "failing_pairs": [list(p) for p in self.failing_pairs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _color_index(colors: Iterable[int]) -> dict[int, int]:
    return {c: i for i, c in enumerate(sorted(set(colors)))}


def _colored_adjacency(assignment, vertices) -> tuple[dict[int, list], dict[int, int]]:
    index = _color_index(assignment.values())
    adj: dict[int, list] = {v: [] for v in vertices}
    for (u, v), c in sorted(assignment.items()):
        bit = index[c]
        adj[u].append((v, bit))
        adj[v].append((u, bit))
    return adj, index


def _masks_without(k: int) -> list[int]:
    """Bitset over all 2^k color masks selecting those that lack color i."""
    out = []
    for i in range(k):
        bits = 0
        for mask in range(1 << k):
            if not mask >> i & 1:
                bits |= 1 << mask
        out.append(bits)
    return out


def min_rainbow_lengths(assignment, vertices, source: int) -> dict[int, float]:
    """Minimum rainbow-path length from ``source`` to every vertex (inf if none).

    Layered search where each vertex carries a bitset over color masks;
    layer d holds exactly the masks of popcount d.
    """
    adj, index = _colored_adjacency(assignment, vertices)
    return _min_lengths(adj, len(index), source, _masks_without(len(index)))


def _min_lengths(adj, k, source, without) -> dict[int, float]:
    best = {v: INF for v in adj}
    best[source] = 0
    frontier = {source: 1}  # mask 0 reached at source
    depth = 0
    while frontier and depth < k:
        depth += 1
        nxt: dict[int, int] = {}
        for v, bits in frontier.items():
            for w, c in adj[v]:
                moved = (bits & without[c]) << (1 << c)
                if moved:
                    nxt[w] = nxt.get(w, 0) | moved
        for w in nxt:
            if best[w] == INF:
                best[w] = depth
        frontier = nxt
    return best


def analyze(assignment, vertices: Iterable[int]) -> RainbowReport:
    """Full all-pairs report for a coloring of the graph on ``vertices``
    whose edges are exactly the keys of ``assignment``."""
    vertices = sorted(set(vertices))
    adj, index = _colored_adjacency(assignment, vertices)
    k = len(index)
    without = _masks_without(k)
    failing = []
    exceptional = []
    for u in vertices:
        lengths = _min_lengths(adj, k, u, without)
        for v in vertices:
            if v <= u:
                continue
            d = lengths[v]
            if d == INF:
                failing.append((u, v))
            elif d == k:
                exceptional.append((u, v))
    connected = not failing
    if not connected:
        return RainbowReport(False, False, k, [], failing)
    count: dict[int, int] = {}
    for u, v in exceptional:
        count[u] = count.get(u, 0) + 1
        count[v] = count.get(v, 0) + 1
    noncomplete = all(c <= 1 for c in count.values())
    return RainbowReport(True, noncomplete, k, exceptional, [])


def _check_covered(g: Graph, c: EdgeColoring):
    missing = [e for e in g.sorted_edges() if e not in c.assignment]
    if missing:
        raise UncoloredEdge(f"edge {missing[0]} has no color")


def _restrict(g: Graph, c: EdgeColoring) -> dict[Edge, int]:
    return {e: c.assignment[e] for e in g.edges}


def find_rainbow_path(g: Graph, c: EdgeColoring, u: int, v: int,
                      prefer_noncomplete: bool = True) -> Optional[RainbowWitness]:
    """A rainbow u-v path, or None.

    Breadth-first over (vertex, color set) states, so the first hit is a
    shortest rainbow path; that path is noncomplete whenever any is, which
    makes ``prefer_noncomplete`` hold automatically.
    """
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise VertexOutOfRange(f"pair ({u}, {v}) outside 0..{g.n - 1}")
    _check_covered(g, c)
    k = c.color_count
    if u == v:
        return RainbowWitness((u, v), (u,), frozenset(), k == 0)
    start = (u, frozenset())
    parent = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        x, used = state
        for w in g.adjacency[x]:
            col = c.color(x, w)
            if col in used:
                continue
            nxt = (w, used | {col})
            if nxt in parent:
                continue
            parent[nxt] = state
            if w == v:
                path = []
                s = nxt
                while s is not None:
                    path.append(s[0])
                    s = parent[s]
                path.reverse()
                return RainbowWitness((u, v), tuple(path), nxt[1], len(nxt[1]) == k)
            queue.append(nxt)
    return None


def validate_witness(g: Graph, c: EdgeColoring, w: RainbowWitness) -> bool:
    path = w.path
    if path[0] != w.pair[0] or path[-1] != w.pair[1]:
        return False
    if len(set(path)) != len(path):
        return False
    cols = []
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            return False
        cols.append(c.color(a, b))
    return len(set(cols)) == len(cols) and set(cols) == set(w.used_colors) and \
        w.complete == (len(cols) == c.color_count)


def is_rainbow_connected(g: Graph, c: EdgeColoring) -> RainbowReport:
    _check_covered(g, c)
    return analyze(_restrict(g, c), range(g.n))


def is_noncomplete(g: Graph, c: EdgeColoring) -> RainbowReport:
    report = is_rainbow_connected(g, c)
    if not report.rainbow_connected:
        raise NotRainbowConnected(f"pairs without rainbow path: {report.failing_pairs[:5]}")
    return report

