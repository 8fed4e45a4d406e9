"""Simple undirected graphs on dense vertex ids, edge-list I/O and basic
structural predicates (2-connectivity, even cycles)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import (
    DuplicateEdge,
    LoopEdge,
    MalformedEdge,
    MalformedHeader,
    NoEvenCycle,
    NotTwoConnected,
    VertexOutOfRange,
)

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with vertices ``0..n-1``.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``; ``adjacency``
    is derived and always sorted.
    """

    n: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        out = set()
        for u, v in edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            key = edge_key(u, v)
            if key[0] < 0 or key[1] >= n:
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if key in out:
                raise DuplicateEdge(f"edge {key} listed twice")
            out.add(key)
        return cls(n, frozenset(out))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.n, self.edges | {edge_key(u, v) for u, v in extra})

    def to_edge_list(self) -> str:
        return serialize_edge_list(self)

    def __str__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class Cycle:
    """Vertex sequence of a cycle; the closing edge last -> first is implied."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"repeated vertex in cycle {self.vertices}")

    def __len__(self):
        return len(self.vertices)

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [edge_key(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def is_valid_in(self, g: Graph) -> bool:
        return all(g.has_edge(u, v) for u, v in self.edges())

    def normalized(self) -> "Cycle":
        return Cycle(normalize_cycle(self.vertices))


def normalize_cycle(vertices) -> tuple[int, ...]:
    """Rotate to start at the least vertex and orient toward the smaller neighbor."""
    vs = list(vertices)
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    if vs[-1] < vs[1]:
        vs = [vs[0]] + vs[:0:-1]
    return tuple(vs)


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header plus ``m`` lines of ``u v`` (``u < v``).

    Lines starting with ``#`` and blank lines are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MalformedHeader("empty input")
    header = lines[0].split()
    if len(header) != 2 or not all(_is_int(tok) for tok in header):
        raise MalformedHeader(f"expected 'n m', got {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    if n < 0 or m < 0:
        raise MalformedHeader(f"negative count in header {lines[0]!r}")
    body = lines[1:]
    if len(body) != m:
        raise MalformedHeader(f"header announces {m} edges, found {len(body)}")
    seen: set[Edge] = set()
    for ln in body:
        toks = ln.split()
        if len(toks) != 2 or not all(_is_int(tok) for tok in toks):
            raise MalformedEdge(f"bad edge line {ln!r}")
        u, v = int(toks[0]), int(toks[1])
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        key = edge_key(u, v)
        if key in seen:
            raise DuplicateEdge(f"edge {key} listed twice")
        seen.add(key)
    return Graph(n, frozenset(seen))


def _is_int(tok: str) -> bool:
    return tok.lstrip("-").isdigit()


def serialize_edge_list(g: Graph) -> str:
    rows = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(rows) + "\n"


def is_connected(g: Graph, removed: Iterable[int] = ()) -> bool:
    removed = set(removed)
    alive = [v for v in range(g.n) if v not in removed]
    if not alive:
        return True
    seen = {alive[0]}
    queue = deque([alive[0]])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in seen and w not in removed:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(alive)


def is_two_connected(g: Graph) -> bool:
    """Connected, at least 3 vertices and no cut vertex (lowpoint DFS)."""
    if g.n < 3:
        return False
    disc = [-1] * g.n
    low = [0] * g.n
    disc[0] = 0
    counter = 1
    root_children = 0
    # iterative DFS: (vertex, parent, neighbor cursor)
    stack = [(0, -1, iter(g.adjacency[0]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                disc[w] = low[w] = counter
                counter += 1
                if v == 0:
                    root_children += 1
                stack.append((w, v, iter(g.adjacency[w])))
                advanced = True
                break
            if w != parent:
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if parent != 0 and low[v] >= disc[parent]:
                return False
    if counter != g.n:
        return False
    return root_children == 1


def is_k_connected(g: Graph, k: int) -> bool:
    """Brute-force vertex connectivity test: more than k vertices and no
    separating set of size below k."""
    from itertools import combinations

    if k <= 0:
        return True
    if g.n <= k:
        return False
    for size in range(k):
        for cut in combinations(range(g.n), size):
            if not is_connected(g, cut):
                return False
    return True


def shortest_path(g: Graph, src: int, dst: int, allowed: Optional[set[int]] = None,
                  banned_edge: Optional[Edge] = None) -> Optional[list[int]]:
    """Lexicographically least shortest ``src``-``dst`` path.

    ``allowed`` restricts intermediate vertices; endpoints are always allowed.
    """
    def ok(v):
        return allowed is None or v in allowed or v == src or v == dst

    dist = {dst: 0}
    queue = deque([dst])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w in dist or not ok(w):
                continue
            if banned_edge is not None and edge_key(u, w) == banned_edge:
                continue
            dist[w] = dist[u] + 1
            if w != src:
                queue.append(w)
    if src not in dist:
        return None
    path = [src]
    u = src
    while u != dst:
        for w in g.adjacency[u]:
            if banned_edge is not None and edge_key(u, w) == banned_edge:
                continue
            if dist.get(w) == dist[u] - 1 and (w == dst or ok(w)):
                path.append(w)
                u = w
                break
    return path


def shortest_cycle_through(g: Graph, v: int) -> Optional[Cycle]:
    """Shortest cycle through ``v``; ties broken by normalized vertex sequence."""
    best = None
    nbrs = g.adjacency[v]
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            allowed = set(range(g.n)) - {v}
            path = shortest_path(g, a, b, allowed)
            if path is None or v in path:
                continue
            cyc = normalize_cycle([v] + path)
            key = (len(cyc), cyc)
            if best is None or key < best:
                best = key
    return None if best is None else Cycle(best[1])


def _cycle_ears(g: Graph, cycle: Cycle) -> list[list[int]]:
    """One lexicographically least shortest ear per ordered foot pair."""
    on_cycle = set(cycle.vertices)
    cycle_edges = set(cycle.edges())
    outside = set(range(g.n)) - on_cycle
    ears = []
    for a in sorted(on_cycle):
        for b in sorted(on_cycle):
            if b <= a:
                continue
            if g.has_edge(a, b) and edge_key(a, b) not in cycle_edges:
                ears.append([a, b])
                continue
            # route strictly through outside vertices
            sub_allowed = outside
            path = shortest_path(g, a, b, sub_allowed, banned_edge=edge_key(a, b))
            if path is not None and len(path) > 2:
                ears.append(path)
    return ears


def find_even_cycle(g: Graph) -> Cycle:
    """Even cycle via the parity argument: an odd cycle plus any of its ears
    closes an even cycle with one of the two arcs between the feet."""
    if not is_two_connected(g):
        raise NotTwoConnected("graph is not 2-connected")
    start = shortest_cycle_through(g, 0)
    assert start is not None
    if len(start) % 2 == 0:
        return start
    ears = _cycle_ears(g, start)
    if not ears:
        raise NoEvenCycle("graph is an odd cycle")
    vs = list(start.vertices)
    pos = {v: i for i, v in enumerate(vs)}
    candidates = []
    for ear in ears:
        a, b = ear[0], ear[-1]
        i, j = pos[a], pos[b]
        # arc from b forward to a, and arc from b backward to a
        fwd = [vs[(j + k) % len(vs)] for k in range((i - j) % len(vs) + 1)]
        bwd = [vs[(j - k) % len(vs)] for k in range((j - i) % len(vs) + 1)]
        for arc in (fwd, bwd):
            cyc = ear[:-1] + arc[:-1]
            if len(cyc) % 2 == 0:
                candidates.append(normalize_cycle(cyc))
    return Cycle(min(candidates))
