"""Nonincreasing ear decompositions: start from an even cycle and keep
attaching a longest available ear until the whole graph is covered."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import BudgetExceeded, NoEar, NotTwoConnected
from .graph import Cycle, Edge, Graph, edge_key, find_even_cycle, is_two_connected

DEFAULT_EAR_BUDGET = 5_000_000


@dataclass(frozen=True)
class Ear:
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 2:
            raise ValueError("an ear has at least one edge")
        if self.vertices[0] == self.vertices[-1]:
            raise ValueError("ear feet must be distinct")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"repeated vertex in ear {self.vertices}")

    @property
    def feet(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def internal(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [edge_key(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]

    def reversed(self) -> "Ear":
        return Ear(self.vertices[::-1])


@dataclass
class EarDecomposition:
    base: Cycle
    ears: list[Ear]
    stage_orders: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.stage_orders:
            orders = [len(self.base)]
            for ear in self.ears:
                orders.append(orders[-1] + ear.length - 1)
            self.stage_orders = orders

    @property
    def k(self) -> int:
        return len(self.ears)

    @property
    def t(self) -> int:
        """Index (1-based) of the last ear of length at least 2, or 0."""
        last = 0
        for i, ear in enumerate(self.ears, start=1):
            if ear.length >= 2:
                last = i
        return last

    def long_ears(self) -> list[Ear]:
        return self.ears[: self.t]

    def chords(self) -> list[Ear]:
        return self.ears[self.t:]

    def stage(self, i: int) -> tuple[frozenset[int], frozenset[Edge]]:
        """Vertex and edge sets of the prefix union ``G_i``."""
        verts = set(self.base.vertices)
        edges = set(self.base.edges())
        for ear in self.ears[:i]:
            verts.update(ear.vertices)
            edges.update(ear.edges())
        return frozenset(verts), frozenset(edges)

    def to_json(self) -> str:
        return json.dumps({
            "base": list(self.base.vertices),
            "ears": [{"vertices": list(e.vertices)} for e in self.ears],
            "t": self.t,
        })

    @classmethod
    def from_json(cls, text: str) -> "EarDecomposition":
        data = json.loads(text)
        return cls(Cycle(tuple(data["base"])), [Ear(tuple(e["vertices"])) for e in data["ears"]])


def stage_subgraph(g: Graph, vertices: Iterable[int], edges: Iterable[Edge]) -> Graph:
    """Relabel a vertex/edge subset of ``g`` into a standalone Graph.

    Used only for connectivity checks, so the relabelling is internal.
    """
    order = sorted(vertices)
    index = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(len(order), [(index[u], index[v]) for u, v in edges])


def find_longest_ear(g: Graph, vertices: Iterable[int], edges: Iterable[Edge],
                     budget: Optional[int] = DEFAULT_EAR_BUDGET) -> Ear:
    """Longest ear of the subgraph ``(vertices, edges)`` in ``g``.

    Exhaustive DFS with branch-and-bound on the number of still-free vertices.
    Ties go to the lexicographically least sequence read from the smaller foot.
    """
    inside = set(vertices)
    have = set(edges)
    if have >= g.edges:
        raise NoEar("subgraph already covers every edge")
    free_total = g.n - len(inside)
    best_len = 0
    best: Optional[tuple[int, ...]] = None
    expansions = 0

    def consider(path):
        nonlocal best_len, best
        length = len(path) - 1
        seq = tuple(path)
        if length > best_len or (length == best_len and (best is None or seq < best)):
            best_len, best = length, seq

    for a in sorted(inside):
        # chords: single edges between two stage vertices
        for w in g.adjacency[a]:
            if w > a and w in inside and edge_key(a, w) not in have:
                consider([a, w])
        if free_total == 0:
            continue
        path = [a]
        on_path = {a}
        # stack of neighbor iterators, one per path vertex after a
        starts = [w for w in g.adjacency[a] if w not in inside]
        stack = [iter(starts)]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            if nxt in on_path:
                continue
            expansions += 1
            if budget is not None and expansions > budget:
                raise BudgetExceeded(f"longest-ear search exceeded {budget} expansions")
            path.append(nxt)
            on_path.add(nxt)
            edges_so_far = len(path) - 1
            # closing edges from nxt back into the stage
            for y in g.adjacency[nxt]:
                if y in inside and y > a:
                    consider(path + [y])
            remaining = free_total - (len(path) - 1)
            if edges_so_far + 1 + remaining < best_len:
                on_path.discard(path.pop())
                continue
            stack.append(iter([y for y in g.adjacency[nxt] if y not in inside and y not in on_path]))
        # the outer loop pops 'a' itself from path when its iterator empties
    if best is None:
        raise NoEar("no ear attaches to the subgraph")
    return Ear(best)


def ear_decomposition(g: Graph, budget: Optional[int] = DEFAULT_EAR_BUDGET) -> EarDecomposition:
    """Even base cycle plus longest ears, added until the union is ``g``."""
    if not is_two_connected(g):
        raise NotTwoConnected("graph is not 2-connected")
    base = find_even_cycle(g)
    verts = set(base.vertices)
    edges = set(base.edges())
    ears: list[Ear] = []
    while len(edges) < g.m:
        ear = find_longest_ear(g, verts, edges, budget)
        ears.append(ear)
        verts.update(ear.vertices)
        edges.update(ear.edges())
    return EarDecomposition(base, ears)


def validate_decomposition(g: Graph, dec: EarDecomposition) -> list[str]:
    """Return a list of violated invariants (empty when the decomposition is sound)."""
    problems = []
    if len(dec.base) % 2:
        problems.append("base cycle has odd length")
    if not dec.base.is_valid_in(g):
        problems.append("base cycle uses a non-edge")
    verts = set(dec.base.vertices)
    edges = set(dec.base.edges())
    prev_len = None
    t = dec.t
    for i, ear in enumerate(dec.ears, start=1):
        a, b = ear.feet
        if a not in verts or b not in verts:
            problems.append(f"ear {i} has a foot outside G_{i - 1}")
        if any(v in verts for v in ear.internal):
            problems.append(f"ear {i} has an internal vertex inside G_{i - 1}")
        if any(not g.has_edge(u, v) for u, v in ear.edges()):
            problems.append(f"ear {i} uses a non-edge")
        if any(e in edges for e in ear.edges()):
            problems.append(f"ear {i} reuses an edge")
        if prev_len is not None and ear.length > prev_len:
            problems.append(f"ear {i} is longer than ear {i - 1}")
        if (ear.length >= 2) != (i <= t):
            problems.append(f"ear {i} length disagrees with t={t}")
        prev_len = ear.length
        verts.update(ear.vertices)
        edges.update(ear.edges())
        if not is_two_connected(stage_subgraph(g, verts, edges)):
            problems.append(f"G_{i} is separable")
    if verts != set(range(g.n)) or edges != set(g.edges):
        problems.append("union of base and ears differs from the graph")
    if dec.stage_orders[-1] != g.n:
        problems.append("final stage order differs from n")
    return problems
