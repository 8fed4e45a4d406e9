"""Exponential-time ground truth: Hamiltonian cycles, exact rainbow
connection numbers, small-graph corpora and the k-connected scan."""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import ceil
from typing import Iterable, Optional, Union

from .edge_coloring import EdgeColoring
from .errors import BudgetExceeded, Disconnected, InfeasibleParameters
from .graph import Cycle, Graph, edge_key, is_connected, is_k_connected, is_two_connected, normalize_cycle
from .verification import analyze

DEFAULT_RC_BUDGET = 20_000_000


# ----------------------------------------------------------- Hamiltonicity

def find_hamiltonian_cycle(g: Graph, budget: Optional[int] = None) -> Optional[Cycle]:
    """Backtracking from vertex 0 with degree and connectivity pruning."""
    n = g.n
    if n < 3 or any(g.degree(v) < 2 for v in range(n)):
        return None
    if not is_connected(g):
        return None
    path = [0]
    on_path = [False] * n
    on_path[0] = True
    expansions = 0

    def remaining_ok() -> bool:
        # every unvisited vertex still needs two usable neighbors
        last = path[-1]
        for v in range(n):
            if on_path[v]:
                continue
            free = sum(1 for w in g.adjacency[v] if not on_path[w] or w == last or w == 0)
            if free < 2:
                return False
        return True

    def extend() -> bool:
        nonlocal expansions
        u = path[-1]
        if len(path) == n:
            return g.has_edge(u, 0)
        for w in g.adjacency[u]:
            if on_path[w]:
                continue
            # orientation symmetry: the second vertex is smaller than the last one
            if len(path) == n - 1 and w < path[1]:
                continue
            expansions += 1
            if budget is not None and expansions > budget:
                raise BudgetExceeded(f"Hamiltonian search exceeded {budget} expansions")
            path.append(w)
            on_path[w] = True
            if remaining_ok() and extend():
                return True
            path.pop()
            on_path[w] = False
        return False

    if extend():
        return Cycle(normalize_cycle(path))
    return None


def hamiltonian_by_permutations(g: Graph) -> bool:
    """Exhaustive check over all vertex orders; only for tiny graphs."""
    if g.n < 3:
        return False
    for rest in permutations(range(1, g.n)):
        cyc = (0,) + rest
        if all(g.has_edge(cyc[i], cyc[(i + 1) % g.n]) for i in range(g.n)):
            return True
    return False


# ----------------------------------------------------------------- exact rc

def diameter(g: Graph) -> int:
    best = 0
    for s in range(g.n):
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if len(dist) < g.n:
            raise Disconnected("graph is disconnected")
        best = max(best, max(dist.values()))
    return best


@dataclass
class RcResult:
    rc: Optional[int]  # None when the search was abandoned
    witness: Optional[EdgeColoring]
    explored: dict = field(default_factory=dict)

    @property
    def known(self) -> bool:
        return self.rc is not None


def exact_rc(g: Graph, max_colors: Optional[int] = None,
             budget: Optional[int] = DEFAULT_RC_BUDGET) -> RcResult:
    """Smallest k admitting a rainbow-connecting k-coloring.

    Iterative deepening from the diameter. For each k, colorings are
    enumerated as restricted growth strings (first edge color 1, a new color
    is always the next unused id), pruned by an optimistic pair check in
    which still-uncolored edges may take any color.
    """
    if g.n <= 1:
        return RcResult(0, EdgeColoring({}), {"nodes": 0})
    lower = diameter(g)
    upper = g.m if max_colors is None else max_colors
    if upper < lower:
        raise InfeasibleParameters(f"max_colors={upper} is below the diameter {lower}")
    edges = _edge_order(g)
    stats = {"nodes": 0, "levels": []}
    for k in range(lower, upper + 1):
        found = _search_k(g, edges, k, budget, stats)
        stats["levels"].append(k)
        if found is not None:
            return RcResult(k, EdgeColoring(dict(zip(edges, found))), stats)
    # only reachable when max_colors caps the search below the edge count
    return RcResult(None, None, stats)


def _edge_order(g: Graph) -> list:
    """BFS edge order from vertex 0 so partial colorings stay local."""
    order = []
    seen_e = set()
    seen_v = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            e = edge_key(u, w)
            if e not in seen_e:
                seen_e.add(e)
                order.append(e)
            if w not in seen_v:
                seen_v.add(w)
                queue.append(w)
    return order


def _search_k(g: Graph, edges: list, k: int, budget: Optional[int], stats: dict):
    m = len(edges)
    n = g.n
    colors = [0] * m
    index = {e: i for i, e in enumerate(edges)}
    adj = [[(w, index[edge_key(v, w)]) for w in g.adjacency[v]] for v in range(n)]
    popcount = [bin(x).count("1") for x in range(1 << k)]
    # checkpoints: prune only at some depths to keep node cost low
    check_every = max(1, m // 6)

    def feasible(assigned: int) -> bool:
        # relaxed pair check: uncolored edges are wildcards taking any unused color
        for u in range(n):
            states = {(u, 0, 0)}
            reach = {u}
            queue = deque(states)
            while queue:
                v, mask, wild = queue.popleft()
                for w, ei in adj[v]:
                    if ei < assigned:
                        bit = 1 << colors[ei]
                        if mask & bit or popcount[mask] + wild >= k:
                            continue
                        nxt = (w, mask | bit, wild)
                    else:
                        if popcount[mask] + wild >= k:
                            continue
                        nxt = (w, mask, wild + 1)
                    if nxt not in states:
                        states.add(nxt)
                        reach.add(w)
                        queue.append(nxt)
            if len(reach) < n:
                return False
        return True

    def complete_ok() -> bool:
        return analyze({e: colors[i] + 1 for i, e in enumerate(edges)}, range(n)).rainbow_connected

    def rec(i: int, used: int) -> bool:
        stats["nodes"] += 1
        if budget is not None and stats["nodes"] > budget:
            raise BudgetExceeded(f"exact rc search exceeded {budget} nodes")
        if i == m:
            return complete_ok()
        if i and i % check_every == 0 and not feasible(i):
            return False
        # colors still to introduce must fit in the remaining edges
        if k - used > m - i:
            return False
        top = min(used + 1, k)
        for c in range(top):
            colors[i] = c
            if rec(i + 1, max(used, c + 1)):
                return True
        return False

    if rec(0, 0):
        return list(c + 1 for c in colors)
    return None


# ------------------------------------------------------------------ corpora

def canonical_form(g: Graph) -> tuple:
    """Minimum adjacency bitstring over degree-respecting vertex orders.

    Only permutations that list vertices by nondecreasing degree are tried;
    that family is isomorphism-invariant, so the minimum is a canonical key.
    """
    n = g.n
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(g.degree(v), []).append(v)
    classes = [by_deg[d] for d in sorted(by_deg)]
    pairs = list(combinations(range(n), 2))
    best = None

    def orders(i):
        if i == len(classes):
            yield ()
            return
        for perm in permutations(classes[i]):
            for rest in orders(i + 1):
                yield perm + rest

    for order in orders(0):
        pos = {v: i for i, v in enumerate(order)}
        bits = tuple(sorted(edge_key(pos[u], pos[v]) for u, v in g.edges))
        if best is None or bits < best:
            best = bits
    return (n, best)


def graph_from_canonical(key: tuple) -> Graph:
    n, edges = key
    return Graph.from_edges(n, edges)


@dataclass
class Corpus:
    graphs: list[Graph]
    provenance: list[str]
    keys: list[tuple] = field(default_factory=list)

    def __len__(self):
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)


def all_graphs(n: int) -> list[Graph]:
    """All graphs on n vertices up to isomorphism, grown one vertex at a time
    from the previous order's representatives."""
    if n == 0:
        return [Graph(0, frozenset())]
    seen = {}
    for h in all_graphs(n - 1):
        new = n - 1
        for size in range(n):
            for nbrs in combinations(range(n - 1), size):
                g = Graph(n, h.edges | {(v, new) for v in nbrs})
                key = canonical_form(g)
                if key not in seen:
                    seen[key] = graph_from_canonical(key)
    return [seen[key] for key in sorted(seen)]


def _connectivity_pred(connectivity: int):
    if connectivity == 2:
        return is_two_connected
    return lambda g: is_k_connected(g, connectivity)


def random_two_connected(n: int, rng: random.Random, chord_prob: Optional[float] = None) -> Graph:
    """Base cycle plus random open ears, topped up with random chords.

    Without an explicit ``chord_prob`` the density is drawn per graph so that
    sparse, mostly non-Hamiltonian graphs show up alongside dense ones.
    """
    if n < 3:
        raise InfeasibleParameters("a 2-connected graph needs at least 3 vertices")
    if chord_prob is None:
        chord_prob = rng.choice((0.0, 0.0, 0.04, 0.1, 0.2))
    base = rng.randint(3, n)
    edges = {edge_key(i, (i + 1) % base) for i in range(base)}
    count = base
    while count < n:
        internal = rng.randint(1, n - count)
        a, b = rng.sample(range(count), 2)
        path = [a] + list(range(count, count + internal)) + [b]
        edges.update(edge_key(u, v) for u, v in zip(path, path[1:]))
        count += internal
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < chord_prob:
            edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def build_corpus(mode: str, n: int, connectivity: int = 2, count: int = 1, seed: int = 0) -> Corpus:
    """Enumerated (complete up to isomorphism, n <= 7) or seeded random corpus.

    Random mode always produces 2-connected graphs; higher connectivity is
    rejected there because ear growth does not guarantee it.
    """
    if connectivity < 1:
        raise InfeasibleParameters("connectivity must be at least 1")
    if mode == "enumerate":
        if n > 7:
            raise InfeasibleParameters("enumeration is limited to n <= 7")
        pred = _connectivity_pred(connectivity)
        graphs = [g for g in all_graphs(n) if pred(g)]
        return Corpus(graphs, ["enumerated"] * len(graphs), [canonical_form(g) for g in graphs])
    if mode == "random":
        if connectivity != 2:
            raise InfeasibleParameters("random mode generates 2-connected graphs only")
        if count < 1:
            raise InfeasibleParameters("count must be positive")
        rng = random.Random(seed)
        graphs = [random_two_connected(n, rng) for _ in range(count)]
        return Corpus(graphs, [f"generated({seed})"] * count, [canonical_form(g) for g in graphs]
                      if n <= 8 else [])
    raise InfeasibleParameters(f"unknown corpus mode {mode!r}")


def enumerated_corpus(n_max: int, connectivity: int = 2, n_min: int = 3) -> Corpus:
    graphs, prov, keys = [], [], []
    for n in range(n_min, n_max + 1):
        c = build_corpus("enumerate", n, connectivity)
        graphs += c.graphs
        prov += c.provenance
        keys += c.keys
    return Corpus(graphs, prov, keys)


# -------------------------------------------------------------------- scan

@dataclass
class ScanRecord:
    graph: Graph
    rc: Union[int, str]
    bound: int

    @property
    def ok(self) -> bool:
        return isinstance(self.rc, int) and self.rc <= self.bound

    @property
    def unknown(self) -> bool:
        return not isinstance(self.rc, int)

    def to_json(self) -> str:
        return json.dumps({"graph": self.graph.to_edge_list(), "n": self.graph.n,
                           "rc": self.rc, "bound": self.bound, "ok": self.ok})


@dataclass
class ScanReport:
    k: int
    records: list[ScanRecord]

    @property
    def violations(self) -> list[ScanRecord]:
        return [r for r in self.records if not r.unknown and not r.ok]

    @property
    def unknowns(self) -> list[ScanRecord]:
        return [r for r in self.records if r.unknown]

    @property
    def max_gap(self) -> Optional[int]:
        gaps = [r.rc - r.bound for r in self.records if not r.unknown]
        return max(gaps) if gaps else None

    def to_jsonl(self) -> str:
        return "".join(r.to_json() + "\n" for r in self.records)


def conjecture_scan(k: int, n_max: int, corpus: Iterable[Graph],
                    budget: Optional[int] = DEFAULT_RC_BUDGET) -> ScanReport:
    """Exact rc against ceil(n/k) for each corpus graph; evidence only."""
    if k < 1:
        raise InfeasibleParameters("k must be at least 1")
    records = []
    for g in corpus:
        if g.n > n_max:
            continue
        bound = ceil(g.n / k)
        try:
            res = exact_rc(g, budget=budget)
            rc: Union[int, str] = res.rc if res.known else "unknown"
        except BudgetExceeded:
            rc = "unknown"
        records.append(ScanRecord(g, rc, bound))
    return ScanReport(k, records)
