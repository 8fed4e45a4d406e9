"""Brute-force oracles and named graphs shared by the test modules.

Everything here enumerates explicitly (simple paths, cycles, ears, vertex
deletions) and shares no code with the search routines under test.
"""

from itertools import combinations, product

from rainbowrc.graph import Graph, edge_key, normalize_cycle


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n):
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def theta_graph():
    # hubs 0 and 1 joined through 2, 3 and 4
    return Graph.from_edges(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])


def k2m(m):
    return Graph.from_edges(m + 2, [(h, 2 + i) for h in (0, 1) for i in range(m)])


def c5_chord():
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])


def simple_paths(g, u, v):
    """Every simple u-v path as a vertex list."""
    out = []
    stack = [[u]]
    while stack:
        path = stack.pop()
        last = path[-1]
        if last == v:
            out.append(path)
            continue
        for w in g.adjacency[last]:
            if w not in path:
                stack.append(path + [w])
    return out


def rainbow_path_lengths(g, assignment, u, v):
    """Lengths of all rainbow simple u-v paths."""
    lengths = []
    for p in simple_paths(g, u, v):
        cols = [assignment[edge_key(a, b)] for a, b in zip(p, p[1:])]
        if len(set(cols)) == len(cols):
            lengths.append(len(cols))
    return lengths


def brute_report(g, assignment):
    """(rainbow_connected, exceptional pairs) by exhaustive path enumeration."""
    k = len(set(assignment[e] for e in g.edges))
    failing, exceptional = [], []
    for u, v in combinations(range(g.n), 2):
        lengths = rainbow_path_lengths(g, assignment, u, v)
        if not lengths:
            failing.append((u, v))
        elif min(lengths) == k:
            exceptional.append((u, v))
    return not failing, exceptional


def brute_two_connected(g):
    if g.n < 3:
        return False
    def connected_without(removed):
        alive = [v for v in range(g.n) if v != removed]
        seen = {alive[0]}
        stack = [alive[0]]
        while stack:
            x = stack.pop()
            for w in g.adjacency[x]:
                if w != removed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(alive)
    return connected_without(None) and all(connected_without(v) for v in range(g.n))


def all_cycles(g):
    """Every cycle of g, normalized, found by extending paths from their least vertex."""
    found = set()
    for s in range(g.n):
        stack = [[s]]
        while stack:
            path = stack.pop()
            for w in g.adjacency[path[-1]]:
                if w == s and len(path) >= 3:
                    found.add(normalize_cycle(path))
                elif w > s and w not in path:
                    stack.append(path + [w])
    return sorted(found)


def all_ears(g, vertices, edges):
    """Every ear of the subgraph, oriented from its smaller foot."""
    inside = set(vertices)
    have = set(edges)
    ears = set()
    for a in inside:
        for b in inside:
            if a >= b:
                continue
            for p in simple_paths(g, a, b):
                if any(x in inside for x in p[1:-1]):
                    continue
                if len(p) == 2 and edge_key(a, b) in have:
                    continue
                ears.add(tuple(p))
    return sorted(ears)


def all_labeled_graphs(n):
    pairs = list(combinations(range(n), 2))
    for bits in product((0, 1), repeat=len(pairs)):
        yield Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])
