"""Edge colorings with contiguous color ids ``1..K`` and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from .graph import Edge, Graph, edge_key


@dataclass(frozen=True)
class EdgeColoring:
    assignment: Mapping[Edge, int]
    color_count: int = field(init=False)

    def __post_init__(self):
        assignment = {edge_key(u, v): c for (u, v), c in self.assignment.items()}
        object.__setattr__(self, "assignment", assignment)
        used = set(assignment.values())
        object.__setattr__(self, "color_count", len(used))

    @property
    def K(self) -> int:
        return self.color_count

    def color(self, u: int, v: int) -> int:
        return self.assignment[edge_key(u, v)]

    def colors(self) -> set[int]:
        return set(self.assignment.values())

    def is_contiguous(self) -> bool:
        return self.colors() == set(range(1, self.color_count + 1))

    def covers(self, g: Graph) -> bool:
        return all(e in self.assignment for e in g.edges)

    def vertices(self) -> set[int]:
        return {v for e in self.assignment for v in e}

    def extended(self, extra: Mapping[Edge, int]) -> "EdgeColoring":
        merged = dict(self.assignment)
        for (u, v), c in extra.items():
            merged[edge_key(u, v)] = c
        return EdgeColoring(merged)

    def restricted(self, edges) -> "EdgeColoring":
        return EdgeColoring({e: self.assignment[e] for e in edges})

    def to_json(self, n: int) -> str:
        rows = [[u, v, c] for (u, v), c in sorted(self.assignment.items())]
        return json.dumps({"n": n, "colors": self.color_count, "edges": rows})

    @classmethod
    def from_json(cls, text: str) -> "EdgeColoring":
        data = json.loads(text)
        coloring = cls({(u, v): c for u, v, c in data["edges"]})
        if coloring.color_count != data["colors"]:
            raise ValueError(
                f"declared {data['colors']} colors, edges use {coloring.color_count}")
        return coloring
