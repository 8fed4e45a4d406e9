"""Constructive rainbow coloring of 2-connected graphs with ceil(n/2) colors.

Hamiltonian graphs get the half-period cycle coloring on a Hamiltonian
cycle. Otherwise the graph is grown from an even cycle by longest ears;
each ear is colored by a parity-driven pattern that introduces exactly
enough new colors to keep the stage at ceil(order/2) colors, while keeping
every stage *noncomplete*: each vertex has at most one partner that is
reachable only by rainbow paths using every color.

Several patterns reuse an existing color whose identity is only known to
exist. Those choices are made by trying candidates in a fixed order and
keeping the first one that passes stage verification.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from math import ceil
from typing import Iterable, Iterator, Optional, Sequence

from .decomposition import DEFAULT_EAR_BUDGET, Ear, EarDecomposition, ear_decomposition
from .edge_coloring import EdgeColoring
from .errors import (
    BudgetExceeded,
    ConstructionUnverified,
    EarTooShort,
    EvenEar,
    FeetNotInStage,
    NotAChord,
    NotTwoConnected,
    OddEar,
    RepairExhausted,
    TooFewShortEars,
)
from .graph import Cycle, Edge, Graph, edge_key, is_two_connected
from .verification import RainbowReport, analyze

log = logging.getLogger(__name__)

DEFAULT_HAMILTON_BUDGET = 2_000_000

RULES = (
    "Lemma1", "Base-t1-even", "Base-t1-odd", "Case1", "Case2",
    "Sub3.1", "Sub3.2", "Sub3.3", "Lemma3-few", "Lemma3-many", "Chords",
)


@dataclass(frozen=True)
class TraceStep:
    stage: int
    rule: str
    ear: tuple[int, ...]
    new_colors: tuple[int, ...]
    reused_colors: tuple[int, ...]
    ear_index: Optional[int] = None  # position in the decomposition, 0 = base

    def to_dict(self) -> dict:
        return {
            "stage": self.stage, "rule": self.rule, "ear": list(self.ear),
            "new_colors": list(self.new_colors), "reused_colors": list(self.reused_colors),
            "ear_index": self.ear_index,
        }


@dataclass
class ConstructionTrace:
    route: str
    steps: list[TraceStep] = field(default_factory=list)
    # stages that must be noncomplete, in construction order
    stages: list["Stage"] = field(default_factory=list, repr=False)
    decomposition: Optional[EarDecomposition] = None

    def rules(self) -> list[str]:
        return [s.rule for s in self.steps]

    def to_dict(self) -> dict:
        return {"route": self.route, "steps": [s.to_dict() for s in self.steps]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class Stage:
    """A colored prefix ``G_i`` of the construction.

    ``ears`` lists the attached ears in construction order, which can differ
    from decomposition order after a swap.
    """

    base: Cycle
    ears: tuple[Ear, ...]
    coloring: EdgeColoring
    parent: Optional["Stage"]
    steps: tuple[TraceStep, ...]

    @property
    def vertices(self) -> frozenset[int]:
        vs = set(self.base.vertices)
        for ear in self.ears:
            vs.update(ear.vertices)
        return frozenset(vs)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def K(self) -> int:
        return self.coloring.color_count

    @property
    def last_ear(self) -> Optional[Ear]:
        return self.ears[-1] if self.ears else None

    def chain(self) -> list["Stage"]:
        out = []
        s: Optional[Stage] = self
        while s is not None:
            out.append(s)
            s = s.parent
        return out[::-1]

    def report(self) -> RainbowReport:
        return analyze(self.coloring.assignment, self.vertices)


def stage_ok(stage: Stage) -> bool:
    """Noncomplete rainbow coloring with ceil(order/2) colors; odd-order
    stages must leave no pair restricted to complete paths."""
    if stage.K > ceil(stage.order / 2):
        return False
    rep = stage.report()
    if not (rep.rainbow_connected and rep.noncomplete):
        return False
    return not (stage.order % 2 and rep.exceptional_pairs)


# ---------------------------------------------------------------- patterns

def cycle_colors(m: int) -> list[int]:
    half = ceil(m / 2)
    return [i if i <= half else i - half for i in range(1, m + 1)]


def color_cycle(m: int) -> EdgeColoring:
    """Half-period coloring of the cycle 0, 1, ..., m-1."""
    if m < 3:
        raise ValueError("cycle length must be at least 3")
    cols = cycle_colors(m)
    return EdgeColoring({edge_key(i, (i + 1) % m): cols[i] for i in range(m)})


def color_along_cycle(cycle: Cycle) -> EdgeColoring:
    vs = cycle.vertices
    cols = cycle_colors(len(vs))
    return EdgeColoring({edge_key(vs[i], vs[(i + 1) % len(vs)]): cols[i] for i in range(len(vs))})


def _ear_assignment(ear: Ear, colors: Sequence[int]) -> dict[Edge, int]:
    assert len(colors) == ear.length
    return {e: c for e, c in zip(ear.edges(), colors)}


def _fresh(stage: Stage, count: int) -> list[int]:
    return list(range(stage.K + 1, stage.K + 1 + count))


def _attach(stage: Stage, ear: Ear, colors: Sequence[int], rule: str,
            new: Sequence[int], reused: Sequence[int]) -> Stage:
    step = TraceStep(len(stage.steps), rule, ear.vertices, tuple(new), tuple(reused))
    return Stage(stage.base, stage.ears + (ear,), stage.coloring.extended(_ear_assignment(ear, colors)),
                 stage, stage.steps + (step,))


def _first_passing(candidates: Iterator[Stage], what: str, stage: Stage) -> Stage:
    tried = 0
    for cand in candidates:
        tried += 1
        if stage_ok(cand):
            return cand
    raise RepairExhausted(f"{what}: none of {tried} candidates verified", stage.steps, stage)


def base_stage(base: Cycle) -> Stage:
    if len(base) % 2:
        raise ValueError("base cycle must be even")
    coloring = color_along_cycle(base)
    step = TraceStep(0, "Lemma1", base.vertices, tuple(range(1, coloring.K + 1)), (), 0)
    return Stage(base, (), coloring, None, (step,))


def _check_ear(stage: Stage, ear: Ear):
    verts = stage.vertices
    a, b = ear.feet
    if a not in verts or b not in verts:
        raise FeetNotInStage(f"ear {ear.vertices} has a foot outside the stage")
    if any(v in verts for v in ear.internal):
        raise FeetNotInStage(f"ear {ear.vertices} re-enters the stage")


# ------------------------------------------------------------ ear extensions

def color_base_with_first_ear(base: Cycle, ear: Ear) -> Stage:
    """Color the even base cycle, then its first (longest) ear."""
    if ear.length < 2:
        raise EarTooShort("the first ear must have length at least 2")
    stage = base_stage(base)
    if ear.length % 2:
        return extend_odd_ear(stage, ear, rule="Base-t1-odd")
    return extend_even_ear(stage, ear, rule="Base-t1-even")


def extend_odd_ear(stage: Stage, ear: Ear, rule: str = "Case1") -> Stage:
    """Odd ear of length 2r+1: r new colors, repeated around a reused middle color."""
    if ear.length % 2 == 0:
        raise EvenEar(f"ear of length {ear.length} is even")
    if ear.length < 3:
        raise EarTooShort("odd ear must have length at least 3")
    _check_ear(stage, ear)
    r = (ear.length - 1) // 2
    new = _fresh(stage, r)

    def candidates():
        for x in sorted(stage.coloring.colors()):
            yield _attach(stage, ear, new + [x] + new, rule, new, [x])

    return _first_passing(candidates(), f"{rule} middle color", stage)


def extend_even_ear(stage: Stage, ear: Ear, rule: Optional[str] = None) -> Stage:
    """Even ear of length 2s.

    Even stage: the s new colors are written twice. Odd stage: the pattern
    depends on how the ear meets the interior of the previous ear.
    """
    if ear.length % 2:
        raise OddEar(f"ear of length {ear.length} is odd")
    _check_ear(stage, ear)
    if stage.order % 2 == 0:
        new = _fresh(stage, ear.length // 2)
        cand = _attach(stage, ear, new + new, rule or "Case2", new, [])
        return _first_passing(iter([cand]), "Case2", stage)
    prev = stage.last_ear
    assert prev is not None and stage.parent is not None
    touched = {v for v in ear.feet if v in prev.internal}
    if not touched:
        if prev.length % 2:
            return _swap_with_previous(stage, ear, prev)
        return _paired_even(stage, ear, prev)
    rule = "Sub3.2" if len(touched) == 1 else "Sub3.3"
    return _foot_on_previous(stage, ear, prev, touched, rule)


def _swap_with_previous(stage: Stage, ear: Ear, prev: Ear) -> Stage:
    """Previous ear odd and untouched: attach this ear to the grandparent
    stage first, then re-attach the previous ear as an odd ear.

    The re-attached step is labelled Sub3.1; its ear_index in the final
    trace shows the reordering.
    """
    swapped = extend_even_ear(stage.parent, ear)
    return extend_odd_ear(swapped, prev, rule="Sub3.1")


def _ear_new_colors(stage: Stage, ear: Ear) -> list[int]:
    """Colors along ``ear`` that do not occur in the parent stage."""
    older = stage.parent.coloring.colors() if stage.parent else set()
    cols = [stage.coloring.color(u, v) for u, v in zip(ear.vertices, ear.vertices[1:])]
    return [c for c in cols if c not in older]


def _paired_even(stage: Stage, ear: Ear, prev: Ear) -> Stage:
    """Previous ear even and untouched: s-1 new colors mirrored around one
    color of the grandparent stage and one new color of the previous ear."""
    s = ear.length // 2
    new = _fresh(stage, s - 1)
    older = sorted(stage.parent.coloring.colors())
    prev_cols = [stage.coloring.color(u, v) for u, v in zip(prev.vertices, prev.vertices[1:])]
    ends = _unique([prev_cols[0], prev_cols[-1]] + sorted(_ear_new_colors(stage, prev)))

    def candidates():
        for x1 in ends:
            for oriented in (ear, ear.reversed()):
                for x in older:
                    yield _attach(stage, oriented, new + [x, x1] + new, "Sub3.1", new, [x, x1])

    return _first_passing(candidates(), "Sub3.1 reused colors", stage)


def _foot_on_previous(stage: Stage, ear: Ear, prev: Ear, touched: set[int], rule: str) -> Stage:
    """One or both feet inside the previous ear: s-1 new colors, the middle
    pair taking a new color of the previous ear and a second reused color."""
    s = ear.length // 2
    new = _fresh(stage, s - 1)
    prev_cols = [stage.coloring.color(u, v) for u, v in zip(prev.vertices, prev.vertices[1:])]
    prev_new = _ear_new_colors(stage, prev)
    older = stage.parent.coloring.colors()
    prev_middle = [c for c in prev_cols if c in older]

    orientations = []
    for oriented in (ear, ear.reversed()):
        end = oriented.vertices[-1]
        if end in touched:
            orientations.append(oriented)
    for oriented in (ear, ear.reversed()):
        if oriented not in orientations:
            orientations.append(oriented)

    def near_color(foot: int) -> int:
        pos = prev.vertices.index(foot)
        return prev_cols[0] if pos <= prev.length - pos else prev_cols[-1]

    def candidates():
        for oriented in orientations:
            end = oriented.vertices[-1]
            firsts = _unique(([near_color(end)] if end in touched else []) + sorted(prev_new))
            for x1 in firsts:
                for y in sorted(stage.coloring.colors()):
                    if y in prev_middle:
                        continue
                    yield _attach(stage, oriented, new + [x1, y] + new, rule, new, [x1, y])

    return _first_passing(candidates(), f"{rule} reused colors", stage)


def _unique(seq: Iterable[int]) -> list[int]:
    out = []
    for x in seq:
        if x not in out:
            out.append(x)
    return out


def extend_ear(stage: Stage, ear: Ear) -> Stage:
    first = stage.parent is None
    if ear.length % 2:
        return extend_odd_ear(stage, ear, rule="Base-t1-odd" if first else "Case1")
    return extend_even_ear(stage, ear, rule="Base-t1-even" if first else None)


def lemma2_pipeline(base: Cycle, ears: Sequence[Ear]) -> Stage:
    """Color the base and then each ear in turn, keeping every stage noncomplete."""
    stage = base_stage(base)
    if not stage_ok(stage):
        raise RepairExhausted("base cycle coloring failed verification", stage.steps, stage)
    for ear in ears:
        if ear.length < 2:
            raise EarTooShort("only ears of length at least 2 enter the inductive pipeline")
        stage = extend_ear(stage, ear)
    return stage


# ------------------------------------------------------------- short ears

def color_short_ears(stage: Stage, ears: Sequence[Ear]) -> EdgeColoring:
    """Color a batch of length-2 ears whose feet lie in ``stage``.

    Two ears: one new color plus one reused color taken by a noncomplete
    path between their feet. Four or more: two new colors for the whole batch.
    """
    if len(ears) < 2:
        raise TooFewShortEars("at least two ears of length 2 are required")
    verts = stage.vertices
    for ear in ears:
        if ear.length != 2:
            raise ValueError(f"ear {ear.vertices} does not have length 2")
        if not all(f in verts for f in ear.feet):
            raise FeetNotInStage(f"ear {ear.vertices} has a foot outside the stage")
    all_verts = set(verts).union(*(e.vertices for e in ears))
    if len(ears) >= 4:
        x1, x2 = stage.K + 1, stage.K + 2
        extra = {}
        for ear in ears:
            extra.update(_ear_assignment(ear, [x1, x2]))
        coloring = stage.coloring.extended(extra)
        if not analyze(coloring.assignment, all_verts).rainbow_connected:
            raise RepairExhausted("short-ear batch is not rainbow connected", stage.steps, stage)
        return coloring
    if len(ears) > 2:
        raise TooFewShortEars("two or three short ears: only the last two are batched here")
    first, second = ears
    x1 = stage.K + 1
    for oriented in (second, second.reversed()):
        # oriented = a', v', b': edge at a' takes the reused color, edge at b' the new one
        for x in sorted(stage.coloring.colors()):
            extra = _ear_assignment(first, [x1, x1])
            extra.update(_ear_assignment(oriented, [x, x1]))
            coloring = stage.coloring.extended(extra)
            if analyze(coloring.assignment, all_verts).rainbow_connected:
                return coloring
    raise RepairExhausted("no reused color joins the two short ears", stage.steps, stage)


def color_chords(coloring: EdgeColoring, chords: Sequence[Ear]) -> EdgeColoring:
    """Give every remaining chord color 1; spanning rainbow paths survive."""
    if not chords:
        return coloring
    verts = coloring.vertices()
    extra = {}
    for chord in chords:
        if chord.length != 1:
            raise NotAChord(f"{chord.vertices} is not a single edge")
        a, b = chord.feet
        if a not in verts or b not in verts:
            raise NotAChord(f"chord {chord.vertices} touches an uncolored vertex")
        extra[edge_key(a, b)] = 1
    return coloring.extended(extra)


# ------------------------------------------------------------- dispatcher

def construct_coloring(g: Graph, hamilton_budget: Optional[int] = DEFAULT_HAMILTON_BUDGET,
                       ear_budget: Optional[int] = DEFAULT_EAR_BUDGET
                       ) -> tuple[EdgeColoring, ConstructionTrace]:
    """Rainbow coloring of a 2-connected graph with at most ceil(n/2) colors.

    Raises ConstructionUnverified if the final coloring does not check out.
    """
    from .oracle import find_hamiltonian_cycle

    if not is_two_connected(g):
        raise NotTwoConnected("graph is not 2-connected")
    ham = None
    try:
        ham = find_hamiltonian_cycle(g, budget=hamilton_budget)
    except BudgetExceeded:
        log.info("Hamiltonian search over budget; falling back to ear decomposition")
    if ham is not None:
        coloring, trace = _hamiltonian_route(g, ham)
    else:
        dec = ear_decomposition(g, budget=ear_budget)
        if dec.t == 0:
            coloring, trace = _hamiltonian_route(g, dec.base)
        else:
            coloring, trace = _ear_route(g, dec)
    _final_gate(g, coloring, trace)
    return coloring, trace


def _hamiltonian_route(g: Graph, cycle: Cycle) -> tuple[EdgeColoring, ConstructionTrace]:
    coloring = color_along_cycle(cycle)
    trace = ConstructionTrace("hamiltonian")
    trace.steps.append(TraceStep(0, "Lemma1", cycle.vertices, tuple(range(1, coloring.K + 1)), (), 0))
    chords = [Ear(e) for e in g.sorted_edges() if e not in coloring.assignment]
    coloring = color_chords(coloring, chords)
    if chords:
        trace.steps.append(TraceStep(1, "Chords", (), (), (1,) if chords else ()))
    trace.stages.append(Stage(cycle, (), color_along_cycle(cycle), None, ()))
    return coloring, trace


def _ear_route(g: Graph, dec: EarDecomposition) -> tuple[EdgeColoring, ConstructionTrace]:
    long_ears = dec.long_ears()
    short_idx = [i for i, e in enumerate(long_ears) if e.length == 2]
    index_of = {e.vertices: i for i, e in enumerate(dec.ears, start=1)}
    index_of[dec.base.vertices] = 0

    if len(short_idx) <= 1:
        route = "lemma2"
        stage = lemma2_pipeline(dec.base, long_ears)
        coloring = stage.coloring
        extra_steps = []
    elif len(short_idx) <= 3:
        route = "lemma3-few"
        stage = lemma2_pipeline(dec.base, long_ears[:-2])
        batch = long_ears[-2:]
        coloring = color_short_ears(stage, batch)
        extra_steps = [("Lemma3-few", e, stage.K + 1) for e in batch]
    else:
        route = "lemma3-many"
        first_short = short_idx[0]
        stage = lemma2_pipeline(dec.base, long_ears[:first_short])
        batch = long_ears[first_short:]
        coloring = color_short_ears(stage, batch)
        extra_steps = [("Lemma3-many", e, None) for e in batch]

    trace = ConstructionTrace(route, decomposition=dec)
    for s in stage.steps:
        trace.steps.append(TraceStep(s.stage, s.rule, s.ear, s.new_colors, s.reused_colors,
                                     _lookup(index_of, s.ear)))
    trace.stages.extend(stage.chain())
    k = stage.K
    for j, (rule, ear, _) in enumerate(extra_steps):
        if rule == "Lemma3-few":
            new = (k + 1,) if j == 0 else ()
            reused = () if j == 0 else tuple(sorted({coloring.color(*e) for e in ear.edges()} - {k + 1}))
        else:
            new = (k + 1, k + 2) if j == 0 else ()
            reused = () if j == 0 else (k + 1, k + 2)
        trace.steps.append(TraceStep(len(trace.steps), rule, ear.vertices, new, reused,
                                     index_of[ear.vertices]))
    chords = dec.chords()
    coloring = color_chords(coloring, chords)
    if chords:
        trace.steps.append(TraceStep(len(trace.steps), "Chords", (), (), (1,)))
    return coloring, trace


def _lookup(index_of: dict, verts: tuple[int, ...]) -> Optional[int]:
    if verts in index_of:
        return index_of[verts]
    return index_of.get(verts[::-1])


def _final_gate(g: Graph, coloring: EdgeColoring, trace: ConstructionTrace):
    if not coloring.covers(g):
        raise ConstructionUnverified("coloring misses an edge", trace)
    if not coloring.is_contiguous():
        raise ConstructionUnverified("color ids are not contiguous", trace)
    if coloring.K > ceil(g.n / 2):
        raise ConstructionUnverified(f"{coloring.K} colors exceed ceil({g.n}/2)", trace)
    rep = analyze({e: coloring.assignment[e] for e in g.edges}, range(g.n))
    if not rep.rainbow_connected:
        pair = rep.failing_pairs[0]
        raise ConstructionUnverified(f"pair {pair} has no rainbow path", trace, pair)
