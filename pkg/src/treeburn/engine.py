"""The burning process: simulation, sequence validation, canonicalization.

Round semantics.  In round r the fire spreads to every unburned vertex
adjacent to a vertex burned in an earlier round, and the round's source (if
any) is burned as well.  A source is eligible iff it is unburned at the
START of its round; it may coincide with a vertex the fire reaches by
adjacency in the same round.  This round-start rule is what makes sequence
lifting and projection compose exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import LengthMismatch, NotConnected, SourceAlreadyBurned
from .graphs import Graph, Tree

# An empty round: the fire only spreads by adjacency.
EMPTY: Optional[int] = None


@dataclass(frozen=True)
class Schedule:
    """Per-round sources; entry r-1 drives round r.  None marks an empty round.

    Round 1 must name a vertex: nothing burns before the first source.
    """

    rounds: tuple[Optional[int], ...]

    def __post_init__(self):
        if not self.rounds:
            raise ValueError("schedule must have at least one round")
        if self.rounds[0] is None:
            raise ValueError("round 1 cannot be empty")


@dataclass(frozen=True)
class BurningSequence:
    """Sources of a burning process that terminates exactly when the last
    source is placed.  Entries are necessarily distinct."""

    sources: tuple[int, ...]

    def __post_init__(self):
        if not self.sources:
            raise ValueError("burning sequence must be nonempty")
        if len(set(self.sources)) != len(self.sources):
            raise ValueError("burning sequence sources must be distinct")

    def __len__(self) -> int:
        return len(self.sources)


@dataclass(frozen=True)
class RoundLabeling:
    """Round in which each vertex burned; labels[v] is 1-based."""

    labels: tuple[int, ...]
    total_rounds: int

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.labels))


GraphLike = Union[Graph, Tree]
ScheduleLike = Union[Schedule, BurningSequence, Sequence[Optional[int]]]


def _graph_of(g: GraphLike) -> Graph:
    return g.graph if isinstance(g, Tree) else g


def _rounds_of(s: ScheduleLike) -> tuple[Optional[int], ...]:
    if isinstance(s, Schedule):
        return s.rounds
    if isinstance(s, BurningSequence):
        return s.sources
    return Schedule(tuple(s)).rounds


def simulate(g: GraphLike, schedule: ScheduleLike) -> RoundLabeling:
    """Run the burning process for the given schedule on a connected graph.

    Rounds past the end of the schedule proceed with empty sources until all
    vertices are burned.  Raises SourceAlreadyBurned if a scheduled source is
    burned at the start of its round -- including any source scheduled after
    the process has already terminated.
    """
    graph = _graph_of(g)
    rounds = _rounds_of(schedule)
    n = graph.n
    if n == 0 or not graph.is_connected():
        raise NotConnected("burning is defined on connected graphs")

    labels = [0] * n
    frontier: list[int] = []
    burned_count = 0
    r = 0
    while burned_count < n:
        r += 1
        newly = []
        for u in frontier:
            for w in graph.adjacency[u]:
                if labels[w] == 0:
                    labels[w] = r
                    newly.append(w)
        src = rounds[r - 1] if r <= len(rounds) else EMPTY
        if src is not None:
            if not 0 <= src < n:
                raise ValueError(f"source {src} is not a vertex")
            if labels[src] != 0 and labels[src] != r:
                raise SourceAlreadyBurned(r, src)
            if labels[src] == 0:
                labels[src] = r
                newly.append(src)
        burned_count += len(newly)
        frontier = newly
    # Sources scheduled after termination can never be unburned.
    for later in range(r, len(rounds)):
        if rounds[later] is not None:
            raise SourceAlreadyBurned(later + 1, rounds[later])
    return RoundLabeling(tuple(labels), r)


def validate_sequence(g: GraphLike, seq: BurningSequence) -> RoundLabeling:
    """Check that seq is a burning sequence: the process it drives must
    terminate in exactly len(seq) rounds.  Returns the labeling."""
    labeling = simulate(g, Schedule(tuple(seq.sources)))
    if labeling.total_rounds != len(seq):
        raise LengthMismatch(labeling.total_rounds)
    return labeling


def greedy_schedule(
    g: GraphLike, proposals: Sequence[Optional[int]]
) -> tuple[Schedule, RoundLabeling]:
    """Run the process keeping each round's proposed source iff it is still
    unburned at the start of its round, demoting it to an empty round
    otherwise.  Rounds continue past the proposals until everything burns.

    This is the composition step used when transporting a sequence from a
    transformed tree back to the original: stale sources drop out silently
    instead of invalidating the schedule.
    """
    graph = _graph_of(g)
    n = graph.n
    if n == 0 or not graph.is_connected():
        raise NotConnected("burning is defined on connected graphs")
    if not proposals or proposals[0] is None:
        raise ValueError("round 1 needs a concrete source")
    labels = [0] * n
    frontier: list[int] = []
    burned_count = 0
    kept: list[Optional[int]] = []
    r = 0
    while burned_count < n:
        r += 1
        newly = []
        for u in frontier:
            for w in graph.adjacency[u]:
                if labels[w] == 0:
                    labels[w] = r
                    newly.append(w)
        src = proposals[r - 1] if r <= len(proposals) else EMPTY
        if src is not None and not 0 <= src < n:
            raise ValueError(f"proposal {src} is not a vertex")
        if src is not None and (labels[src] == 0 or labels[src] == r):
            if labels[src] == 0:
                labels[src] = r
                newly.append(src)
            kept.append(src)
        else:
            kept.append(EMPTY)
        burned_count += len(newly)
        frontier = newly
    return Schedule(tuple(kept)), RoundLabeling(tuple(labels), r)


def canonicalize(g: GraphLike, schedule: ScheduleLike) -> BurningSequence:
    """Fill every empty round with the lowest-id vertex burned in that round,
    producing a burning sequence that induces the identical process."""
    graph = _graph_of(g)
    rounds = _rounds_of(schedule)
    labeling = simulate(graph, rounds)
    by_round: dict[int, int] = {}
    for v in range(graph.n - 1, -1, -1):
        by_round[labeling.labels[v]] = v
    sources = []
    for r in range(1, labeling.total_rounds + 1):
        given = rounds[r - 1] if r <= len(rounds) else EMPTY
        sources.append(given if given is not None else by_round[r])
    return BurningSequence(tuple(sources))
