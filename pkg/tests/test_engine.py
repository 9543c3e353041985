import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treeburn import (
    EMPTY,
    BurningSequence,
    Schedule,
    build_graph,
    canonicalize,
    gen_path,
    greedy_schedule,
    simulate,
    validate_sequence,
)
from treeburn.errors import LengthMismatch, NotConnected, SourceAlreadyBurned

from .strategies import random_valid_schedule, trees


class TestSimulate:
    def test_path4_two_sources(self):
        lab = simulate(gen_path(4), Schedule((1, 3)))
        assert lab.labels == (2, 1, 2, 2)
        assert lab.total_rounds == 2

    def test_single_vertex(self):
        lab = simulate(build_graph(1, []), Schedule((0,)))
        assert lab.labels == (1,)
        assert lab.total_rounds == 1

    def test_pure_propagation_from_end(self):
        lab = simulate(gen_path(4), Schedule((0,)))
        assert lab.labels == (1, 2, 3, 4)
        assert lab.total_rounds == 4

    def test_empty_rounds_in_schedule(self):
        lab = simulate(gen_path(3), Schedule((1, EMPTY)))
        assert lab.labels == (2, 1, 2)
        assert lab.total_rounds == 2

    def test_round_one_must_have_source(self):
        with pytest.raises(ValueError):
            Schedule((EMPTY, 1))
        with pytest.raises(ValueError):
            Schedule(())

    def test_source_already_burned(self):
        with pytest.raises(SourceAlreadyBurned) as exc:
            simulate(gen_path(3), Schedule((0, EMPTY, 0)))
        assert exc.value.round_no == 3
        assert exc.value.vertex == 0

    def test_source_after_termination(self):
        # all of P2 is burned after round 2; a round-3 source cannot exist
        with pytest.raises(SourceAlreadyBurned) as exc:
            simulate(gen_path(2), Schedule((0, EMPTY, 1)))
        assert exc.value.round_no == 3

    def test_source_eligible_when_fire_arrives_same_round(self):
        # vertex 1 burns by adjacency in round 2; naming it as the round-2
        # source is still legal because it was unburned at the round start
        lab = simulate(gen_path(4), Schedule((0, 1)))
        assert lab.labels == (1, 2, 3, 4)

    def test_disconnected_rejected(self):
        with pytest.raises(NotConnected):
            simulate(build_graph(4, [(0, 1), (2, 3)]), Schedule((0,)))


class TestValidateSequence:
    def test_two_source_pair(self):
        lab = validate_sequence(gen_path(4), BurningSequence((1, 3)))
        assert lab.total_rounds == 2
        assert lab.as_dict() == {0: 2, 1: 1, 2: 2, 3: 2}

    def test_too_short(self):
        with pytest.raises(LengthMismatch) as exc:
            validate_sequence(gen_path(4), BurningSequence((1,)))
        assert exc.value.actual_rounds == 3

    def test_trailing_sources_stretch_the_process(self):
        with pytest.raises(LengthMismatch) as exc:
            validate_sequence(gen_path(4), BurningSequence((0, 1, 2)))
        assert exc.value.actual_rounds == 4

    def test_source_burned_at_round_start(self):
        with pytest.raises(SourceAlreadyBurned) as exc:
            validate_sequence(gen_path(3), BurningSequence((0, 2, 1)))
        assert (exc.value.round_no, exc.value.vertex) == (3, 1)

    def test_duplicate_sources_rejected_by_type(self):
        with pytest.raises(ValueError):
            BurningSequence((0, 0))


class TestCanonicalize:
    def test_fills_empty_round_with_lowest_id(self):
        seq = canonicalize(gen_path(3), (1, EMPTY))
        assert seq.sources == (1, 0)

    def test_identity_on_full_schedule(self):
        seq = canonicalize(gen_path(4), (1, 3))
        assert seq.sources == (1, 3)

    def test_single_vertex(self):
        assert canonicalize(build_graph(1, []), (0,)).sources == (0,)

    def test_pads_past_schedule_end(self):
        seq = canonicalize(gen_path(9), (4,))
        assert len(seq) == 5
        assert seq.sources[0] == 4


class TestGreedySchedule:
    def test_keeps_live_proposals(self):
        sched, lab = greedy_schedule(gen_path(4), [1, 3])
        assert sched.rounds == (1, 3)
        assert lab.total_rounds == 2

    def test_drops_burned_proposal(self):
        # vertex 1 is burned in round 1; the round-2 proposal must drop out
        sched, lab = greedy_schedule(gen_path(4), [1, 1])
        assert sched.rounds[1] is None
        assert lab.total_rounds == 3


@settings(max_examples=120, deadline=None)
@given(trees(min_n=1, max_n=20), st.integers(0, 2**32))
def test_canonicalize_reproduces_process(t, seed):
    schedule = random_valid_schedule(t, seed)
    lab = simulate(t, schedule)
    seq = canonicalize(t, schedule)
    lab2 = validate_sequence(t, seq)
    assert lab2 == lab
    for r, src in enumerate(schedule.rounds, start=1):
        if src is not None:
            assert seq.sources[r - 1] == src


@settings(max_examples=120, deadline=None)
@given(trees(min_n=1, max_n=20), st.integers(0, 2**32))
def test_label_recurrence(t, seed):
    schedule = random_valid_schedule(t, seed)
    lab = simulate(t, schedule)
    assert max(lab.labels) == lab.total_rounds
    assert min(lab.labels) == 1
    source_round = {v: r for r, v in enumerate(schedule.rounds, start=1) if v is not None}
    for v in range(t.n):
        nb_min = min((lab.labels[u] for u in t.neighbors(v)), default=None)
        if v in source_round:
            expected = source_round[v] if nb_min is None else min(source_round[v], nb_min + 1)
        else:
            expected = nb_min + 1
        assert lab.labels[v] == expected


@settings(max_examples=120, deadline=None)
@given(trees(min_n=1, max_n=20), st.integers(0, 2**32))
def test_labels_match_closed_form_over_distances(t, seed):
    # independent oracle: a vertex burns in the earliest round any source
    # can reach it, i.e. min over sources placed at round r of r + dist
    from treeburn import bfs_distances

    schedule = random_valid_schedule(t, seed)
    lab = simulate(t, schedule)
    placed = [(r, v) for r, v in enumerate(schedule.rounds, start=1) if v is not None]
    for w in range(t.n):
        expected = min(r + bfs_distances(t.graph, v)[w] for r, v in placed)
        assert lab.labels[w] == expected


@settings(max_examples=120, deadline=None)
@given(trees(min_n=1, max_n=20), st.integers(0, 2**32))
def test_monotone_burning_every_round_burns_something(t, seed):
    lab = simulate(t, random_valid_schedule(t, seed))
    rounds_hit = set(lab.labels)
    assert rounds_hit == set(range(1, lab.total_rounds + 1))
    for v in range(t.n):
        assert 1 <= lab.labels[v] <= lab.total_rounds
