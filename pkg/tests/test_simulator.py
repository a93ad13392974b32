import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import automata, grids, literal_completion, random_automaton, small_grids
from gridlang import (
    EMPTY_GRID,
    Grid,
    InputError,
    ResourceLimitError,
    accepting_trace,
    accepts,
    accepts_some_completion,
    default_max_rows,
    make_automaton,
    transpose,
    transpose_automaton,
    unary_grid,
    VariantError,
    witness_an,
)
from gridlang.simulator import Configuration, step

A3 = witness_an(3)


def test_accepts_examples():
    assert accepts(A3, Grid.from_rows(["000"]))
    assert accepts(A3, EMPTY_GRID)
    assert not accepts(A3, Grid.from_rows(["00"]))


def test_accepting_trace_examples():
    t = accepting_trace(A3, Grid.from_rows(["000"]))
    assert len(t) == 4
    assert t.lines() == ["q0 1 1 R", "q1 1 2 R", "q2 1 3 R", "q0 1 4 N", "acc 1 4 -"]
    assert accepting_trace(A3, Grid.from_rows(["00"])) is None
    assert accepting_trace(A3, EMPTY_GRID).lines() == ["q0 1 1 N", "acc 1 1 -"]


def test_accepting_trace_downward_witness():
    # 0 0 1 / 0 1 0: goes down after two columns, finishes on row 2
    g = Grid.from_rows(["001", "010"])
    t = accepting_trace(witness_an(3), g)
    assert t is not None
    assert t.configurations[-1].state == "acc"
    assert "D" in t.moves


def test_alphabet_mismatch():
    with pytest.raises(InputError):
        accepts(A3, Grid.from_rows(["0a"]))
    with pytest.raises(InputError):
        accepts_some_completion(A3, "0a")


def test_blocked_moves_stay_in_frame():
    # R on the right boundary keeps the head in column n+1
    a = make_automaton([("q0", "a", "q0", "R"), ("q0", "#", "q1", "R"), ("q1", "#", "acc", "N")],
                       alphabet="a")
    t = accepting_trace(a, unary_grid(1, 2))
    assert [c.col for c in t.configurations] == [1, 2, 3, 3, 3]


def test_four_way_walk():
    # walk right to the boundary, come back left, then accept on the left boundary
    a = make_automaton([
        ("go", "a", "go", "R"),
        ("go", "#", "back", "L"),
        ("back", "a", "back", "L"),
        ("back", "#", "acc", "N"),
    ], alphabet="a", ways=4, deterministic=True, initial="go")
    assert accepts(a, unary_grid(2, 3))
    t = accepting_trace(a, unary_grid(1, 2))
    assert [c.col for c in t.configurations] == [1, 2, 3, 2, 1, 0, 0]


def test_n_loops_terminate():
    a = make_automaton([("q0", "a", "q0", "N"), ("q0", "a", "q1", "N")], alphabet="a")
    assert not accepts(a, unary_grid(1, 1))


def test_resource_limit(monkeypatch):
    monkeypatch.setenv("GRIDLANG_MAX_CONFIGS", "5")
    a = make_automaton([("q0", "a", "q0", "R")], alphabet="a")
    with pytest.raises(ResourceLimitError):
        accepts(a, unary_grid(1, 20))
    with pytest.raises(ResourceLimitError):
        accepts_some_completion(a, "a" * 20)


def _replay(a, g, t):
    assert t.configurations[0] == Configuration(a.initial, 1, 1)
    for c, d, nxt in zip(t.configurations, t.moves, t.configurations[1:]):
        assert (d, nxt) in list(step(a, g, c))
    assert t.configurations[-1].state == a.accept


@settings(max_examples=60, deadline=None)
@given(automata(max_states=3), grids(max_rows=3, max_cols=3))
def test_trace_replays_and_is_monotone(a, g):
    t = accepting_trace(a, g)
    assert (t is not None) == accepts(a, g)
    if t is None:
        return
    _replay(a, g, t)
    for c, d, nxt in zip(t.configurations, t.moves, t.configurations[1:]):
        assert nxt.row >= c.row and nxt.col >= c.col
        if d != "N" and (nxt.row, nxt.col) != (c.row, c.col):
            assert (nxt.row - c.row) + (nxt.col - c.col) == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([2, 3, 4]))
def test_branch_order_independence(seed, ways):
    rng = random.Random(seed)
    a = random_automaton(rng, rng.randint(1, 3), ways=ways)
    shuffled = list(a.transitions)
    rng.shuffle(shuffled)
    b = a.__class__(a.states, a.alphabet, a.variant, tuple(shuffled), a.initial, a.accept)
    for g in small_grids(2, 3):
        assert accepts(a, g) == accepts(b, g)
        t1, t2 = accepting_trace(a, g), accepting_trace(b, g)
        assert (t1 is None) == (t2 is None)
        if t1 is not None:
            assert len(t1) == len(t2)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_deterministic_runs_are_unique(seed):
    rng = random.Random(seed)
    a = random_automaton(rng, rng.randint(1, 3), deterministic=True)
    for g in small_grids(2, 3):
        c = Configuration(a.initial, 1, 1)
        for _ in range(50):
            succ = list(step(a, g, c))
            assert len(succ) <= 1
            if not succ:
                break
            c = succ[0][1]


@settings(max_examples=30, deadline=None)
@given(automata(max_states=3))
def test_transposed_acceptance(a):
    t = transpose_automaton(a)
    for g in small_grids(3, 2):
        assert accepts(t, transpose(g)) == accepts(a, g)


def test_completion_examples():
    assert accepts_some_completion(A3, "000", 1)
    # 001 = 0^2 1 is a length-3 member of 0^2(0+1)((0+1)^3)* + eps
    assert accepts_some_completion(A3, "001", 3)
    assert accepts_some_completion(A3, "001000", 3)
    assert not accepts_some_completion(A3, "010", 3)
    assert not accepts_some_completion(A3, "0000", 3)
    assert accepts_some_completion(A3, "")


def test_completion_literal_witness_examples():
    lit = witness_an(3, literal=True)
    assert not accepts_some_completion(lit, "001", 3)
    assert accepts_some_completion(lit, "000100", 3)


def test_completion_wildcards():
    assert accepts_some_completion(A3, [None, None, None])
    assert not accepts_some_completion(A3, [None, "1", None])
    assert not accepts_some_completion(A3, [None] * 4)


def test_completion_zero_rows():
    assert not accepts_some_completion(A3, "000", 0)


def test_default_max_rows():
    assert default_max_rows(A3, 4) == 3 * 6 + 1


@settings(max_examples=60, deadline=None)
@given(automata(max_states=3), st.lists(st.sampled_from("01"), max_size=3), st.integers(1, 3))
def test_completion_matches_literal_enumeration(a, w, rows):
    assert accepts_some_completion(a, w, rows) == literal_completion(a, w, rows)


def test_completion_rejects_non_two_way():
    with pytest.raises(VariantError):
        accepts_some_completion(make_automaton([], alphabet="a", ways=3), "a")

