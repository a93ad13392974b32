import pytest
from hypothesis import given, settings

from conftest import automata, words
from gridlang import (
    accepts_some_completion,
    bounded_equivalent,
    enumerate_language,
    extract_projection_nfa,
    lpr_member,
    make_automaton,
    nfa_accepts,
    nfa_from_predicate,
    state_count,
    transpose_automaton,
    union_automaton,
    witness_an,
    witness_bm,
)
from gridlang.automaton import VariantError, ibr_convert
from gridlang.projection import projection_enfa, saturated_moves


@pytest.mark.parametrize("n", [2, 3, 4])
def test_witness_projection_language(n):
    nfa = extract_projection_nfa(witness_an(n))
    assert nfa.size <= 2 * n
    assert not nfa.has_epsilon
    for w in words("01", 3 * n + 1):
        assert nfa_accepts(nfa, w) == lpr_member(w, n), w


def test_witness_one_accepts_everything():
    nfa = extract_projection_nfa(witness_an(1))
    assert enumerate_language(nfa, 4) == list(words("01", 4))


def test_literal_witness_projection():
    n = 3
    nfa = extract_projection_nfa(witness_an(n, literal=True))
    for w in words("01", 7):
        expected = not w or (len(w) % n == 0 and w[:n] == ("0",) * n)
        assert nfa_accepts(nfa, w) == expected


def test_bm_projection_language():
    nfa = extract_projection_nfa(witness_bm(2))
    for w in words("23", 6):
        assert nfa_accepts(nfa, w) == lpr_member(w, 2, ("2", "3"))


def test_single_row_automaton():
    # accepts exactly the one-row words of odd length over {a, b}
    a = make_automaton([
        ("e", "a", "o", "R"), ("e", "b", "o", "R"),
        ("o", "a", "e", "R"), ("o", "b", "e", "R"),
        ("o", "#", "acc", "N"),
    ], alphabet="ab", initial="e")
    nfa = extract_projection_nfa(a)
    evident = nfa_from_predicate("ab", 8, lambda w: len(w) % 2 == 1)
    assert bounded_equivalent(nfa, evident, 8)
    assert all(not q.endswith("/1") for q in nfa.states)


def test_union_projection_size():
    u = union_automaton(witness_an(2), witness_an(2))
    nfa = extract_projection_nfa(u)
    assert nfa.size <= 2 * (2 + 2 + 1)


def test_bottom_boundary_acceptance_with_columns_left():
    # go down once, accept on the bottom boundary: every 1-row word starting with a
    a = make_automaton([("q0", "a", "q1", "D"), ("q1", "#", "acc", "N")], alphabet="ab")
    nfa = extract_projection_nfa(a)
    for w in words("ab", 4):
        assert nfa_accepts(nfa, w) == (len(w) >= 1 and w[0] == "a")
    assert nfa.size <= 2 * state_count(a)


def test_no_move_chains_keep_the_symbol():
    # q0 reads a, stays put in q1; q1 must now read the same a to continue
    a = make_automaton([
        ("q0", "a", "q1", "N"),
        ("q1", "a", "q2", "R"),
        ("q1", "b", "q2", "R"),
        ("q2", "#", "acc", "N"),
    ], alphabet="ab")
    nfa = extract_projection_nfa(a)
    assert enumerate_language(nfa, 3) == [("a",)]
    moves, acc = saturated_moves(a, "q0", "a")
    assert moves == {("q2", "R")} and not acc


def test_initial_accepting_automaton():
    a = make_automaton([], alphabet="ab", initial="acc", accept="acc", states=["acc"])
    nfa = extract_projection_nfa(a)
    assert nfa.size == 0
    assert enumerate_language(nfa, 2) == list(words("ab", 2))


def test_requires_two_way():
    with pytest.raises(VariantError):
        extract_projection_nfa(make_automaton([], alphabet="a", ways=3))
    with pytest.raises(ValueError):
        extract_projection_nfa(witness_an(2), axis="diag")


def test_enfa_has_epsilon_moves_before_removal():
    a = ibr_convert(witness_an(2))
    e = projection_enfa(a)
    assert e.has_epsilon
    assert e.size == 2 * state_count(a)


@settings(max_examples=80, deadline=None)
@given(automata(max_states=3))
def test_extraction_matches_completion_oracle(a):
    nfa = extract_projection_nfa(a)
    assert nfa.size <= 2 * state_count(a)
    assert not nfa.has_epsilon
    for w in words("01", 5):
        assert nfa_accepts(nfa, w) == accepts_some_completion(a, w), w


@settings(max_examples=40, deadline=None)
@given(automata(max_states=3))
def test_column_axis_is_row_axis_of_transpose(a):
    col = extract_projection_nfa(a, "col")
    row_t = extract_projection_nfa(transpose_automaton(a), "row")
    assert col == row_t
    for w in words("01", 4):
        assert nfa_accepts(col, w) == accepts_some_completion(transpose_automaton(a), w)


def test_column_projection_of_witness():
    # the transposed witness counts rows instead of columns
    t = transpose_automaton(witness_an(2))
    nfa = extract_projection_nfa(t, "col")
    for w in words("01", 6):
        assert nfa_accepts(nfa, w) == lpr_member(w, 2)
