"""Union and diagonal concatenation of two-way automata, and the L1/L2 fixtures."""

from __future__ import annotations

from functools import lru_cache
from typing import List

from .automaton import (
    Automaton2D,
    Transition,
    Variant,
    VariantError,
    ibr_convert,
    make_automaton,
    rename_states,
    transpose_automaton,
)
from .grid import BOUNDARY, Grid, subgrid
from .nfa import Edge, Nfa, epsilon_removal, trim
from .projection import fresh_name, guessed_part, projection_enfa, sink_loops
from .simulator import InputError, accepts


def _require_2nfa(*automata: Automaton2D) -> None:
    for a in automata:
        if a.variant.ways != 2:
            raise VariantError(f"needs two-way automata, got {a.variant}")
        if a.variant.deterministic:
            raise VariantError("needs nondeterministic automata; see as_nondeterministic()")


def _disjoint(a: Automaton2D, b: Automaton2D):
    if set(a.states) & set(b.states):
        return rename_states(a, "a."), rename_states(b, "b.")
    return a, b


def union_automaton(a: Automaton2D, b: Automaton2D) -> Automaton2D:
    """Automaton for ``L(a) | L(b)`` with ``m + n + 1`` counted states."""
    _require_2nfa(a, b)
    a, b = _disjoint(a, b)
    taken = set(a.states) | set(b.states)
    start = fresh_name("q0C", taken)
    accept = fresh_name("accC", taken | {start})
    alphabet = tuple(dict.fromkeys(a.alphabet + b.alphabet))

    def retarget(x: Automaton2D, t: Transition) -> Transition:
        return t._replace(target=accept) if t.target == x.accept else t

    trans: List[Transition] = []
    for x in (a, b):
        if x.initial == x.accept:
            trans.extend(Transition(start, s, accept, "N") for s in alphabet + (BOUNDARY,))
        trans.extend(retarget(x, t)._replace(source=start)
                     for t in x.transitions if t.source == x.initial)
    for x in (a, b):
        trans.extend(retarget(x, t) for t in x.transitions)
    states = (start, *a.working_states, *b.working_states, accept)
    return Automaton2D(
        states=states,
        alphabet=alphabet,
        variant=Variant(2, False, a.variant.ibr and b.variant.ibr),
        transitions=tuple(dict.fromkeys(trans)),
        initial=start,
        accept=accept,
    )


def union_projection_nfa(a: Automaton2D, b: Automaton2D, axis: str = "row") -> Nfa:
    """NFA for ``rowp(L(a) | L(b))`` with each language over its own alphabet.

    This is the flag-doubled union automaton, except that columns the 2D
    head never reads are filled from the alphabet of the component that is
    running.  With equal alphabets it recognizes the projection of
    :func:`union_automaton`; with disjoint ones the plain union automaton
    would also accept first rows mixing both alphabets.
    """
    _require_2nfa(a, b)
    if axis not in ("row", "col"):
        raise ValueError(f"axis must be 'row' or 'col', not {axis!r}")
    a, b = _disjoint(a, b)
    if axis == "col":
        a, b = transpose_automaton(a), transpose_automaton(b)
    parts = [epsilon_removal(projection_enfa(ibr_convert(x), sink=f"{tag}acc*"))
             for x, tag in ((a, "a."), (b, "b."))]
    taken = {q for n in parts for q in n.states}
    start = fresh_name("q0C/0", taken)
    alphabet = tuple(dict.fromkeys(a.alphabet + b.alphabet))
    edges = [Edge(start, e.symbol, e.target) for n in parts for e in n.transitions
             if e.source == n.initial]
    edges += [e for n in parts for e in n.transitions]
    finals = {q for n in parts for q in n.finals}
    if any(n.initial in n.finals for n in parts):
        finals.add(start)
    combined = Nfa(
        states=(start,) + tuple(q for n in parts for q in n.states),
        alphabet=alphabet,
        transitions=tuple(dict.fromkeys(edges)),
        initial=start,
        finals=frozenset(finals),
        dummies=frozenset(q for n in parts for q in n.dummies),
    )
    return trim(combined)


def diag_concat_member(a: Automaton2D, b: Automaton2D, g: Grid) -> bool:
    """Is ``g`` in ``L(a) ⊘ L(b)``?  Both corner blocks must be non-empty."""
    _require_2nfa(a, b)
    if set(a.alphabet) != set(b.alphabet):
        raise InputError("diagonal concatenation needs a shared alphabet")
    m, n = g.shape

    @lru_cache(maxsize=None)
    def top(i, j):
        return accepts(a, subgrid(g, 1, 1, i, j))

    @lru_cache(maxsize=None)
    def bottom(i, j):
        return accepts(b, subgrid(g, i + 1, j + 1, m - i, n - j))

    return any(top(i, j) and bottom(i, j) for i in range(1, m) for j in range(1, n))


def diag_concat_projection_nfa(a: Automaton2D, b: Automaton2D, axis: str = "row") -> Nfa:
    """Epsilon-free NFA for the row (column) projection of ``L(a) ⊘ L(b)``.

    Phase 1 is the flag-doubled projection NFA of ``a``.  From any phase-1
    state that may end ``w``'s first row, reading one more symbol starts
    phase 2: a copy of ``b`` on guessed cells, which only counts columns.
    """
    _require_2nfa(a, b)
    if set(a.alphabet) != set(b.alphabet):
        raise InputError("diagonal concatenation needs a shared alphabet")
    if axis not in ("row", "col"):
        raise ValueError(f"axis must be 'row' or 'col', not {axis!r}")
    if axis == "col":
        a, b = transpose_automaton(a), transpose_automaton(b)
    a, b = ibr_convert(a), ibr_convert(b)
    alphabet = a.alphabet

    phase1 = epsilon_removal(projection_enfa(a, sink="w*"))
    taken = set(phase1.states)
    accept2 = fresh_name("v*", taken)
    name2 = lambda q: fresh_name(f"v:{q}", taken)
    entry = accept2 if b.initial == b.accept else name2(b.initial)

    edges = list(phase1.transitions)
    edges += [Edge(r, x, entry) for r in phase1.states if r in phase1.finals for x in alphabet]
    low, finals2 = guessed_part(b, name2, accept2, alphabet)
    edges += low + sink_loops(accept2, alphabet)
    states = list(phase1.states) + [name2(q) for q in b.working_states] + [accept2]

    initial = phase1.initial
    if initial in phase1.finals:
        # w must be non-empty: a start copy without the switch edges
        initial = fresh_name("start", set(states))
        states.insert(0, initial)
        edges = [Edge(initial, e.symbol, e.target) for e in phase1.transitions
                 if e.source == phase1.initial] + edges

    combined = Nfa(
        states=tuple(states),
        alphabet=alphabet,
        transitions=tuple(dict.fromkeys(edges)),
        initial=initial,
        finals=frozenset(finals2 | {accept2}),
        dummies=phase1.dummies | {accept2},
    )
    return trim(epsilon_removal(combined))


def witness_l1l2(which: str) -> Automaton2D:
    """Deterministic two-way automata for the L1 / L2 fixtures.

    L1: 2x2 words whose first row is ``1 1``; L2: first column ``1 1``.  A
    two-way head can pin only one dimension exactly, so L1's automaton fixes
    the width at 2 and L2's fixes the height at 2 (the other side must be at
    least 2).  On 2x2 inputs both are exact.
    """
    if which == "L1":
        trans = [
            ("s0", "1", "s1", "R"),
            ("s1", "1", "s2", "D"),
            ("s2", "0", "s3", "R"),
            ("s2", "1", "s3", "R"),
            ("s3", "#", "acc", "N"),
        ]
    elif which == "L2":
        trans = [
            ("s0", "1", "s1", "D"),
            ("s1", "1", "s2", "R"),
            ("s2", "0", "s3", "D"),
            ("s2", "1", "s3", "D"),
            ("s3", "#", "acc", "N"),
        ]
    else:
        raise ValueError("which must be 'L1' or 'L2'")
    return make_automaton(trans, alphabet=("0", "1"), deterministic=True, initial="s0")
