"""Projection NFAs of two-way 2D automata.

The NFA reads the first row.  A state ``q/0`` means the 2D head is still in
row 1, on the column after the consumed prefix; ``q/1`` means the head has
gone down and sits in the column of the last consumed symbol, where every
cell content is a free guess.
"""

from __future__ import annotations

from typing import List, Set, Tuple

from .automaton import Automaton2D, ibr_convert, transpose_automaton
from .grid import BOUNDARY
from .nfa import Edge, Nfa, epsilon_removal, trim


def saturated_moves(a: Automaton2D, q: str, symbol: str) -> Tuple[Set[Tuple[str, str]], bool]:
    """Moves out of the current cell, following no-move chains first.

    Returns the set of ``(target, direction)`` with direction D or R and a
    non-accept target, and whether the accept state is reachable without
    leaving the cell.
    """
    seen = {q}
    stack = [q]
    out: Set[Tuple[str, str]] = set()
    accepted = False
    while stack:
        p = stack.pop()
        for target, d in a.moves(p, symbol):
            if target == a.accept:
                accepted = True
            elif d == "N":
                if target not in seen:
                    seen.add(target)
                    stack.append(target)
            else:
                out.add((target, d))
    return out, accepted


def boundary_ok(a: Automaton2D) -> Set[str]:
    return {q for q in a.working_states if saturated_moves(a, q, BOUNDARY)[1]}


def fresh_name(base: str, taken) -> str:
    name = base
    while name in taken:
        name += "'"
    return name


def top_row_part(a: Automaton2D, name, sink: str) -> Tuple[List[Edge], Set[str]]:
    """Edges and end-of-input finals for the row-1 copy of ``a``.

    ``name(q, flag)`` maps a 2D state and flag to an NFA state name.
    """
    edges: List[Edge] = []
    finals: Set[str] = set()
    hash_ok = boundary_ok(a)
    for q in a.working_states:
        src = name(q, 0)
        for s in a.alphabet:
            moves, accepted = saturated_moves(a, q, s)
            if accepted:
                edges.append(Edge(src, s, sink))
            for t, d in sorted(moves):
                if d == "R":
                    edges.append(Edge(src, s, name(t, 0)))
                else:
                    edges.append(Edge(src, s, name(t, 1)))
                    if t in hash_ok:
                        edges.append(Edge(src, s, sink))
        if q in hash_ok:
            finals.add(src)
    return edges, finals


def guessed_part(a: Automaton2D, name, sink: str, alphabet) -> Tuple[List[Edge], Set[str]]:
    """Edges and finals for a copy of ``a`` whose cells are all guessed.

    Rightward moves consume an arbitrary symbol, downward moves are epsilon.
    A downward move into a state that accepts on ``#`` may have hit the
    bottom boundary, so it can also jump to ``sink``.
    """
    edges: List[Edge] = []
    finals: Set[str] = set()
    hash_ok = boundary_ok(a)
    for q in a.working_states:
        src = name(q)
        targets = set()
        accepted = False
        for s in a.alphabet:
            moves, acc = saturated_moves(a, q, s)
            accepted |= acc
            targets |= moves
        if accepted:
            edges.append(Edge(src, None, sink))
        for t, d in sorted(targets):
            if d == "R":
                edges.extend(Edge(src, x, name(t)) for x in alphabet)
                if t in hash_ok:
                    finals.add(src)
            else:
                edges.append(Edge(src, None, name(t)))
                if t in hash_ok:
                    edges.append(Edge(src, None, sink))
    return edges, finals


def sink_loops(sink: str, alphabet) -> List[Edge]:
    return [Edge(sink, x, sink) for x in alphabet]


def projection_enfa(a: Automaton2D, sink: str = "acc*") -> Nfa:
    """Epsilon-NFA for the row projection of an IBR-normalised two-way ``a``."""
    alphabet = a.alphabet
    if a.initial == a.accept:
        return Nfa((sink,), alphabet, tuple(sink_loops(sink, alphabet)), sink,
                   frozenset([sink]), frozenset([sink]))
    sink = fresh_name(sink, {f"{q}/{f}" for q in a.states for f in (0, 1)})
    top, top_finals = top_row_part(a, lambda q, f: f"{q}/{f}", sink)
    low, low_finals = guessed_part(a, lambda q: f"{q}/1", sink, alphabet)
    states = [f"{q}/{f}" for f in (0, 1) for q in a.working_states] + [sink]
    return Nfa(
        states=tuple(states),
        alphabet=alphabet,
        transitions=tuple(top + low + sink_loops(sink, alphabet)),
        initial=f"{a.initial}/0",
        finals=frozenset(top_finals | low_finals | {sink}),
        dummies=frozenset([sink]),
    )


def extract_projection_nfa(a: Automaton2D, axis: str = "row") -> Nfa:
    """Epsilon-free NFA for the row (or column) projection of ``L(a)``."""
    if axis not in ("row", "col"):
        raise ValueError(f"axis must be 'row' or 'col', not {axis!r}")
    if axis == "col":
        a = transpose_automaton(a)
    a = ibr_convert(a)
    return trim(epsilon_removal(projection_enfa(a)))
