"""Two-dimensional automata: model, variants, validation and normal forms."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Dict, Iterable, List, NamedTuple, Tuple

from .grid import BOUNDARY, FormatError, GridError, check_symbol, iter_content_lines

MOVES = {"U": (-1, 0), "D": (1, 0), "L": (0, -1), "R": (0, 1), "N": (0, 0)}

WAYS = {
    4: frozenset("UDLR"),
    3: frozenset("DLR"),
    2: frozenset("DR"),
}


class AutomatonError(ValueError):
    pass


class DeterminismError(AutomatonError):
    pass


class DirectionError(AutomatonError):
    pass


class AcceptTransitionError(AutomatonError):
    pass


class IBRError(AutomatonError):
    pass


class VariantError(AutomatonError):
    pass


class Transition(NamedTuple):
    source: str
    symbol: str
    target: str
    direction: str


@dataclass(frozen=True)
class Variant:
    ways: int = 4
    deterministic: bool = False
    ibr: bool = False

    def __post_init__(self):
        if self.ways not in WAYS:
            raise VariantError(f"unsupported number of ways: {self.ways}")
        if self.ibr and self.ways != 2:
            raise VariantError("IBR acceptance is only defined for two-way automata")

    @property
    def allowed(self) -> frozenset:
        return WAYS[self.ways] | {"N"}

    @classmethod
    def parse(cls, text: str) -> "Variant":
        parts = text.split("-")
        if len(parts) not in (2, 3) or parts[0] not in ("2DFA", "2NFA"):
            raise FormatError(f"bad variant {text!r}")
        if parts[1] not in ("2W", "3W", "4W"):
            raise FormatError(f"bad variant {text!r}")
        if len(parts) == 3 and parts[2] != "IBR":
            raise FormatError(f"bad variant {text!r}")
        try:
            return cls(int(parts[1][0]), parts[0] == "2DFA", len(parts) == 3)
        except VariantError as exc:
            raise FormatError(str(exc)) from None

    def __str__(self) -> str:
        s = f"2{'D' if self.deterministic else 'N'}FA-{self.ways}W"
        return s + "-IBR" if self.ibr else s


@dataclass(frozen=True)
class Automaton2D:
    """A two-dimensional automaton with a partial transition relation.

    Transitions are kept in declaration order; that order breaks ties when
    the simulator picks a shortest accepting trace.
    """

    states: Tuple[str, ...]
    alphabet: Tuple[str, ...]
    variant: Variant
    transitions: Tuple[Transition, ...]
    initial: str
    accept: str

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "transitions", tuple(Transition(*t) for t in self.transitions))

    @cached_property
    def table(self) -> Dict[Tuple[str, str], List[Tuple[str, str]]]:
        table: Dict[Tuple[str, str], List[Tuple[str, str]]] = {}
        for t in self.transitions:
            table.setdefault((t.source, t.symbol), []).append((t.target, t.direction))
        return table

    def moves(self, state: str, symbol: str) -> List[Tuple[str, str]]:
        return self.table.get((state, symbol), [])

    @property
    def working_states(self) -> Tuple[str, ...]:
        return tuple(q for q in self.states if q != self.accept)


def validate(a: Automaton2D) -> None:
    """Raise the first violated invariant of ``a``; return ``None`` if valid."""
    if len(set(a.states)) != len(a.states):
        raise AutomatonError("duplicate state names")
    states = set(a.states)
    if a.initial not in states or a.accept not in states:
        raise AutomatonError("initial and accept must be declared states")
    for s in a.alphabet:
        try:
            check_symbol(s)
        except GridError as exc:
            raise AutomatonError(str(exc)) from None
    symbols = set(a.alphabet) | {BOUNDARY}
    seen = {}
    for t in a.transitions:
        if t.source not in states or t.target not in states:
            raise AutomatonError(f"undeclared state in {t}")
        if t.symbol not in symbols:
            raise AutomatonError(f"undeclared symbol in {t}")
        if t.direction not in a.variant.allowed:
            raise DirectionError(f"direction {t.direction} not allowed for {a.variant}: {t}")
        if t.source == a.accept:
            raise AcceptTransitionError(f"transition leaves the accept state: {t}")
        if a.variant.deterministic:
            key = (t.source, t.symbol)
            if key in seen and seen[key] != (t.target, t.direction):
                raise DeterminismError(f"two moves for {key}")
            seen[key] = (t.target, t.direction)
        if a.variant.ibr and t.symbol == BOUNDARY and t.target != a.accept:
            raise IBRError(f"boundary transition must enter the accept state: {t}")


def state_count(a: Automaton2D) -> int:
    """Number of states, not counting the accept state."""
    return len(a.states) - (a.accept in a.states)


def _require_two_way(a: Automaton2D) -> None:
    if a.variant.ways != 2:
        raise VariantError(f"operation needs a two-way automaton, got {a.variant}")


def boundary_accepting_states(a: Automaton2D) -> frozenset:
    """States from which the accept state is reachable using only moves on ``#``."""
    back: Dict[str, List[str]] = {}
    for t in a.transitions:
        if t.symbol == BOUNDARY:
            back.setdefault(t.target, []).append(t.source)
    found = {a.accept}
    queue = deque([a.accept])
    while queue:
        q = queue.popleft()
        for p in back.get(q, ()):
            if p not in found:
                found.add(p)
                queue.append(p)
    found.discard(a.accept)
    return frozenset(found)


def ibr_convert(a: Automaton2D) -> Automaton2D:
    """Equivalent IBR-accepting automaton over the same state set.

    Once a two-way head reads ``#`` it only ever reads ``#`` again, so each
    boundary transition block collapses to "accept" or nothing.
    """
    _require_two_way(a)
    good = boundary_accepting_states(a)
    out: List[Transition] = []
    emitted = set()
    for t in a.transitions:
        if t.symbol != BOUNDARY:
            out.append(t)
            continue
        q = t.source
        if q in emitted:
            continue
        emitted.add(q)
        if q not in good:
            continue
        direct = [u for u in a.transitions
                  if u.source == q and u.symbol == BOUNDARY and u.target == a.accept]
        out.extend(direct or [Transition(q, BOUNDARY, a.accept, "N")])
    return replace(a, transitions=tuple(out), variant=replace(a.variant, ibr=True))


_SWAP = {"D": "R", "R": "D", "N": "N"}


def transpose_automaton(a: Automaton2D) -> Automaton2D:
    _require_two_way(a)
    return replace(a, transitions=tuple(t._replace(direction=_SWAP[t.direction])
                                        for t in a.transitions))


def as_nondeterministic(a: Automaton2D) -> Automaton2D:
    return replace(a, variant=replace(a.variant, deterministic=False))


def rename_states(a: Automaton2D, prefix: str) -> Automaton2D:
    f = (prefix + "{}").format
    return Automaton2D(
        states=tuple(f(q) for q in a.states),
        alphabet=a.alphabet,
        variant=a.variant,
        transitions=tuple(Transition(f(t.source), t.symbol, f(t.target), t.direction)
                          for t in a.transitions),
        initial=f(a.initial),
        accept=f(a.accept),
    )


def parse_automaton(text: str) -> Automaton2D:
    fields = {}
    transitions = []
    for lineno, tokens in iter_content_lines(text):
        key, rest = tokens[0], tokens[1:]
        if key == "trans":
            if len(rest) != 4:
                raise FormatError(f"line {lineno}: trans needs 4 fields")
            transitions.append(Transition(*rest))
        elif key in ("variant", "alphabet", "states", "initial", "accept"):
            if key in fields:
                raise FormatError(f"line {lineno}: duplicate '{key}'")
            fields[key] = rest
        else:
            raise FormatError(f"line {lineno}: unknown keyword {key!r}")
    missing = {"variant", "alphabet", "states", "initial", "accept"} - fields.keys()
    if missing:
        raise FormatError(f"missing {sorted(missing)}")
    for key in ("variant", "initial", "accept"):
        if len(fields[key]) != 1:
            raise FormatError(f"'{key}' takes exactly one value")
    return Automaton2D(
        states=tuple(fields["states"]),
        alphabet=tuple(fields["alphabet"]),
        variant=Variant.parse(fields["variant"][0]),
        transitions=tuple(transitions),
        initial=fields["initial"][0],
        accept=fields["accept"][0],
    )


def format_automaton(a: Automaton2D) -> str:
    lines = [
        f"variant {a.variant}",
        " ".join(["alphabet", *a.alphabet]),
        " ".join(["states", *a.states]),
        f"initial {a.initial}",
        f"accept {a.accept}",
    ]
    lines.extend(f"trans {t.source} {t.symbol} {t.target} {t.direction}" for t in a.transitions)
    return "\n".join(lines) + "\n"


def make_automaton(transitions: Iterable[Tuple[str, str, str, str]], *, alphabet,
                   ways: int = 2, deterministic: bool = False, initial: str = "q0",
                   accept: str = "acc", states=None) -> Automaton2D:
    """Convenience constructor; states default to those mentioned, in order."""
    transitions = [Transition(*t) for t in transitions]
    if states is None:
        states = [initial]
        for t in transitions:
            for q in (t.source, t.target):
                if q not in states:
                    states.append(q)
        if accept not in states:
            states.append(accept)
    return Automaton2D(tuple(states), tuple(alphabet), Variant(ways, deterministic),
                       tuple(transitions), initial, accept)
