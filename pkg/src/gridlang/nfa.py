"""One-dimensional NFAs with optional epsilon moves."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .grid import FormatError, Word, as_word, iter_content_lines
from .simulator import InputError

EPS = None
_EPS_TOKEN = "eps"


class Edge(NamedTuple):
    source: str
    symbol: Optional[str]
    target: str


@dataclass(frozen=True)
class Nfa:
    """An NFA.  ``dummies`` names construction-added sink states (a final or
    non-final state looping on every symbol); they are not counted by
    :attr:`size`, mirroring the convention for the 2D accept state.
    """

    states: Tuple[str, ...]
    alphabet: Tuple[str, ...]
    transitions: Tuple[Edge, ...]
    initial: str
    finals: FrozenSet[str]
    dummies: FrozenSet[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "transitions", tuple(Edge(*t) for t in self.transitions))
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "dummies", frozenset(self.dummies))
        declared = set(self.states)
        if _EPS_TOKEN in self.alphabet:
            raise ValueError("'eps' is reserved")
        if self.initial not in declared or not self.finals <= declared or not self.dummies <= declared:
            raise ValueError("initial, finals and dummies must be declared states")
        for e in self.transitions:
            if e.source not in declared or e.target not in declared:
                raise ValueError(f"undeclared state in {e}")
            if e.symbol is not None and e.symbol not in self.alphabet:
                raise ValueError(f"undeclared symbol in {e}")

    @property
    def size(self) -> int:
        return len(self.states) - len(self.dummies)

    @cached_property
    def _delta(self) -> Dict[Tuple[str, Optional[str]], Tuple[str, ...]]:
        d: Dict[Tuple[str, Optional[str]], List[str]] = {}
        for e in self.transitions:
            d.setdefault((e.source, e.symbol), []).append(e.target)
        return {k: tuple(v) for k, v in d.items()}

    @property
    def has_epsilon(self) -> bool:
        return any(e.symbol is None for e in self.transitions)

    def closure(self, states: Iterable[str]) -> FrozenSet[str]:
        found = set(states)
        stack = list(found)
        while stack:
            q = stack.pop()
            for r in self._delta.get((q, None), ()):
                if r not in found:
                    found.add(r)
                    stack.append(r)
        return frozenset(found)

    def start(self) -> FrozenSet[str]:
        return self.closure([self.initial])

    def advance(self, current: FrozenSet[str], symbol: str) -> FrozenSet[str]:
        nxt = [r for q in current for r in self._delta.get((q, symbol), ())]
        return self.closure(nxt)

    def is_accepting(self, current: FrozenSet[str]) -> bool:
        return not self.finals.isdisjoint(current)


def nfa_accepts(n: Nfa, w: str | Sequence[str]) -> bool:
    w = as_word(w)
    bad = set(w) - set(n.alphabet)
    if bad:
        raise InputError(f"symbols {sorted(bad)} not in the NFA alphabet")
    current = n.start()
    for s in w:
        current = n.advance(current, s)
        if not current:
            return False
    return n.is_accepting(current)


def epsilon_removal(n: Nfa) -> Nfa:
    """Same states, no epsilon moves, same language."""
    if not n.has_epsilon:
        return n
    edges: List[Edge] = []
    seen = set()
    finals = set()
    for p in n.states:
        cl = n.closure([p])
        if not n.finals.isdisjoint(cl):
            finals.add(p)
        for e in n.transitions:
            if e.symbol is not None and e.source in cl:
                edge = Edge(p, e.symbol, e.target)
                if edge not in seen:
                    seen.add(edge)
                    edges.append(edge)
    return replace(n, transitions=tuple(edges), finals=frozenset(finals))


def trim(n: Nfa) -> Nfa:
    """Drop states that are unreachable or cannot reach a final state."""
    fwd: Dict[str, List[str]] = {}
    bwd: Dict[str, List[str]] = {}
    for e in n.transitions:
        fwd.setdefault(e.source, []).append(e.target)
        bwd.setdefault(e.target, []).append(e.source)

    def reach(seeds, graph):
        found = set(seeds)
        stack = list(found)
        while stack:
            q = stack.pop()
            for r in graph.get(q, ()):
                if r not in found:
                    found.add(r)
                    stack.append(r)
        return found

    keep = reach([n.initial], fwd) & reach(n.finals, bwd)
    keep.add(n.initial)
    return Nfa(
        states=tuple(q for q in n.states if q in keep),
        alphabet=n.alphabet,
        transitions=tuple(e for e in n.transitions if e.source in keep and e.target in keep),
        initial=n.initial,
        finals=n.finals & keep,
        dummies=n.dummies & keep,
    )


def _sorted_alphabet(*nfas: Nfa) -> Tuple[str, ...]:
    return tuple(sorted(set().union(*(n.alphabet for n in nfas))))


def find_counterexample(n1: Nfa, n2: Nfa, max_len: int) -> Optional[Word]:
    """Shortest, then lexicographically least, word of length <= ``max_len``
    on which the two NFAs disagree; ``None`` if there is none.
    """
    alphabet = _sorted_alphabet(n1, n2)
    empty: FrozenSet[str] = frozenset()

    def adv(n, cur, s):
        return n.advance(cur, s) if s in n.alphabet else empty

    start = (n1.start(), n2.start())
    seen = {start}
    level = [((), start)]
    for length in range(max_len + 1):
        for word, (s1, s2) in level:
            if n1.is_accepting(s1) != n2.is_accepting(s2):
                return word
        if length == max_len:
            break
        nxt = []
        for word, (s1, s2) in level:
            for a in alphabet:
                pair = (adv(n1, s1, a), adv(n2, s2, a))
                if pair not in seen:
                    seen.add(pair)
                    nxt.append((word + (a,), pair))
        level = nxt
    return None


def bounded_equivalent(n1: Nfa, n2: Nfa, max_len: int) -> bool:
    return find_counterexample(n1, n2, max_len) is None


def enumerate_language(n: Nfa, max_len: int) -> List[Word]:
    """Accepted words of length <= ``max_len`` in length-then-lexicographic order."""
    alphabet = tuple(sorted(n.alphabet))
    out: List[Word] = []
    level = [((), n.start())]
    for length in range(max_len + 1):
        out.extend(w for w, cur in level if n.is_accepting(cur))
        if length == max_len:
            break
        level = [(w + (a,), nxt) for w, cur in level for a in alphabet
                 for nxt in (n.advance(cur, a),) if nxt]
    return out


def nfa_from_predicate(alphabet: Sequence[str], max_len: int, predicate) -> Nfa:
    """Prefix-tree NFA accepting exactly the words of length <= ``max_len``
    satisfying ``predicate``.  Used to compare constructions with a formula.
    """
    alphabet = tuple(alphabet)
    states = ["t0"]
    edges = []
    finals = set()
    level = [((), "t0")]
    for length in range(max_len + 1):
        for w, q in level:
            if predicate(w):
                finals.add(q)
        if length == max_len:
            break
        nxt = []
        for w, q in level:
            for a in alphabet:
                r = f"t{len(states)}"
                states.append(r)
                edges.append(Edge(q, a, r))
                nxt.append((w + (a,), r))
        level = nxt
    return trim(Nfa(tuple(states), alphabet, tuple(edges), "t0", frozenset(finals)))


def parse_nfa(text: str) -> Nfa:
    fields = {}
    edges = []
    for lineno, tokens in iter_content_lines(text):
        key, rest = tokens[0], tokens[1:]
        if key == "trans":
            if len(rest) != 3:
                raise FormatError(f"line {lineno}: trans needs 3 fields")
            src, sym, dst = rest
            edges.append(Edge(src, None if sym == _EPS_TOKEN else sym, dst))
        elif key in ("alphabet", "states", "initial", "final", "dummy"):
            if key in fields:
                raise FormatError(f"line {lineno}: duplicate '{key}'")
            fields[key] = rest
        else:
            raise FormatError(f"line {lineno}: unknown keyword {key!r}")
    for key in ("alphabet", "states", "initial", "final"):
        if key not in fields:
            raise FormatError(f"missing '{key}'")
    if len(fields["initial"]) != 1:
        raise FormatError("'initial' takes exactly one state")
    try:
        return Nfa(tuple(fields["states"]), tuple(fields["alphabet"]), tuple(edges),
                   fields["initial"][0], frozenset(fields["final"]),
                   frozenset(fields.get("dummy", ())))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_nfa(n: Nfa) -> str:
    order = {q: i for i, q in enumerate(n.states)}
    lines = [
        " ".join(["alphabet", *n.alphabet]),
        " ".join(["states", *n.states]),
        f"initial {n.initial}",
        " ".join(["final", *sorted(n.finals, key=order.get)]),
    ]
    if n.dummies:
        lines.append(" ".join(["dummy", *sorted(n.dummies, key=order.get)]))
    lines.extend(f"trans {e.source} {_EPS_TOKEN if e.symbol is None else e.symbol} {e.target}"
                 for e in n.transitions)
    return "\n".join(lines) + "\n"
