"""Linear-bounded automata, computation tables, and a deterministic four-way
automaton that checks computation tables.

A head move past either end of the tape leaves the head where it is, so a
machine can detect the ends by marking a cell and trying to move off it.
Cells of a table are tape symbols ``t`` or head cells ``t_q``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .automaton import Automaton2D, Transition, Variant
from .grid import BOUNDARY, FormatError, Grid, as_word, iter_content_lines
from .simulator import InputError

HEAD_MOVES = {"L": -1, "R": 1, "S": 0}


class LbaRule(NamedTuple):
    state: str
    read: str
    target: str
    write: str
    move: str


class LbaConfiguration(NamedTuple):
    tape: Tuple[str, ...]
    head: int
    state: str


@dataclass(frozen=True)
class LbaMachine:
    states: Tuple[str, ...]
    input_alphabet: Tuple[str, ...]
    tape_alphabet: Tuple[str, ...]
    rules: Tuple[LbaRule, ...]
    initial: str
    accept: str

    def __post_init__(self):
        for name in ("states", "input_alphabet", "tape_alphabet"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        object.__setattr__(self, "rules", tuple(LbaRule(*r) for r in self.rules))
        if not set(self.input_alphabet) <= set(self.tape_alphabet):
            raise ValueError("input alphabet must be part of the tape alphabet")
        for tok in self.states + self.tape_alphabet:
            if "_" in tok or tok == BOUNDARY:
                raise ValueError(f"LBA names may not contain '_' or be '#': {tok!r}")
        states = set(self.states)
        if self.initial not in states or self.accept not in states:
            raise ValueError("initial and accept must be declared states")
        for r in self.rules:
            if r.state not in states or r.target not in states:
                raise ValueError(f"undeclared state in {r}")
            if r.read not in self.tape_alphabet or r.write not in self.tape_alphabet:
                raise ValueError(f"undeclared tape symbol in {r}")
            if r.move not in HEAD_MOVES:
                raise ValueError(f"bad head move in {r}")
            if r.state == self.accept:
                raise ValueError("no rule may leave the accept state")

    def rules_for(self, state: str, symbol: str) -> List[LbaRule]:
        return [r for r in self.rules if r.state == state and r.read == symbol]


def m_even() -> LbaMachine:
    """Deterministic machine for unary words of even length.

    It overwrites each cell with ``Y`` and steps right, alternating parity
    between ``q0`` and ``q1``.  Reading ``Y`` after a step means the step was
    blocked at the right end; in ``q0`` that is an even count.
    """
    return LbaMachine(
        states=("q0", "q1", "qa"),
        input_alphabet=("a",),
        tape_alphabet=("a", "Y"),
        rules=(
            LbaRule("q0", "a", "q1", "Y", "R"),
            LbaRule("q1", "a", "q0", "Y", "R"),
            LbaRule("q0", "Y", "qa", "Y", "S"),
        ),
        initial="q0",
        accept="qa",
    )


def lba_step(m: LbaMachine, c: LbaConfiguration) -> List[LbaConfiguration]:
    """All one-step successors, in rule order."""
    out: List[LbaConfiguration] = []
    if c.state == m.accept:
        return out
    for r in m.rules_for(c.state, c.tape[c.head]):
        tape = c.tape[:c.head] + (r.write,) + c.tape[c.head + 1:]
        head = c.head + HEAD_MOVES[r.move]
        if not 0 <= head < len(tape):
            head = c.head
        nxt = LbaConfiguration(tape, head, r.target)
        if nxt not in out:
            out.append(nxt)
    return out


def initial_configuration(m: LbaMachine, w) -> LbaConfiguration:
    w = as_word(w)
    if not w:
        raise InputError("an LBA needs at least one input cell")
    if not set(w) <= set(m.input_alphabet):
        raise InputError("word is not over the input alphabet")
    return LbaConfiguration(w, 0, m.initial)


def find_accepting_history(m: LbaMachine, w, max_steps: int = 10_000) -> Optional[List[LbaConfiguration]]:
    """A shortest accepting computation history, or ``None`` within ``max_steps``."""
    start = initial_configuration(m, w)
    parent: Dict[LbaConfiguration, Optional[LbaConfiguration]] = {start: None}
    level = [start]
    found = start if start.state == m.accept else None
    steps = 0
    while found is None and level and steps < max_steps:
        steps += 1
        nxt = []
        for c in level:
            for d in lba_step(m, c):
                if d in parent:
                    continue
                parent[d] = c
                if d.state == m.accept:
                    found = d
                    break
                nxt.append(d)
            if found is not None:
                break
        level = nxt
    if found is None:
        return None
    history = [found]
    while parent[history[-1]] is not None:
        history.append(parent[history[-1]])
    return history[::-1]


def cell_token(symbol: str, state: Optional[str] = None) -> str:
    return symbol if state is None else f"{symbol}_{state}"


def split_token(m: LbaMachine, token: str) -> Optional[Tuple[str, Optional[str]]]:
    """``(tape symbol, state or None)``, or ``None`` if not a table symbol of ``m``."""
    if token in m.tape_alphabet:
        return token, None
    symbol, sep, state = token.rpartition("_")
    if sep and symbol in m.tape_alphabet and state in m.states:
        return symbol, state
    return None


def composite_alphabet(m: LbaMachine) -> Tuple[str, ...]:
    return m.tape_alphabet + tuple(cell_token(t, q) for q in m.states for t in m.tape_alphabet)


def encode_configuration(c: LbaConfiguration) -> Tuple[str, ...]:
    return tuple(cell_token(t, c.state if i == c.head else None) for i, t in enumerate(c.tape))


def table_of(history: Sequence[LbaConfiguration]) -> Grid:
    """Computation table; the first row carries no head mark."""
    if not history:
        raise ValueError("empty history")
    width = len(history[0].tape)
    if any(len(c.tape) != width for c in history):
        raise ValueError("configurations have different tape lengths")
    return Grid((tuple(history[0].tape),) + tuple(encode_configuration(c) for c in history[1:]))


def decode_row(m: LbaMachine, row: Sequence[str]) -> Optional[LbaConfiguration]:
    tape, head, state = [], None, None
    for i, tok in enumerate(row):
        parts = split_token(m, tok)
        if parts is None:
            return None
        t, q = parts
        tape.append(t)
        if q is not None:
            if head is not None:
                return None
            head, state = i, q
    if head is None:
        return None
    return LbaConfiguration(tuple(tape), head, state)


def validate_table(m: LbaMachine, g: Grid) -> bool:
    """Direct row-by-row check that ``g`` is an accepting computation table."""
    if g.rows == 0:
        return False
    first = g.cells[0]
    if not all(tok in m.input_alphabet for tok in first):
        return False
    current = LbaConfiguration(tuple(first), 0, m.initial)
    for row in g.cells[1:]:
        nxt = decode_row(m, row)
        if nxt is None or nxt not in lba_step(m, current):
            return False
        current = nxt
    return current.state == m.accept


# -- the checker ------------------------------------------------------------

class _PairScanner:
    """Deterministic left-to-right check that two rows form one step.

    A scan state is ``(hypotheses, first_pair, at_column_1)``.  Hypotheses:
    ``("pre",)`` head not reached; ``("pendL", p)`` lower cell just seen
    carries ``p`` for a left move; ``("needR", p)`` next lower cell must carry
    ``p``; ``("post", p)`` step complete; ``("last", p)`` a blocked right move,
    valid only if no column follows.
    """

    def __init__(self, m: LbaMachine):
        self.m = m

    def start(self, first: bool):
        return (frozenset([("pre",)]), first, True)

    def step(self, scan, upper: str, lower: str):
        hyps, first, col1 = scan
        up, low = split_token(self.m, upper), split_token(self.m, lower)
        if up is None or low is None:
            return None
        (tu, qu), (tl, ql) = up, low
        if first:
            if qu is not None:
                return None
            qu = self.m.initial if col1 else None
        new = set()
        for h in hyps:
            kind = h[0]
            if kind == "pre":
                if qu is None:
                    if tl == tu:
                        new.add(("pre",) if ql is None else ("pendL", ql))
                    continue
                for r in self.m.rules_for(qu, tu):
                    if r.move == "S" or (r.move == "L" and col1):
                        if (tl, ql) == (r.write, r.target):
                            new.add(("post", r.target))
                    elif r.move == "R":
                        if (tl, ql) == (r.write, None):
                            new.add(("needR", r.target))
                        elif (tl, ql) == (r.write, r.target):
                            new.add(("last", r.target))
            elif kind == "pendL":
                if qu is None or ql is not None:
                    continue
                for r in self.m.rules_for(qu, tu):
                    if r.move == "L" and r.target == h[1] and r.write == tl:
                        new.add(("post", h[1]))
            elif kind == "needR":
                if qu is None and ql == h[1] and tl == tu:
                    new.add(("post", h[1]))
            elif kind == "post":
                if qu is None and ql is None and tl == tu:
                    new.add(h)
        if not new:
            return None
        return (frozenset(new), first, False)

    def finish(self, scan) -> Optional[bool]:
        """``None`` if invalid, else whether the lower row is accepting."""
        done = [h for h in scan[0] if h[0] in ("post", "last")]
        if not done:
            return None
        return any(h[1] == self.m.accept for h in done)


def build_checker_automaton(m: LbaMachine) -> Automaton2D:
    """Deterministic four-way automaton accepting exactly the accepting
    computation tables of ``m``.

    Row 1 is scanned for input symbols; then each pair of rows is read in a
    down-and-up zigzag from left to right, after which the head walks back
    along the lower row to start the next pair.
    """
    scanner = _PairScanner(m)
    alphabet = composite_alphabet(m)
    plain_input = set(m.input_alphabet)
    ACCEPT = ("accept",)
    names: Dict[tuple, str] = {}
    order: List[tuple] = []
    transitions: List[Transition] = []

    def name(state) -> str:
        if state not in names:
            names[state] = "acc" if state == ACCEPT else f"c{len(order)}"
            order.append(state)
        return names[state]

    def moves(state, symbol):
        kind = state[0]
        if kind == "P1start" or kind == "P1":
            if symbol == BOUNDARY:
                return None if kind == "P1start" else (("RET", True, m.initial == m.accept), "L")
            return (("P1",), "R") if symbol in plain_input else None
        if kind == "RET":
            _, first, acc = state
            if symbol == BOUNDARY:
                return (("TOPF", scanner.start(first), acc), "R")
            return (state, "L")
        if kind == "TOPF":
            _, scan, up_acc = state
            if symbol == BOUNDARY:
                verdict = scanner.finish(scan)
                return None if verdict is None else (("DESC", verdict), "D")
            return (("BOTS", scan, up_acc, symbol), "D")
        if kind == "BOTS":
            _, scan, up_acc, upper = state
            if symbol == BOUNDARY:
                return (ACCEPT, "N") if up_acc else None
            nxt = scanner.step(scan, upper, symbol)
            return None if nxt is None else (("BOTF", nxt), "R")
        if kind == "BOTF":
            scan = state[1]
            if symbol == BOUNDARY:
                verdict = scanner.finish(scan)
                return None if verdict is None else (("RET", False, verdict), "L")
            return (("TOPS", scan, symbol), "U")
        if kind == "TOPS":
            _, scan, lower = state
            nxt = None if symbol == BOUNDARY else scanner.step(scan, symbol, lower)
            return None if nxt is None else (("TOPF", nxt, False), "R")
        if kind == "DESC":
            return (("RET", False, state[1]), "L") if symbol == BOUNDARY else None
        raise AssertionError(kind)

    start = ("P1start",)
    name(start)
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for symbol in alphabet + (BOUNDARY,):
            result = moves(state, symbol)
            if result is None:
                continue
            target, d = result
            fresh = target not in names
            transitions.append(Transition(name(state), symbol, name(target), d))
            if fresh and target != ACCEPT:
                queue.append(target)
    name(ACCEPT)
    return Automaton2D(
        states=tuple(names[s] for s in order),
        alphabet=alphabet,
        variant=Variant(4, True, False),
        transitions=tuple(transitions),
        initial=names[start],
        accept="acc",
    )


def parse_lba(text: str) -> LbaMachine:
    fields = {}
    rules = []
    for lineno, tokens in iter_content_lines(text):
        key, rest = tokens[0], tokens[1:]
        if key == "trans":
            if len(rest) != 5:
                raise FormatError(f"line {lineno}: trans needs 5 fields")
            rules.append(LbaRule(*rest))
        elif key in ("states", "input-alphabet", "tape-alphabet", "initial", "accept"):
            if key in fields:
                raise FormatError(f"line {lineno}: duplicate '{key}'")
            fields[key] = rest
        else:
            raise FormatError(f"line {lineno}: unknown keyword {key!r}")
    missing = {"states", "input-alphabet", "tape-alphabet", "initial", "accept"} - fields.keys()
    if missing:
        raise FormatError(f"missing {sorted(missing)}")
    try:
        return LbaMachine(tuple(fields["states"]), tuple(fields["input-alphabet"]),
                          tuple(fields["tape-alphabet"]), tuple(rules),
                          fields["initial"][0], fields["accept"][0])
    except (ValueError, IndexError) as exc:
        raise FormatError(str(exc)) from None


def format_lba(m: LbaMachine) -> str:
    lines = [
        " ".join(["states", *m.states]),
        " ".join(["input-alphabet", *m.input_alphabet]),
        " ".join(["tape-alphabet", *m.tape_alphabet]),
        f"initial {m.initial}",
        f"accept {m.accept}",
    ]
    lines.extend(f"trans {r.state} {r.read} {r.target} {r.write} {r.move}" for r in m.rules)
    return "\n".join(lines) + "\n"
