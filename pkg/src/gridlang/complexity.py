"""Witness families, fooling sets, and the unary three-way column bound."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Sequence, Tuple, Union

from .automaton import MOVES, Automaton2D, VariantError, make_automaton
from .grid import BOUNDARY, EMPTY_GRID, FormatError, Grid, Word, as_word, iter_content_lines
from .nfa import Nfa, nfa_accepts
from .simulator import (
    ResourceLimitError,
    accepting_trace,
    accepts,
    max_configs,
)

UNARY = "a"


# -- witness automata -------------------------------------------------------

def witness_an(n: int, symbols: Tuple[str, str] = ("0", "1"), literal: bool = False) -> Automaton2D:
    """The n-state counting automaton whose row projection is
    ``0^(n-1) (0+1) ((0+1)^n)* + eps``.

    With ``literal=True`` the down move of ``q_{n-1}`` fires on ``0`` only,
    which shrinks the projection to ``0^n ((0+1)^n)* + eps``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    zero, one = symbols
    last = f"q{n - 1}"
    trans = [(f"q{i}", zero, f"q{i + 1}", "R") for i in range(n - 1)]
    trans += [(last, zero, "q0", "R"), (last, zero, last, "D")]
    if not literal:
        trans.append((last, one, last, "D"))
    trans.append(("q0", BOUNDARY, "acc", "N"))
    return make_automaton(trans, alphabet=symbols,
                          states=[f"q{i}" for i in range(n)] + ["acc"])


def witness_bm(m: int) -> Automaton2D:
    """Copy of :func:`witness_an` over ``{2, 3}``."""
    return witness_an(m, symbols=("2", "3"))


def witness_unary_cycle(k: int, symbol: str = UNARY) -> Automaton2D:
    """k-state two-way automaton reading row 1 only; row projection ``a^(k-1) (a^k)*``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    trans = [(f"p{i}", symbol, f"p{(i + 1) % k}", "R") for i in range(k)]
    trans.append((f"p{k - 1}", BOUNDARY, "acc", "N"))
    return make_automaton(trans, alphabet=(symbol,), initial="p0",
                          states=[f"p{i}" for i in range(k)] + ["acc"])


def lpr_member(w: Sequence[str], n: int, symbols: Tuple[str, str] = ("0", "1")) -> bool:
    """Membership in ``0^(n-1) (0+1) ((0+1)^n)* + eps`` over ``symbols``."""
    w = as_word(w)
    if not w:
        return True
    zero, one = symbols
    return (len(w) % n == 0 and all(s in symbols for s in w)
            and all(s == zero for s in w[:n - 1]))


def union_lpr_member(w: Sequence[str], m: int, n: int) -> bool:
    """Row projection of the union of ``witness_an(n)`` and ``witness_bm(m)``."""
    return lpr_member(w, n) or lpr_member(w, m, ("2", "3"))


def unary_cycle_member(length: int, k: int) -> bool:
    return length >= k - 1 and (length - (k - 1)) % k == 0


# -- fooling sets -----------------------------------------------------------

@dataclass(frozen=True)
class FoolingSet:
    pairs: Tuple[Tuple[Word, Word], ...]

    def __post_init__(self):
        pairs = tuple((as_word(x), as_word(y)) for x, y in self.pairs)
        if len(set(pairs)) != len(pairs):
            raise ValueError("fooling-set pairs must be distinct")
        object.__setattr__(self, "pairs", pairs)

    def __len__(self):
        return len(self.pairs)


def _splits(word: Word, min_suffix: int) -> List[Tuple[Word, Word]]:
    return [(word[:i], word[i:]) for i in range(len(word) - min_suffix + 1)]


def fooling_set_lpr(n: int, symbols: Tuple[str, str] = ("0", "1")) -> FoolingSet:
    if n < 1:
        raise ValueError("n must be at least 1")
    zero, one = symbols
    return FoolingSet(tuple(_splits((zero,) * (n - 1) + (one,) * (n + 1), 2)))


def fooling_set_union(m: int, n: int) -> FoolingSet:
    return FoolingSet(fooling_set_lpr(n).pairs + fooling_set_lpr(m, ("2", "3")).pairs)


@dataclass(frozen=True)
class FoolingFailure:
    reason: str
    pairs: Tuple[Tuple[Word, Word], ...]

    def __bool__(self):
        return False


Member = Union[Nfa, Callable[[Word], bool]]


def verify_extended_fooling_set(s: FoolingSet, member: Member) -> Union[int, FoolingFailure]:
    """Return ``len(s)`` as a certified lower bound on NFA size, or the failure."""
    if isinstance(member, Nfa):
        nfa = member
        member = lambda w: set(w) <= set(nfa.alphabet) and nfa_accepts(nfa, w)
    for x, y in s.pairs:
        if not member(x + y):
            return FoolingFailure("pair not in language", ((x, y),))
    pairs = s.pairs
    for i in range(len(pairs)):
        x, y = pairs[i]
        for j in range(i + 1, len(pairs)):
            u, v = pairs[j]
            if member(x + v) and member(u + y):
                return FoolingFailure("cross products both in language", ((x, y), (u, v)))
    return len(pairs)


def format_word_token(w: Word) -> str:
    if not w:
        return "eps"
    if all(len(c) == 1 and c != "," for c in w):
        return "".join(w)
    return ",".join(w) + ","


def parse_word_token(token: str) -> Word:
    if token == "eps":
        return ()
    if "," in token:
        return tuple(t for t in token.split(",") if t) if token.endswith(",") else tuple(token.split(","))
    return tuple(token)


def format_fooling_set(s: FoolingSet) -> str:
    return "".join(f"pair {format_word_token(x)} {format_word_token(y)}\n" for x, y in s.pairs)


def parse_fooling_set(text: str) -> FoolingSet:
    pairs = []
    for lineno, tokens in iter_content_lines(text):
        if tokens[0] != "pair" or len(tokens) != 3:
            raise FormatError(f"line {lineno}: expected 'pair <x> <y>'")
        pairs.append((parse_word_token(tokens[1]), parse_word_token(tokens[2])))
    try:
        return FoolingSet(tuple(pairs))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# -- unary three-way automata -----------------------------------------------

def signature_count(k: int) -> int:
    """Number of maps Q -> 2^(Q + Q-bar) for k states, ``k^(2^(2k))``."""
    return k ** (2 ** (2 * k))


def column_bound(k: int, w_len: int) -> int:
    if k < 1:
        raise ValueError("k must be at least 1")
    return (w_len + 3) * (signature_count(k) + 2)


def run_length_bound(k: int) -> int:
    """Length ``k^(2k) + 1`` of the down-move-free column run in the compression argument."""
    return k ** (2 * k) + 1


def _require_unary_3w(a: Automaton2D) -> None:
    if a.variant.ways != 3:
        raise VariantError(f"needs a three-way automaton, got {a.variant}")
    if len(a.alphabet) != 1:
        raise VariantError("needs a unary alphabet")


ExitLeft, ExitRight = "L", "R"
ColumnSignature = Dict[str, FrozenSet[Tuple[str, str]]]


def column_signature(a: Automaton2D, g: Grid, col_range: Tuple[int, int], x: int,
                     row: int = 1) -> ColumnSignature:
    """Exits reachable from column ``x`` while confined to ``col_range`` of one row.

    Downward moves are not followed.  Each entry state maps to a set of
    ``(side, state)`` pairs with side ``"L"`` or ``"R"``.
    """
    _require_unary_3w(a)
    lo, hi = col_range
    if not (1 <= lo <= x <= hi <= g.cols) or not (1 <= row <= g.rows):
        raise IndexError("column range outside the grid")
    sig: ColumnSignature = {}
    for p in a.working_states:
        exits = set()
        seen = {(p, x)}
        stack = [(p, x)]
        while stack:
            q, c = stack.pop()
            sym = g[row, c]
            for target, d in a.moves(q, sym):
                if d == "D":
                    continue
                if target == a.accept:
                    continue
                c2 = c + MOVES[d][1]
                if c2 < lo:
                    exits.add((ExitLeft, target))
                elif c2 > hi:
                    exits.add((ExitRight, target))
                elif (target, c2) not in seen:
                    seen.add((target, c2))
                    stack.append((target, c2))
        sig[p] = frozenset(exits)
    return sig


def _down_free_runs(trace, cols: int) -> List[Tuple[int, int]]:
    down_cols = {c.col for c, d in zip(trace.configurations, trace.moves) if d == "D"}
    runs, start = [], None
    for c in range(1, cols + 1):
        if c in down_cols:
            if start is not None:
                runs.append((start, c - 1))
            start = None
        elif start is None:
            start = c
    if start is not None:
        runs.append((start, cols))
    return runs


def _drop_columns(g: Grid, first: int, stop: int) -> Grid:
    return Grid(tuple(r[:first - 1] + r[stop - 1:] for r in g.cells))


def compress_columns(a: Automaton2D, g: Grid) -> Grid:
    """Remove a block of columns between two equal-signature columns, if the
    result is still accepted; otherwise return ``g``.
    """
    _require_unary_3w(a)
    trace = accepting_trace(a, g)
    if trace is None:
        raise ValueError("compress_columns needs an accepted grid")
    for lo, hi in _down_free_runs(trace, g.cols):
        sigs = {x: column_signature(a, g, (lo, hi), x) for x in range(lo, hi + 1)}
        for x1 in range(lo, hi + 1):
            for x2 in range(x1 + 1, hi + 1):
                if sigs[x1] == sigs[x2]:
                    smaller = _drop_columns(g, x1, x2)
                    if accepts(a, smaller):
                        return smaller
    return g


def compress_fully(a: Automaton2D, g: Grid) -> Grid:
    while True:
        h = compress_columns(a, g)
        if h.cols == g.cols:
            return g
        g = h


def _accepts_unary(a: Automaton2D, rows: int, cols: int) -> bool:
    """Simulate ``a`` on the unary rows x cols grid without materialising it."""
    sym = a.alphabet[0]
    if a.initial == a.accept:
        return True
    start = (a.initial, 1, 1)
    seen = {start}
    queue = deque([start])
    limit = max_configs()
    while queue:
        q, r, c = queue.popleft()
        reading = BOUNDARY if r in (0, rows + 1) or c in (0, cols + 1) else sym
        for target, d in a.moves(q, reading):
            if target == a.accept:
                return True
            dr, dc = MOVES[d]
            r2, c2 = r + dr, c + dc
            if not (0 <= r2 <= rows + 1 and 0 <= c2 <= cols + 1):
                r2, c2 = r, c
            nxt = (target, r2, c2)
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > limit:
                    raise ResourceLimitError(f"more than {limit} configurations")
                queue.append(nxt)
    return False


def colp_member_3w(a: Automaton2D, w_len: int, col_cap: int) -> bool:
    """Is the unary word of length ``w_len`` the first column of an accepted
    grid with at most ``col_cap`` columns?
    """
    _require_unary_3w(a)
    if col_cap < 1:
        raise ValueError("col_cap must be at least 1")
    if w_len == 0:
        return accepts(a, EMPTY_GRID)
    return any(_accepts_unary(a, w_len, n1) for n1 in range(1, col_cap + 1))
