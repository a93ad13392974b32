"""Acceptance by reachability over the finite configuration graph.

A move that would take the head outside the bordered frame is blocked: the
state changes and the head stays put.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .automaton import MOVES, Automaton2D, VariantError, state_count
from .grid import BOUNDARY, EMPTY_GRID, Grid, as_word, border_lookup

DEFAULT_MAX_CONFIGS = 10 ** 7


class InputError(ValueError):
    pass


class ResourceLimitError(RuntimeError):
    pass


def max_configs() -> int:
    raw = os.environ.get("GRIDLANG_MAX_CONFIGS")
    return int(raw) if raw else DEFAULT_MAX_CONFIGS


class Configuration(NamedTuple):
    state: str
    row: int
    col: int


@dataclass(frozen=True)
class Trace:
    configurations: Tuple[Configuration, ...]
    moves: Tuple[str, ...]

    def __len__(self) -> int:
        return len(self.moves)

    def lines(self) -> List[str]:
        out = [f"{c.state} {c.row} {c.col} {d}" for c, d in zip(self.configurations, self.moves)]
        last = self.configurations[-1]
        out.append(f"{last.state} {last.row} {last.col} -")
        return out


def _check_alphabet(a: Automaton2D, g: Grid) -> None:
    extra = g.symbols() - set(a.alphabet)
    if extra:
        raise InputError(f"grid symbols {sorted(extra)} not in the automaton alphabet")


def step(a: Automaton2D, g: Grid, c: Configuration):
    """Yield ``(direction, successor)`` pairs in transition declaration order."""
    m, n = g.shape
    sym = border_lookup(g, c.row, c.col)
    for target, d in a.moves(c.state, sym):
        dr, dc = MOVES[d]
        r, k = c.row + dr, c.col + dc
        if not (0 <= r <= m + 1 and 0 <= k <= n + 1):
            r, k = c.row, c.col
        yield d, Configuration(target, r, k)


def _search(a: Automaton2D, g: Grid, keep_parents: bool):
    _check_alphabet(a, g)
    start = Configuration(a.initial, 1, 1)
    parents: Dict[Configuration, Optional[Tuple[Configuration, str]]] = {start: None}
    if a.initial == a.accept:
        return start, parents
    limit = max_configs()
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for d, nxt in step(a, g, c):
            if nxt in parents:
                continue
            parents[nxt] = (c, d) if keep_parents else None
            if nxt.state == a.accept:
                return nxt, parents
            if len(parents) > limit:
                raise ResourceLimitError(f"more than {limit} configurations")
            queue.append(nxt)
    return None, parents


def accepts(a: Automaton2D, g: Grid) -> bool:
    found, _ = _search(a, g, keep_parents=False)
    return found is not None


def accepting_trace(a: Automaton2D, g: Grid) -> Optional[Trace]:
    """A shortest accepting run, or ``None`` if ``g`` is rejected."""
    found, parents = _search(a, g, keep_parents=True)
    if found is None:
        return None
    configs, moves = [found], []
    link = parents[found]
    while link is not None:
        prev, d = link
        configs.append(prev)
        moves.append(d)
        link = parents[prev]
    return Trace(tuple(reversed(configs)), tuple(reversed(moves)))


def default_max_rows(a: Automaton2D, width: int) -> int:
    return state_count(a) * (width + 2) + 1


def accepts_some_completion(a: Automaton2D, first_row: Sequence[Optional[str]],
                            max_rows: Optional[int] = None) -> bool:
    """Is some grid with this first row and at most ``max_rows`` rows accepted?

    Entries of ``first_row`` may be ``None`` for "any symbol".  A two-way head
    enters every cell at most once, so guessing each unseen cell as the head
    arrives explores exactly the set of all completions.
    """
    if a.variant.ways != 2:
        raise VariantError("completion search needs a two-way automaton")
    first_row = tuple(first_row) if not isinstance(first_row, str) else as_word(first_row)
    extra = {s for s in first_row if s is not None} - set(a.alphabet)
    if extra:
        raise InputError(f"first-row symbols {sorted(extra)} not in the automaton alphabet")
    if not first_row:
        return accepts(a, EMPTY_GRID)
    n = len(first_row)
    if max_rows is None:
        max_rows = default_max_rows(a, n)
    if max_rows < 1:
        return False
    alphabet = tuple(a.alphabet)
    if a.initial == a.accept:
        return True

    def cell_options(r: int, c: int):
        if c == n + 1:
            return (BOUNDARY,)
        if r == 1 and first_row[c - 1] is not None:
            return (first_row[c - 1],)
        return alphabet

    # (state, row, col, symbol under head, head is on the bottom boundary row)
    start = [(a.initial, 1, 1, s, False) for s in cell_options(1, 1)]
    seen = set(start)
    queue = deque(start)
    limit = max_configs()
    while queue:
        q, r, c, sym, bottom = queue.popleft()
        for target, d in a.moves(q, sym):
            if target == a.accept:
                return True
            succ = []
            if d == "N" or (d == "R" and c == n + 1) or (d == "D" and (bottom or c == n + 1)):
                succ.append((target, r, c, sym, bottom))
            elif d == "R":
                if bottom:
                    succ.append((target, r, c + 1, BOUNDARY, True))
                else:
                    succ.extend((target, r, c + 1, s, False) for s in cell_options(r, c + 1))
            elif d == "D":
                succ.append((target, r + 1, c, BOUNDARY, True))
                if r + 1 <= max_rows:
                    succ.extend((target, r + 1, c, s, False) for s in alphabet)
            for nxt in succ:
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > limit:
                        raise ResourceLimitError(f"more than {limit} configurations")
                    queue.append(nxt)
    return False
