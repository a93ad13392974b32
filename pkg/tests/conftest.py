import itertools
import random

import pytest
from hypothesis import strategies as st

from gridlang import EMPTY_GRID, Edge, Grid, Nfa, accepts, make_automaton

DIRS = {2: "DRN", 3: "DLRN", 4: "UDLRN"}


def random_automaton(rng, k, alphabet=("0", "1"), ways=2, deterministic=False, p_accept=0.3):
    states = [f"q{i}" for i in range(k)]
    trans = []
    for q in states:
        for s in tuple(alphabet) + ("#",):
            for _ in range(rng.choice([0, 1]) if deterministic else rng.choice([0, 1, 1, 2])):
                target = "acc" if rng.random() < p_accept else rng.choice(states)
                trans.append((q, s, target, rng.choice(DIRS[ways])))
    return make_automaton(trans, alphabet=alphabet, ways=ways, deterministic=deterministic,
                          states=states + ["acc"])


@st.composite
def automata(draw, max_states=3, alphabet=("0", "1"), ways=2):
    seed = draw(st.integers(0, 2**32 - 1))
    k = draw(st.integers(1, max_states))
    return random_automaton(random.Random(seed), k, alphabet, ways)


@st.composite
def grids(draw, alphabet=("0", "1"), max_rows=3, max_cols=3, allow_empty=True):
    rows = draw(st.integers(0 if allow_empty else 1, max_rows))
    if rows == 0:
        return EMPTY_GRID
    cols = draw(st.integers(1, max_cols))
    sym = st.sampled_from(alphabet)
    return Grid(tuple(tuple(draw(sym) for _ in range(cols)) for _ in range(rows)))


def all_grids(rows, cols, alphabet=("0", "1")):
    if rows == 0 or cols == 0:
        yield EMPTY_GRID
        return
    for cells in itertools.product(alphabet, repeat=rows * cols):
        yield Grid(tuple(tuple(cells[r * cols:(r + 1) * cols]) for r in range(rows)))


def small_grids(max_rows=3, max_cols=3, alphabet=("0", "1")):
    yield EMPTY_GRID
    for r in range(1, max_rows + 1):
        for c in range(1, max_cols + 1):
            yield from all_grids(r, c, alphabet)


def words(alphabet, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def literal_completion(a, first_row, max_rows, alphabet=("0", "1")):
    """List every grid with this first row and at most max_rows rows."""
    first_row = tuple(first_row)
    if not first_row:
        return accepts(a, EMPTY_GRID)
    for r in range(1, max_rows + 1):
        for rest in itertools.product(alphabet, repeat=(r - 1) * len(first_row)):
            lower = tuple(tuple(rest[i * len(first_row):(i + 1) * len(first_row)])
                          for i in range(r - 1))
            if accepts(a, Grid((first_row,) + lower)):
                return True
    return False


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_nfa(rng, k, alphabet=("a", "b"), p_edge=0.25, p_eps=0.15):
    states = [f"s{i}" for i in range(k)]
    edges = []
    for p in states:
        for q in states:
            for s in alphabet:
                if rng.random() < p_edge:
                    edges.append(Edge(p, s, q))
            if rng.random() < p_eps:
                edges.append(Edge(p, None, q))
    finals = frozenset(q for q in states if rng.random() < 0.3)
    return Nfa(tuple(states), tuple(alphabet), tuple(edges), states[0], finals)


def brute_accepts(n, w):
    """Accept by exploring (state, position) pairs; independent of subset simulation."""
    todo = [(n.initial, 0)]
    seen = set(todo)
    while todo:
        q, i = todo.pop()
        if i == len(w) and q in n.finals:
            return True
        for e in n.transitions:
            if e.source != q:
                continue
            if e.symbol is None:
                nxt = (e.target, i)
            elif i < len(w) and e.symbol == w[i]:
                nxt = (e.target, i + 1)
            else:
                continue
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return False


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
