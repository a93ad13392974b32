"""Two-dimensional words, the virtual ``#`` frame, and projections.

A grid is stored without its boundary; :func:`border_lookup` supplies the
``#`` symbols on the fly using 1-based interior coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

BOUNDARY = "#"

Word = Tuple[str, ...]


class GridError(ValueError):
    pass


class FormatError(ValueError):
    """Raised when a text file in one of the package formats is malformed."""


def check_symbol(token: str) -> str:
    if not isinstance(token, str) or not token or any(c.isspace() for c in token):
        raise GridError(f"invalid symbol {token!r}")
    if token == BOUNDARY:
        raise GridError("'#' is reserved for the boundary")
    return token


def as_word(w: str | Iterable[str]) -> Word:
    """Coerce ``w`` to a tuple of symbols; a plain string is split per character."""
    if isinstance(w, str):
        return tuple(w)
    return tuple(w)


def format_word(w: Sequence[str]) -> str:
    if all(len(s) == 1 for s in w):
        return "".join(w)
    return " ".join(w)


@dataclass(frozen=True)
class Grid:
    cells: Tuple[Tuple[str, ...], ...] = ()

    def __post_init__(self):
        cells = tuple(tuple(row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        if cells:
            width = len(cells[0])
            if width == 0:
                raise GridError("a grid with rows must have at least one column")
            for row in cells:
                if len(row) != width:
                    raise GridError("ragged rows")
                for s in row:
                    check_symbol(s)

    @classmethod
    def from_rows(cls, rows: Iterable[str | Iterable[str]]) -> "Grid":
        return cls(tuple(as_word(r) for r in rows))

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0]) if self.cells else 0

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def symbols(self) -> frozenset:
        return frozenset(s for row in self.cells for s in row)

    def __getitem__(self, ij: Tuple[int, int]) -> str:
        # 1-based interior coordinates, matching border_lookup
        i, j = ij
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(ij)
        return self.cells[i - 1][j - 1]

    def __str__(self) -> str:
        return "\n".join(" ".join(row) for row in self.cells) or "<empty grid>"


EMPTY_GRID = Grid()


def unary_grid(rows: int, cols: int, symbol: str = "a") -> Grid:
    return Grid(tuple((symbol,) * cols for _ in range(rows)))


def row_projection(g: Grid) -> Word:
    return g.cells[0] if g.cells else ()


def col_projection(g: Grid) -> Word:
    return tuple(row[0] for row in g.cells)


def transpose(g: Grid) -> Grid:
    return Grid(tuple(zip(*g.cells)))


def border_lookup(g: Grid, i: int, j: int) -> str:
    m, n = g.shape
    if not (0 <= i <= m + 1 and 0 <= j <= n + 1):
        raise IndexError(f"({i}, {j}) outside the bordered {m}x{n} frame")
    if i in (0, m + 1) or j in (0, n + 1):
        return BOUNDARY
    return g.cells[i - 1][j - 1]


def subgrid(g: Grid, top: int, left: int, rows: int, cols: int) -> Grid:
    """Block of ``g`` with upper-left interior cell ``(top, left)`` (1-based)."""
    return Grid(tuple(r[left - 1:left - 1 + cols] for r in g.cells[top - 1:top - 1 + rows]))


def iter_content_lines(text: str):
    """Yield non-blank, non-comment lines split into tokens."""
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith(";"):
            continue
        yield lineno, stripped.split()


def parse_grid(text: str) -> Grid:
    lines = list(iter_content_lines(text))
    if not lines:
        raise FormatError("missing dimension line")
    lineno, head = lines[0]
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise FormatError(f"line {lineno}: expected 'm n'")
    m, n = int(head[0]), int(head[1])
    if (m == 0) != (n == 0):
        raise FormatError("only the empty grid may have a zero dimension")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"expected {m} rows, found {len(body)}")
    rows = []
    for lineno, tokens in body:
        if len(tokens) != n:
            raise FormatError(f"line {lineno}: expected {n} symbols, found {len(tokens)}")
        rows.append(tuple(tokens))
    try:
        return Grid(tuple(rows))
    except GridError as exc:
        raise FormatError(str(exc)) from None


def format_grid(g: Grid) -> str:
    out = [f"{g.rows} {g.cols}"]
    out.extend(" ".join(row) for row in g.cells)
    return "\n".join(out) + "\n"
