import pytest
from hypothesis import given

from conftest import grids
from gridlang import (
    EMPTY_GRID,
    FormatError,
    Grid,
    GridError,
    border_lookup,
    col_projection,
    format_grid,
    parse_grid,
    row_projection,
    subgrid,
    transpose,
)

ABCD = Grid.from_rows(["ab", "cd"])


def test_row_projection_examples():
    assert row_projection(ABCD) == ("a", "b")
    assert row_projection(EMPTY_GRID) == ()
    assert row_projection(Grid.from_rows(["xyz"])) == ("x", "y", "z")


def test_col_projection_examples():
    assert col_projection(ABCD) == ("a", "c")
    assert col_projection(EMPTY_GRID) == ()


def test_transpose_examples():
    assert transpose(Grid.from_rows(["xyz"])) == Grid.from_rows(["x", "y", "z"])
    assert transpose(ABCD) == Grid.from_rows(["ac", "bd"])
    assert transpose(EMPTY_GRID) == EMPTY_GRID


def test_border_lookup_examples():
    assert border_lookup(ABCD, 0, 0) == "#"
    assert border_lookup(ABCD, 3, 3) == "#"
    assert border_lookup(Grid.from_rows(["a"]), 1, 1) == "a"
    assert border_lookup(EMPTY_GRID, 1, 1) == "#"


@pytest.mark.parametrize("i, j", [(-1, 0), (0, 4), (4, 1), (2, -1)])
def test_border_lookup_out_of_frame(i, j):
    with pytest.raises(IndexError):
        border_lookup(ABCD, i, j)


def test_symbols_are_validated():
    with pytest.raises(GridError):
        Grid.from_rows([["a", "#"]])
    with pytest.raises(GridError):
        Grid.from_rows([["a b"]])
    with pytest.raises(GridError):
        Grid.from_rows(["ab", "c"])


def test_multi_character_symbols():
    g = Grid((("a_q0", "Y"),))
    assert g[1, 1] == "a_q0"
    assert parse_grid(format_grid(g)) == g


def test_subgrid():
    g = Grid.from_rows(["abc", "def", "ghi"])
    assert subgrid(g, 2, 2, 2, 2) == Grid.from_rows(["ef", "hi"])
    assert subgrid(g, 1, 1, 1, 3) == Grid.from_rows(["abc"])


@given(grids(max_rows=4, max_cols=4))
def test_projection_duality(g):
    assert col_projection(g) == row_projection(transpose(g))
    assert len(row_projection(g)) == g.cols
    assert len(col_projection(g)) == g.rows


@given(grids(max_rows=4, max_cols=4))
def test_transpose_involution(g):
    assert transpose(transpose(g)) == g
    assert transpose(g).shape == g.shape[::-1]


@given(grids(max_rows=4, max_cols=4))
def test_border_agrees_with_cells(g):
    for i in range(g.rows + 2):
        for j in range(g.cols + 2):
            inside = 1 <= i <= g.rows and 1 <= j <= g.cols
            assert border_lookup(g, i, j) == (g[i, j] if inside else "#")


@given(grids(max_rows=4, max_cols=4))
def test_grid_format_round_trip(g):
    text = format_grid(g)
    assert parse_grid(text) == g
    assert format_grid(parse_grid(text)) == text


def test_grid_format_details():
    assert format_grid(EMPTY_GRID) == "0 0\n"
    text = "; a comment\n2 2\n\na b\n; another\nc d\n"
    assert parse_grid(text) == ABCD


@pytest.mark.parametrize("text", [
    "", "2\n", "1 2\na\n", "2 1\na\n", "0 3\n", "1 1\n#\n", "x y\n",
])
def test_grid_format_errors(text):
    with pytest.raises(FormatError):
        parse_grid(text)
