"""Grids, two-way automata and their shortest accepting traces."""

from gridlang import Grid, accepting_trace, accepts, format_automaton, transpose, witness_an

a = witness_an(3)
print(format_automaton(a))

g = Grid.from_rows(["001", "110"])
print("grid 001/110 accepted:", accepts(a, g))
for line in accepting_trace(a, g).lines():
    print("  ", line)

# q1 has no move on 1, so the run dies in the first row
print("grid 01/00 accepted:", accepts(a, Grid.from_rows(["01", "00"])))
print("transpose of 001/110:", transpose(g).cells)
