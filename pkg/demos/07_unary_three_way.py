"""Unary three-way automata: the column bound, column compression and the
bounded-column membership decider."""

from gridlang import colp_member_3w, column_bound, compress_fully, make_automaton, unary_grid

print("column bound k=1, |w|=2:", column_bound(1, 2))
print("column bound k=2, |w|=1:", column_bound(2, 1))

# walk right along row 1, accept at the border after an even number of columns
even = make_automaton([("e", "a", "o", "R"), ("o", "a", "e", "R"), ("e", "#", "acc", "N")],
                      alphabet="a", ways=3, initial="e")
wide = unary_grid(2, 10)
print("10 columns compress to", compress_fully(even, wide).cols)
for length in range(1, 5):
    print("first column of length", length, "->", colp_member_3w(even, length, 20))
