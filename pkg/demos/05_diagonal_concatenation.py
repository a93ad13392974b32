"""Diagonal concatenation: a top-left block in L(A), a bottom-right block in
L(B); the row projection is the concatenation of the two projections."""

from gridlang import (
    diag_concat_member,
    diag_concat_projection_nfa,
    nfa_accepts,
    unary_grid,
    witness_unary_cycle,
)

a, b = witness_unary_cycle(2), witness_unary_cycle(3)
nfa = diag_concat_projection_nfa(a, b)
print("NFA size", nfa.size, "<= 2*2 + 3")
for cols in range(1, 10):
    print(cols, "member:", diag_concat_member(a, b, unary_grid(2, cols)),
          "nfa:", nfa_accepts(nfa, "a" * cols))
