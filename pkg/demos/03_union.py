"""Union of two-way automata and what its row projection needs.

The plain union over {0,1,2,3} also accepts first rows that mix alphabets in
columns the head never reads, so the projection is built per component.
"""

from gridlang import (
    Grid,
    accepts,
    as_nondeterministic,
    extract_projection_nfa,
    nfa_accepts,
    state_count,
    union_automaton,
    union_lpr_member,
    union_projection_nfa,
    witness_an,
    witness_bm,
    witness_l1l2,
)

u = union_automaton(witness_an(2), witness_bm(2))
print("union states:", state_count(u), "(2 + 2 + 1)")
print("plain projection accepts 0002:", nfa_accepts(extract_projection_nfa(u), "0002"))
scoped = union_projection_nfa(witness_an(2), witness_bm(2))
print("scoped projection size:", scoped.size)
print("scoped projection accepts 0002:", nfa_accepts(scoped, "0002"))
print("predicate on 0002:", union_lpr_member("0002", 2, 2))

l12 = union_automaton(as_nondeterministic(witness_l1l2("L1")), as_nondeterministic(witness_l1l2("L2")))
for rows in (["11", "00"], ["10", "10"], ["10", "00"]):
    print(rows, accepts(l12, Grid.from_rows(rows)))
