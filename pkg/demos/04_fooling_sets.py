"""Extended fooling sets as certified lower bounds on NFA size."""

from gridlang import (
    extract_projection_nfa,
    fooling_set_lpr,
    fooling_set_union,
    lpr_member,
    union_lpr_member,
    verify_extended_fooling_set,
    witness_an,
)

for n in (2, 3, 4, 5):
    nfa = extract_projection_nfa(witness_an(n))
    bound = verify_extended_fooling_set(fooling_set_lpr(n), lambda w: lpr_member(w, n))
    print(f"n={n}: certified lower bound {bound}, extracted NFA has {nfa.size} states")

# the union family does not certify: both (eps, x) pairs fool each other
got = verify_extended_fooling_set(fooling_set_union(2, 3), lambda w: union_lpr_member(w, 2, 3))
print("union(2,3):", got.reason, got.pairs)
