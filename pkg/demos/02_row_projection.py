"""Row projections of two-way automata are regular: extract an NFA and compare
it with the first-row completion search."""

from gridlang import (
    accepts_some_completion,
    enumerate_language,
    extract_projection_nfa,
    format_nfa,
    ibr_convert,
    witness_an,
)
from gridlang.complexity import format_word_token

a = witness_an(3)
print("IBR form keeps", len(ibr_convert(a).working_states), "working states")
nfa = extract_projection_nfa(a)
print(format_nfa(nfa))
print("size", nfa.size, "<= 2 * 3")
print("words up to length 6:", [format_word_token(w) for w in enumerate_language(nfa, 6)])
for w in ("001", "010", "000111"):
    print(w, "has an accepted completion:", accepts_some_completion(a, w))
