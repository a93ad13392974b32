"""Computation tables of a linear-bounded automaton, checked by a
deterministic four-way automaton."""

from gridlang import accepts, build_checker_automaton, find_accepting_history, m_even, table_of, validate_table

m = m_even()
checker = build_checker_automaton(m)
print("checker states:", len(checker.working_states))
table = table_of(find_accepting_history(m, "aaaa"))
for row in table.cells:
    print("  ", " ".join(row))
print("checker accepts:", accepts(checker, table), "direct check:", validate_table(m, table))
print("history for aaa:", find_accepting_history(m, "aaa"))
