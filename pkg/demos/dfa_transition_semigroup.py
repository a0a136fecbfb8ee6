# From an automaton to its transition semigroup, then to a verdict.
from ltsemi import is_locally_testable, level, min_level
from ltsemi.automaton import parse_dfa, transition_semigroup
from ltsemi.decision import describe_witness

TEXT = """
states: 3
letter a: 0 0 1
letter b: 1 1 0
"""

dfa = parse_dfa(TEXT)
S, letters = transition_semigroup(dfa)
print("transition semigroup order:", S.order)
print("letters map to elements:", letters)
for x in S.elements:
    print(S.name(x), "->", [S.name(S.mul(x, y)) for y in S.elements])

v = is_locally_testable(S)
if v.locally_testable:
    print("level", level(S).level, "oracle", min_level(S, "B"))
else:
    print("not locally testable:", describe_witness(S, v.witness))

# A letter that swaps two states generates a group, so the language can
# never be locally testable.
swap, _ = transition_semigroup(parse_dfa("states: 2\nletter a: 1 0\n"))
print(describe_witness(swap, is_locally_testable(swap).witness))
