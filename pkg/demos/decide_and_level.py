# Decide local testability for a few small semigroups and compute levels.
import numpy as np

from ltsemi import catalog, is_locally_testable, level, product_chain
from ltsemi.decision import describe_witness

# The five element semigroup A2: a, b, ab, ba and a zero.
A2 = catalog("a2").semigroup
print(np.array(A2.table))
print(A2.names)

verdict = is_locally_testable(A2)
print("A2 locally testable:", verdict.locally_testable)
print("A2 level:", level(A2).level)

# S E S is the whole of A2, so there is no residue and the level comes
# straight from whether the semigroup is an idempotent commutative one.
chain = product_chain(A2)
print("SES:", sorted(chain.ses), "residue:", sorted(chain.residue))

# A monoid with two left zeroes is the smallest obstruction.
UL = catalog("ul").semigroup
v = is_locally_testable(UL)
print("UL locally testable:", v.locally_testable)
print(describe_witness(UL, v.witness))

# Monogenic semigroups a, a^2, ..., a^k = a^(k+1) have a residue, and the
# level grows with the index.
for index in range(1, 6):
    S = catalog("monogenic", index).semigroup
    b = level(S)
    print(f"monogenic index {index}: level {b.level} (n={b.n_bound}, l={b.l_bound}, r={b.r_bound})")
