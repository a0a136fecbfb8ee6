# Compare the fast decision and level against brute-force identity checks
# over every semigroup of order three and a seeded sample of transformation
# semigroups.
import collections

from ltsemi import (
    enumerate_semigroups,
    is_locally_testable,
    is_locally_testable_semilattice,
    level,
    min_level,
)
from ltsemi.catalog import random_transformation_semigroups

tally = collections.Counter()
for S in enumerate_semigroups(3):
    lt = is_locally_testable(S).locally_testable
    assert lt == is_locally_testable_semilattice(S).locally_testable
    if lt:
        lvl = level(S).level
        assert lvl == min_level(S, "B", 12)
        tally[lvl] += 1
    else:
        tally["not LT"] += 1
print("order 3:", dict(tally))

tally.clear()
for gens, S, ids in random_transformation_semigroups(300, seed=1, max_order=8):
    if is_locally_testable(S).locally_testable:
        lvl = level(S).level
        assert lvl == min_level(S, "B", 2 * S.order + 2)
        tally[lvl] += 1
print("transformation sample, levels:", dict(sorted(tally.items())))
