# Why the level bound needs a term for residue elements whose product with
# something lands in the ideal S E S.
from ltsemi import level, min_level, product_chain
from ltsemi.catalog import transformation_subsemigroup
from ltsemi.identities import holds_alpha

S, ids = transformation_subsemigroup(4, [(0, 0, 0, 1), (0, 1, 3, 1)])
t = S.table
chain = product_chain(S)
print("order", S.order, "residue", sorted(chain.residue), "SES", sorted(chain.ses))

b = level(S)
(rec,) = b.elements
g, c = rec.element, rec.ideal_partner
x = t[g][c]
print(f"g={S.name(g)} c={S.name(c)} gc={S.name(x)}")
print("(gc)g =", S.name(t[x][g]), " (gc)(gc)g =", S.name(t[t[x][x]][g]))

# Only counting powers of residue elements would stop at 1, giving level 2.
print("power term", rec.power_term, "ideal term", rec.ideal_term)
for n in (1, 2, 3):
    print("alpha holds for all r at n =", n, ":",
          all(holds_alpha(S, n, r)[0] for r in range(1, n + 1)))
print("level", b.level, "oracle", min_level(S, "B"))
