# # Simplification
#
# Loops of the dual matroid are contracted, and one edge of each parallel
# pair is folded into the other with weight (m1/m2)^2.

from fractions import Fraction

from prymatroid.catalog import cover_c, pendant_tree_cover
from prymatroid.matroid import simplify
from prymatroid.prym import verify_simplification_invariance

a, b, c = Fraction(2), Fraction(3, 2), Fraction(5)
new, emap, steps = simplify(cover_c([a, b, c]))
for s in steps:
    print(s.as_dict())
print(new.lengths, "expected", a + 4 * b + c)

# The Prym does not change.

r = verify_simplification_invariance(cover_c([a, b, c]))
print(r.ok, r.original.gram, r.simplified.gram)

# A tree hanging off the cover is contracted away edge by edge.

_, _, steps = simplify(pendant_tree_cover())
print([s.contracted for s in steps])
