# # The signed matroid and its index function
#
# Ogods are the bases of the dual matroid.  Each one carries an index: the
# number of components left after deleting it.

from prymatroid.catalog import cover_a, cover_c, cover_d
from prymatroid.matroid import SignedMatroidView

# The cover with two odd loops and an even/odd pair of edges has dual rank 2
# and all six pairs are ogods.  Only {e2, e3} disconnects the base.

v = SignedMatroidView(cover_a())
print("rank:", v.rank)
for o in v.ogods:
    print(o.edges, "index", o.index)

# Circuits of the matroid come with one of six shapes.

for circ in v.circuits:
    print(circ.edges, circ.type)

# On a path whose vertices are all dilated every subset is independent in
# the dual and the index is |F| + 1.

t = SignedMatroidView(cover_d(3))
print([(o.edges, o.index) for o in t.ogods])
print(t.index(["e1"]), t.index(["e1", "e3"]))

# The dumbbell has parallel elements in the dual: {e1, b} and {b, e2}.

ones, twos, mult = SignedMatroidView(cover_c()).circuits_dual_small()
print([x.edges for x in twos], mult)
