# # Fundamental cycles and the kernel lattice
#
# A chain on undilated edges stands for the difference of the two lifts of
# each edge.  Closedness upstairs is a linear condition at free vertices.

from prymatroid.catalog import cover_a, cover_b, no_ogod_cover
from prymatroid.cycles import all_fundamental_cycles, kernel_condition_matrix, kernel_lattice
from prymatroid.matroid import SignedMatroidView

c = cover_a()
print(kernel_condition_matrix(c))

# Each circuit has a fundamental cycle.  It is computed twice: from the
# integer kernel, and from index magnitudes plus a sign search.

v = SignedMatroidView(c)
for fc in all_fundamental_cycles(v):
    print(fc.circuit.edges, fc.circuit.type, fc.as_dict(v.ground))

# An ogod of index one gives a lattice basis, one cycle per ogod edge.

print(kernel_lattice(v, ["e3", "e4"]).basis)
print(kernel_lattice(SignedMatroidView(cover_b()), ["f2", "f3"]).basis)

# With two dilated components no ogod has index one, so the basis is the
# Hermite form of all fundamental cycles.

lat = kernel_lattice(SignedMatroidView(no_ogod_cover()))
print(lat.provenance, lat.basis)
