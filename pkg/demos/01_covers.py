# # Double covers from base data
#
# A cover is stored by its base graph, the dilated vertices and edges, and a
# sign on every free edge.  The total graph is derived on demand.

from prymatroid.catalog import cover_b, cover_c, cover_e
from prymatroid.cover import contract_cover, free_resolution, switch

# An odd loop lifts to a 2-cycle: one sheet goes to the other and back.

c = cover_e()
print(c.total_graph.graph.ends)
print("g =", c.genus, " g_total =", c.total_genus)

# A dilated vertex has a single preimage.  Here one dilated vertex is joined
# twice to a free vertex carrying an odd loop.

b = cover_b()
print(b.total_graph.graph.vertices)
print("g =", b.genus, " g_total =", b.total_genus, " Prym dimension =", b.prym_dimension)

# Contracting an odd cycle leaves a dilated vertex; contracting the bridge of
# the dumbbell leaves a free wedge of two odd loops.

d = cover_c()
print(contract_cover(d, ["e1"])[0].dilated_vertices)
wedge = contract_cover(d, ["b"])[0]
print(wedge.base.ends, wedge.sign)

# Switching at a vertex changes the signs but not the cover.

print(switch(d, "u").sign)

# The free resolution trades every dilated vertex for an odd loop.

res, loops = free_resolution(b)
print(res.is_free, loops, res.total_genus - res.genus)
