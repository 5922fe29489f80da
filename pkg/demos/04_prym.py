# # Gram matrix, volume and polarization
#
# The pairing is 2 * sum g(e) g'(e) l(e) over undilated edges.

from fractions import Fraction

import sympy

from prymatroid.catalog import cover_a, cover_b, cover_c
from prymatroid.matroid import SignedMatroidView
from prymatroid.prym import gram_matrix, prym_data, prym_volume_ogod, symbols_for

a = prym_data(cover_a([1, 1, 1, 2]))
b = prym_data(cover_b([Fraction(3, 2), Fraction(3, 2), 1]))
print(a.gram, b.gram, a.gram == b.gram)

# In edge-length symbols, halved:

syms = symbols_for(a.ground)
print([[sympy.expand(x / 2) for x in row] for row in gram_matrix(a.basis, syms)])

# The squared volume is a sum over ogods weighted by 4^(index - 1).  It
# agrees with the Gram determinant up to the fixed power of two.

value, poly = prym_volume_ogod(SignedMatroidView(a.cover))
print(value, a.volume_squared, poly.to_sympy())
print(prym_volume_ogod(SignedMatroidView(cover_c()))[1].to_sympy())

# The polarization type has d - 1 ones and the rest twos.

print(a.polarization, a.dilation_index)
