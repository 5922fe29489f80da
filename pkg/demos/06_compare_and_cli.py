# # Comparing Pryms, and the command line
#
# Two different covers can have the same Prym.  compare_pryms returns a
# conservative verdict.

import subprocess
import sys
from fractions import Fraction

from prymatroid.catalog import cover_a, cover_b, cover_c, cover_d
from prymatroid.document import shipped_path
from prymatroid.prym import compare_pryms, prym_data

a = prym_data(cover_a([1, 1, 1, 2]))
b = prym_data(cover_b([Fraction(3, 2), Fraction(3, 2), 1]))
print(compare_pryms(a, b))
print(compare_pryms(prym_data(cover_d(2)), prym_data(cover_c())))

# Another basis of the same lattice gives a congruent Gram matrix.

c = cover_a([1, 2, 3, 4])
print(compare_pryms(prym_data(c, ["e3", "e4"]), prym_data(c, ["e1", "e4"])))

# The same computations from the shell.

cmd = [sys.executable, "-m", "prymatroid", "gram", str(shipped_path("cover_b")), "--format", "table"]
print(subprocess.run(cmd, capture_output=True, text=True).stdout)
