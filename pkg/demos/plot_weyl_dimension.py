"""
Ranks via the Weyl dimension formula
====================================

The rank of E_w is the dimension of the Levi representation V_L(w), a
product over the positive roots of the Levi factor.
"""

from lieulrich import build, rank
from lieulrich.cli import factorize

for name, k, w in [
    ("A3", 2, (1, 0, 0)),
    ("B3", 1, (0, 0, 1)),
    ("E6", 1, (0, 0, 0, 0, 1, 3)),
    ("E7", 1, (0, 0, 0, 0, 1, 3, 8)),
]:
    r = rank(build(name[0], int(name[1:])), k, w)
    print(name, w, r, factorize(r))

# Ranks grow fast along a ray of weights.
e6 = build("E", 6)
print([rank(e6, 1, (0, 0, 0, 0, 0, n)) for n in range(6)])
