"""
Sing forms on G2/P1 and the Cayley plane
========================================

Only roots involving the marked node see the twist, and each gives an
affine form in the weight coefficients a, b, c, ...
"""

from lieulrich import build, dimension, sing_forms, sing_set

g2 = build("G", 2)
for f in sing_forms(g2, 1):
    print("t =", f, "   latex:", f.latex())

# All five forms must land in 1..5.  The largest, a + 3b + 4, forces b = 0,
# and then a + (3/2)b + 5/2 = a + 5/2 is not an integer.  So G2/P1 carries
# no irreducible equivariant Ulrich bundle.
for b in range(4):
    print("b =", b, sing_set(g2, 1, (0, b)))

# Cayley plane E6/P1: sixteen forms, and at w5 + 3w6 they fill 1..16.
e6 = build("E", 6)
print(dimension(e6, 1), "forms")
print(sing_set(e6, 1, (0, 0, 0, 0, 0, 0)))
print(sing_set(e6, 1, (0, 0, 0, 0, 1, 3)))
