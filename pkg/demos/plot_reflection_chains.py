"""
Weyl reflections and Borel-Weil-Bott on Gr(2,4) and Q^5
=======================================================

Follow a twisted weight through simple reflections until it is either
dominant or lands on a wall, and read off the cohomology.
"""

from lieulrich import BundleSpec, build, cohomology, reflect, to_dominant

# Gr(2,4) = A3/P2.  The dual tautological bundle has highest weight w1,
# and O(1) corresponds to w2, so E(-k) has weight w1 - k w2.
a3 = build("A", 3)
k = 3
mu = (2, 1 - k, 1)  # w1 - k w2 + rho
for i in (2, 1, 3):
    nxt = reflect(a3, mu, i)
    print(f"s{i}: {mu} -> {nxt}")
    mu = nxt
print("singular:", to_dominant(a3, (2, 1 - k, 1)).singular)

# The same bundle for every twist 1..4: all cohomology vanishes.
spec = BundleSpec(a3, 2, (1, 0, 0))
print([cohomology(spec, t).vanishes for t in range(1, 5)])

# Q^5 = B3/P1 with the spinor bundle E_w3.  Twists 1..5 all vanish, so
# the spinor bundle is Ulrich.
b3 = build("B", 3)
spinor = BundleSpec(b3, 1, (0, 0, 1))
for t in range(0, 7):
    print(t, cohomology(spinor, t))

# A twist that does not vanish ends in a regular chamber; the number of
# reflections used is the cohomological degree.
print(to_dominant(b3, (1 - 6, 1, 2)))
