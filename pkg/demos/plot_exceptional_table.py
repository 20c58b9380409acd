"""
Equivariant Ulrich bundles on all exceptional G/P_k
===================================================

Run the exhaustive search on every maximal parabolic of G2, F4, E6, E7
and E8, and print dimension, Fano index and the bundles found with their
ranks.
"""

import time

from lieulrich import build, classify, dimension, exceptional_cases, fano_index, format_weight
from lieulrich.ulrich import SearchBox, search_nodes

start = time.perf_counter()
for t, k in exceptional_cases():
    rs = build(t)
    certs = classify(rs, k)
    found = ", ".join(f"{format_weight(c.weight)} (rank {c.rank})" for c in certs) or "none"
    print(f"{t}/P{k:<2} dim {dimension(rs, k):>3}  index {fano_index(rs, k):>2}  {found}")
print(f"total {time.perf_counter() - start:.1f} s")

# The search box is large but pruning keeps the tree small.
e8 = build("E", 8)
box = SearchBox.for_variety(e8, 4)
print("E8/P4 box", box.upper, "points", box.size(), "nodes", search_nodes(e8, 4))
