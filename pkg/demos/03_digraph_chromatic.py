"""Truncated tuple digraphs: edges, discreteness and chromatic numbers."""

from bairecomb import digraph as dg
from bairecomb import seqcoding as sc

spec = dg.TruncationSpec(2, 2, 3)
print("truncation: dimension 2, depth 3 ->", len(spec.vertices()), "vertices")
print("hyperedges (witness n, tail, members):")
for e in dg.enumerate_edges(spec):
    print("  n=%d t=%r: %s" % (e.n, e.t, " ".join(map(str, e.vertices))))

print()
parity = [
    [v for v in spec.vertices() if sum(v) % 2 == 0],
    [v for v in spec.vertices() if sum(v) % 2 == 1],
]
coloring = dg.coloring_from_partition(spec, parity)
print("parity partition is discrete part by part; induced coloring valid:",
      dg.verify_coloring(spec, coloring))

print()
print("chromatic numbers by exhaustive backtracking:")
for d in (2, 3):
    for D in range(1, 6):
        n = dg.brute_chromatic(dg.TruncationSpec(d, d, D))
        print("  d=%d depth=%d: chi = %d" % (d, D, n))
print("two colors always suffice at finite depth, and one never does")
