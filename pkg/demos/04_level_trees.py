"""Level graphs are trees; unique paths come from a recursion, not a search."""

from bairecomb import levelgraph as lg

g = lg.build(1, 3)
print("level graph on words of length 2, alphabet {0,1,2}")
print("vertices:", len(g.vertices), " edges:", len(g.edges),
      " tree:", lg.is_tree(g))
print("hub word:", lg.hub_word(2))

print()
s, s2 = (1, 1), (2, 2)
path = lg.unique_path(g, s, s2)
print("unique path %r -> %r:" % (s, s2))
for v in path:
    print("  ", v)
print("breadth-first search agrees:", path == lg.bfs_path(g, s, s2))

print()
runs = lg.fiber_decompose(g, path)
print("fiber decomposition (each run flips one coordinate family):")
for f, entry in runs:
    print("  fiber n=%d t=%r entered at %r" % (f.n, f.t, entry))

print()
print("DOT export of the length-1 graph:")
print(lg.to_dot(lg.build(0, 3)))
