"""The per-class map: images of finite modifications, audited choices, and
the staged fiber covering."""

from bairecomb import classhom as ch
from bairecomb import digraph as dg
from bairecomb import points as pt

base = pt.make_canonical_base(0)
ctx = ch.HomContext(base)
print("base seed 0, image seed %d" % ctx.image_base.base.seed)
print("base prefix: ", base.prefix(12))
print("image prefix:", ctx.image_base.prefix(12))

print()
print("images of one-letter modifications (coordinate 0 changed):")
for i in range(3):
    y = ch.extend_one(ctx, i)
    print("  letter %d -> image prefix %r" % (i, y.prefix(12)))
print("choice log (level, fiber n, fiber t, chosen splice index):")
for entry in ctx.choice_log:
    print("  ", entry)

print()
print("a witnessed tuple maps to a witnessed tuple:")
w = dg.AdWitness(0, pt.TailPoint((), base, 1))
ctx2 = ch.HomContext(base)
print("  witness n=0, empty tail; verified at arity 8, depth 40:",
      ch.verify_tuple_maps(ctx2, w, 8, 40))

print()
print("staged covering of the length-2 vertices (alphabet {0,1,2}):")
sets, depth = ch.eq_construction(1, 3)
for v in sorted(depth):
    print("  %r covered at stage %d (fiber distance %d)"
          % (v, depth[v], ch.q_level(v)))
print("stage count:", len(sets))
