"""Generated points: the planting schedule, tail algebra and hit counting."""

from bairecomb import points as pt
from bairecomb import seqcoding as sc
from bairecomb.errors import HorizonExceeded

base = pt.make_canonical_base(0)
try:
    base.ensure_targets(10)
except HorizonExceeded:
    pass  # the schedule stops when the next plant is unaffordable

print("base point, seed 0; prefix:", base.prefix(18))
print("certified hit log (position, letter):", base.hit_log())
for n, letter in base.hit_log():
    assert base.prefix(n) == sc.dense_seq(sc.OMEGA, n)
    assert base.letter(n) == letter
print("every log entry re-checks: dense prefix then the planted letter")

print()
print("tail points: a finite word glued onto the shifted base")
x = pt.TailPoint((9, 9), base, 3)
print("  word (9,9) over base from coordinate 3; prefix:", x.prefix(6))
print("  canonical form:", x.canonicalize())
print("  eventually equal to the base point:",
      pt.e0_equivalent(x, pt.TailPoint((), base, 0)))

print()
print("hit counting on finite words: prefixes of shape dense-word + 0")
for s in [(0, 0, 0, 0), (1, 0, 0), (1, 0, 1, 0)]:
    print("  N%r = %d" % (s, pt.hit_count(s)))
