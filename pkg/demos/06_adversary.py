"""Refuting claimed continuous prefix maps: three oracles, three verdicts."""

from bairecomb import adversary as adv

for name in ("identity", "prepend-zero", "broken"):
    h = adv.OracleHandle(adv.BUILTIN_ORACLES[name])
    v = adv.run_adversary(h)
    print("oracle %r:" % name)
    print("  verdict:", v.tag, v.kind)
    if v.tag == "Diagonalized":
        print("  extracted blocks:", v.state.s_list)
        print("  chosen input prefix:", v.beta_prefix)
        print("  image prefix:", v.image_prefix)
        print("  hit count frozen at:", v.stabilized)
    else:
        print("  detail:", v.detail)
    print("  evidence replays:", adv.replay_verdict(v))
    print("  queries spent:", adv.DEFAULT_FUEL - h.fuel)
    print()

print("the identity stub answers consistently, so no contract is broken;")
print("instead the adversary freezes its image's hit count, refuting the")
print("claim that the map lands in the set of points with infinitely many")
print("dense-word-plus-zero prefixes.")
