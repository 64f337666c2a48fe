"""Acceptance suite: nine end-to-end criteria, each with its own runtime
budget and one pass/fail line."""

import itertools
import random
import sys
import time

from bairecomb import adversary as adv
from bairecomb import classhom as ch
from bairecomb import digraph as dg
from bairecomb import levelgraph as lg
from bairecomb import points as pt
from bairecomb import seqcoding as sc


def report(number, name, ok, started, budget):
    elapsed = time.perf_counter() - started
    line = "%s criterion %d (%s): %.2fs (budget %ds)" % (
        "PASS" if ok and elapsed < budget else "FAIL", number, name, elapsed, budget
    )
    print(line, file=sys.stderr)
    assert ok, line
    assert elapsed < budget, line


def oracle_codes(limit):
    """Independent enumerate-filter-sort: trial-division decode of every
    integer up to limit."""

    def decode(c):
        letters = []
        primes = []
        cand = 2
        while c > 1:
            while any(cand % p == 0 for p in primes):
                cand += 1
            p = cand
            primes.append(p)
            cand += 1
            e = 0
            while c % p == 0:
                c //= p
                e += 1
            if e == 0:
                return None
            letters.append(e - 1)
        return tuple(letters)

    out = []
    for c in range(1, limit + 1):
        d = decode(c)
        if d is not None:
            out.append((c, d))
    return out


def test_criterion_1_coding_suite():
    t0 = time.perf_counter()
    ok = True
    for length in range(7):
        for w in itertools.product(range(6), repeat=length):
            if sc.prime_decode(sc.prime_code(w)) != w:
                ok = False
    table = oracle_codes(96)
    ok = ok and len(table) >= 19
    for n, (c, stem) in enumerate(table[:19]):
        ok = ok and sc._table.code_at(n) == c and sc.psi(sc.OMEGA, n) == stem
    for d in (2, 3, sc.OMEGA):
        for n in range(2000):
            ok = ok and len(sc.dense_seq(d, n)) == n
            ok = ok and len(sc.psi(d, n)) <= n
    report(1, "coding suite", ok, t0, 5)


def test_criterion_2_density():
    t0 = time.perf_counter()
    ok = True
    for d in (2, sc.OMEGA):
        for length in range(6):
            for s in itertools.product(range(4), repeat=length):
                if d == 2 and any(c >= 2 for c in s):
                    continue
                for m in range(51):
                    n = sc.density_witness(d, s, m)
                    ok = ok and n >= m and sc.dense_has_prefix(d, n, s)
    report(2, "density", ok, t0, 5)


def test_criterion_3_trees():
    t0 = time.perf_counter()
    ok = True
    for l in range(4):
        for k in range(2, 6):
            g = lg.build(l, k)
            ok = ok and lg.is_tree(g)
            ok = ok and len(g.edges) == len(g.vertices) - 1
    report(3, "level trees", ok, t0, 10)


def test_criterion_4_path_oracle():
    t0 = time.perf_counter()
    ok = True
    for l in range(3):
        for k in range(2, 5):
            g = lg.build(l, k)
            for s, s2 in itertools.combinations(g.vertices, 2):
                if lg.unique_path(g, s, s2) != lg.bfs_path(g, s, s2):
                    ok = False
    report(4, "path oracle equivalence", ok, t0, 30)


def generate_witnesses(base, count=200):
    """Witnesses with letters < 5 and modification length <= 4: every
    canonical (n, tail word) shape, padded to the requested count with
    non-canonical representations of the first shapes (the tail word grows
    by the base letter it sits over, which denotes the same point)."""
    shapes = []
    for n in range(4):
        for tlen in range(4 - n):
            for tw in itertools.product(range(5), repeat=tlen):
                shapes.append((n, tw))
    out = []
    for n, tw in shapes:
        tail = pt.TailPoint(tw, base, n + 1 + len(tw))
        out.append(dg.AdWitness(n, tail))
    for n, tw in shapes[: count - len(shapes)]:
        drop = n + 1 + len(tw)
        longer = tw + (base.letter(drop),)
        out.append(dg.AdWitness(n, pt.TailPoint(longer, base, drop + 1)))
    return out[:count]


def test_criterion_5_tuple_map_verification():
    t0 = time.perf_counter()
    base = pt.make_canonical_base(0)
    witnesses = generate_witnesses(base)
    ok = len(witnesses) == 200
    for w in witnesses:
        ctx = ch.HomContext(base)
        if not ch.verify_tuple_maps(ctx, w, 8, 40):
            ok = False
    report(5, "tuple map verification", ok, t0, 60)


def test_criterion_6_eq_oracle():
    t0 = time.perf_counter()
    ok = True
    for l in range(3):
        for k in range(2, 5):
            sets, depth = ch.eq_construction(l, k)
            g = lg.build(l, k)
            ok = ok and set(depth) == set(g.vertices)
            for v, q in depth.items():
                ok = ok and ch.q_level(v) == q
            for e in g.edges:
                a, b = tuple(e)
                f = lg.edge_fiber(a, b)
                members = [
                    sc.dense_seq(sc.OMEGA, f.n) + (i,) + f.t for i in range(k)
                ]
                qs = sorted(depth[m] for m in members)
                ok = ok and qs[0] < qs[1] and len(set(qs[1:])) == 1
    report(6, "staged covering oracle", ok, t0, 30)


def test_criterion_7_adversary():
    t0 = time.perf_counter()
    verdicts = {}
    for name in ("identity", "prepend-zero", "broken"):
        h = adv.OracleHandle(adv.BUILTIN_ORACLES[name], fuel=10**5)
        verdicts[name] = adv.run_adversary(h)
    v = verdicts["prepend-zero"]
    ok = v.tag == "ContractViolation" and v.kind == adv.HOM_VIOLATION
    v = verdicts["broken"]
    ok = ok and v.tag == "ContractViolation" and v.kind == adv.NON_MONOTONE
    v = verdicts["identity"]
    ok = ok and v.tag == "Diagonalized" and v.rounds >= 3
    ok = ok and v.stabilized == pt.hit_count(v.state.s_list[0])
    ok = ok and all(adv.replay_verdict(v) for v in verdicts.values())
    report(7, "adversary verdicts", ok, t0, 60)


def parity_partition(spec):
    vertices = spec.vertices()
    return (
        [v for v in vertices if sum(v) % 2 == 0],
        [v for v in vertices if sum(v) % 2 == 1],
    )


def independent_chromatic(spec):
    """Exhaustive oracle over all assignments (small specs only)."""
    vertices = spec.vertices()
    edges = dg.enumerate_edges(spec)
    if not edges:
        return 1
    c = 1
    while True:
        for assignment in itertools.product(range(c), repeat=len(vertices)):
            coloring = dict(zip(vertices, assignment))
            if all(len({coloring[v] for v in e.vertices}) > 1 for e in edges):
                return c
        c += 1


def test_criterion_8_chromatic():
    t0 = time.perf_counter()
    ok = True
    for d in (2, 3):
        for D in range(1, 7):
            spec = dg.TruncationSpec(d, d, D)
            got = dg.brute_chromatic(spec)
            ok = ok and got == 2
            if len(spec.vertices()) <= 9:
                ok = ok and got == independent_chromatic(spec)
            else:
                # independent check at scale: some edge exists (so one color
                # cannot do) and the parity partition two-colors it
                ok = ok and len(dg.enumerate_edges(spec)) > 0
            coloring = dg.coloring_from_partition(spec, parity_partition(spec))
            ok = ok and dg.verify_coloring(spec, coloring)
    report(8, "truncation chromatic numbers", ok, t0, 60)


def test_criterion_9_hit_counting():
    t0 = time.perf_counter()
    rng = random.Random(20260823)
    ok = pt.hit_count((0, 0, 0, 0)) == 3 and pt.hit_count((1, 0, 0)) == 1
    for _ in range(1000):
        s = tuple(
            rng.randrange(0, 5) for _ in range(rng.randrange(0, 31))
        )
        naive = sum(
            1
            for n in range(len(s))
            if s[n] == 0 and s[:n] == sc.dense_seq(sc.OMEGA, n)
        )
        ok = ok and pt.hit_count(s) == naive
    report(9, "hit counting", ok, t0, 1)
