"""Command-line front end: one executable exposing every module.

Subcommands mirror the library layout (seq, point, ad, lg, hom, adv).
Words are bracketed comma-separated naturals like [1,0,2]; points are JSON
objects {"word": [...], "base_seed": n, "drop": n}.  Output is line-based
by default and JSON with --format json; identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import adversary as adv
from . import classhom as ch
from . import digraph as dg
from . import levelgraph as lg
from . import points as pt
from . import seqcoding as sc
from .errors import BairecombError, UsageError

CONFIG_ENV = "BAIRECOMB_CONFIG"

#: Config file keys and their built-in defaults; unknown keys are rejected.
CONFIG_DEFAULTS = {
    "fuel": adv.DEFAULT_FUEL,
    "bound": adv.DEFAULT_BOUND,
    "rounds": adv.DEFAULT_ROUNDS,
    "depth": 40,
    "k": 2,
    "seed": 0,
    "search_limit": ch.SEARCH_LIMIT,
    "vertex_bound": dg.VERTEX_BOUND,
}


def load_config(path):
    if path is None:
        path = os.environ.get(CONFIG_ENV)
    cfg = dict(CONFIG_DEFAULTS)
    if path is None:
        return cfg
    with open(path) as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise UsageError("config must be a JSON object")
    for key, value in data.items():
        if key not in CONFIG_DEFAULTS:
            raise UsageError("unknown config key %r" % key)
        if not isinstance(value, int) or value <= 0:
            raise UsageError("config key %r must be a positive integer" % key)
        cfg[key] = value
    return cfg


def parse_dim(text):
    if text == "omega":
        return sc.OMEGA
    try:
        return int(text)
    except ValueError:
        raise UsageError("dimension must be an integer >= 2 or 'omega'")


def parse_point(text, bases):
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        raise UsageError("point must be JSON {word, base_seed, drop}")
    extra = set(data) - {"word", "base_seed", "drop"}
    if extra:
        raise UsageError("unknown point fields %s" % sorted(extra))
    seed = data.get("base_seed", 0)
    if seed not in bases:
        bases[seed] = pt.make_canonical_base(seed)
    return pt.TailPoint(
        tuple(data.get("word", ())), bases[seed], data.get("drop", 0)
    )


def fmt_word(w):
    return adv.format_word(w)


class Emitter:
    """Collects result lines plus a JSON value; prints one or the other."""

    def __init__(self, fmt):
        self.fmt = fmt
        self.lines = []
        self.value = None

    def line(self, text):
        self.lines.append(text)

    def flush(self):
        if self.fmt == "json":
            payload = self.value if self.value is not None else self.lines
            sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
        else:
            for text in self.lines:
                sys.stdout.write(text + "\n")


# --- subcommand bodies; each returns the exit status ----------------------

def cmd_seq(args, cfg, out):
    if args.action == "code":
        c = sc.prime_code(adv.parse_word(args.word))
        out.line(str(c))
        out.value = c
    elif args.action == "decode":
        w = sc.prime_decode(args.code)
        out.line(fmt_word(w))
        out.value = list(w)
    elif args.action == "rank":
        n = sc.seq_rank(args.code)
        out.line(str(n))
        out.value = n
    elif args.action == "psi":
        w = sc.psi(parse_dim(args.dim), args.n)
        out.line(fmt_word(w))
        out.value = list(w)
    elif args.action == "dense":
        w = sc.dense_seq(parse_dim(args.dim), args.n)
        out.line(fmt_word(w))
        out.value = list(w)
    elif args.action == "witness":
        n = sc.density_witness(
            parse_dim(args.dim), adv.parse_word(args.word), args.m
        )
        out.line(str(n))
        out.value = n
    return 0


def cmd_point(args, cfg, out):
    bases = {}
    if args.action == "eval":
        x = parse_point(args.point, bases)
        v = x.eval(args.k)
        out.line(str(v))
        out.value = v
    elif args.action == "hits":
        x = parse_point(args.point, bases)
        hits = pt.g_hits(x, args.letter, args.m, args.depth or cfg["depth"])
        for n in hits:
            out.line(str(n))
        out.value = hits
    elif args.action == "nhits":
        c = pt.hit_count(adv.parse_word(args.word))
        out.line(str(c))
        out.value = c
    elif args.action == "base":
        base = pt.make_canonical_base(args.seed if args.seed is not None else cfg["seed"])
        w = base.prefix(args.length)
        out.line(fmt_word(w))
        out.value = list(w)
    return 0


def _spec_of(args, cfg):
    d = parse_dim(args.dim)
    k = args.k if args.k is not None else (d if d != sc.OMEGA else cfg["k"])
    return dg.TruncationSpec(d, k, args.depth)


def _read_words(stream):
    return [adv.parse_word(line) for line in stream if line.strip()]


def cmd_ad(args, cfg, out):
    spec = _spec_of(args, cfg)
    if args.action == "edges":
        edges = dg.enumerate_edges(spec)
        for e in edges:
            out.line(
                "n=%d t=%s : %s"
                % (e.n, fmt_word(e.t), " ".join(fmt_word(v) for v in e.vertices))
            )
        out.value = [
            {"n": e.n, "t": list(e.t), "vertices": [list(v) for v in e.vertices]}
            for e in edges
        ]
        return 0
    if args.action == "discrete":
        C = _read_words(sys.stdin)
        ok = dg.is_discrete(spec, C)
        out.line("true" if ok else "false")
        out.value = ok
        return 0 if ok else 1
    if args.action == "color":
        coloring = {}
        with open(args.coloring) as f:
            for line in f:
                line = line.strip()
                if not line:
                    continue
                wtext, ctext = line.rsplit(None, 1)
                coloring[adv.parse_word(wtext)] = int(ctext)
        ok = dg.verify_coloring(spec, coloring)
        out.line("true" if ok else "false")
        out.value = ok
        return 0 if ok else 1
    if args.action == "chromatic":
        n = dg.brute_chromatic(spec, cfg["vertex_bound"])
        out.line(str(n))
        out.value = n
        return 0
    return 2


def cmd_lg(args, cfg, out):
    g = lg.build(args.l, args.k if args.k is not None else cfg["k"])
    if args.action == "build":
        out.line("vertices %d" % len(g.vertices))
        out.line("edges %d" % len(g.edges))
        for e in sorted(g.edges, key=sorted):
            a, b = sorted(e)
            out.line("%s -- %s" % (fmt_word(a), fmt_word(b)))
        out.value = {
            "vertices": len(g.vertices),
            "edges": [[list(a), list(b)] for a, b in
                      (sorted(e) for e in sorted(g.edges, key=sorted))],
        }
        return 0
    if args.action == "tree-check":
        ok = lg.is_tree(g)
        out.line("true" if ok else "false")
        out.value = ok
        return 0 if ok else 1
    if args.action == "path":
        path = lg.unique_path(
            g, adv.parse_word(args.src), adv.parse_word(args.dst)
        )
        for v in path:
            out.line(fmt_word(v))
        out.value = [list(v) for v in path]
        return 0
    if args.action == "dot":
        text = lg.to_dot(g)
        if args.out_file:
            with open(args.out_file, "w") as f:
                f.write(text + "\n")
        else:
            out.line(text)
        out.value = text
        return 0
    return 2


def cmd_hom(args, cfg, out):
    seed = args.seed if args.seed is not None else cfg["seed"]
    base = pt.make_canonical_base(seed)
    ctx = ch.HomContext(base, search_limit=cfg["search_limit"])
    if args.action == "apply":
        w = ctx.canon_word(adv.parse_word(args.word))
        y = ch.u_apply(ctx, ctx.point_of_word(w))
        out.line(fmt_word(y.prefix(args.depth or cfg["depth"])))
        for level, n, t, chosen in ctx.choice_log:
            out.line("(%d, %d, %s, %d)" % (level, n, fmt_word(t), chosen))
        out.value = {
            "image_prefix": list(y.prefix(args.depth or cfg["depth"])),
            "choices": [
                {"level": lvl, "fiber_n": n, "fiber_t": list(t), "chosen": c}
                for lvl, n, t, c in ctx.choice_log
            ],
        }
        return 0
    if args.action == "verify":
        tail = pt.TailPoint(
            adv.parse_word(args.tail), base, args.witness_n + 1 + len(adv.parse_word(args.tail))
        )
        w = dg.AdWitness(args.witness_n, tail.canonicalize())
        ok = ch.verify_tuple_maps(ctx, w, args.arity, args.depth or cfg["depth"])
        out.line("true" if ok else "false")
        out.value = ok
        return 0 if ok else 1
    if args.action == "eq-oracle":
        k = args.k if args.k is not None else cfg["k"]
        sets, depth = ch.eq_construction(args.l, k)
        ok = all(ch.q_level(v) == q for v, q in depth.items())
        for v in sorted(depth):
            out.line("%s q=%d" % (fmt_word(v), depth[v]))
        out.line("stages %d" % len(sets))
        out.line("matches-level %s" % ("true" if ok else "false"))
        out.value = {
            "q": {fmt_word(v): q for v, q in sorted(depth.items())},
            "stages": len(sets),
            "matches_level": ok,
        }
        return 0 if ok else 1
    return 2


def cmd_adv(args, cfg, out):
    if args.action == "serve":
        fn = adv.BUILTIN_ORACLES[args.builtin]
        adv.serve_oracle(fn, sys.stdin, sys.stdout)
        return 0
    if args.builtin is not None:
        fn = adv.BUILTIN_ORACLES[args.builtin]
        wire = None
    elif args.oracle is not None:
        wire = adv.WireOracle(args.oracle)
        fn = wire
    else:
        raise UsageError("adv run needs --oracle or --builtin")
    h = adv.OracleHandle(fn, args.fuel if args.fuel is not None else cfg["fuel"])
    v = adv.run_adversary(
        h,
        rounds=args.rounds if args.rounds is not None else cfg["rounds"],
        bound=args.bound if args.bound is not None else cfg["bound"],
    )
    if wire is not None:
        wire.finish(v)
    out.line(adv.verdict_line(v))
    out.value = {
        "tag": v.tag,
        "kind": v.kind,
        "beta_prefix": list(v.beta_prefix),
        "image_prefix": list(v.image_prefix),
        "stabilized": v.stabilized,
        "rounds": v.rounds,
        "replay_ok": adv.replay_verdict(v),
    }
    return 0 if v.tag != "FuelExhausted" else 1


def build_parser():
    p = argparse.ArgumentParser(
        prog="bairecomb",
        description="desk-scale combinatorics of coded words, generated "
        "points, tuple digraphs, level trees and prefix-map refutation",
    )
    p.add_argument("--format", choices=("lines", "json"), default="lines")
    p.add_argument("--config", help="JSON config file (env %s)" % CONFIG_ENV)
    sub = p.add_subparsers(dest="command")

    sq = sub.add_parser("seq", help="word codings and the dense family")
    sqs = sq.add_subparsers(dest="action", required=True)
    a = sqs.add_parser("code")
    a.add_argument("--word", required=True)
    a = sqs.add_parser("decode")
    a.add_argument("--code", type=int, required=True)
    a = sqs.add_parser("rank")
    a.add_argument("--code", type=int, required=True)
    for name in ("psi", "dense"):
        a = sqs.add_parser(name)
        a.add_argument("--dim", default="omega")
        a.add_argument("--n", type=int, required=True)
    a = sqs.add_parser("witness")
    a.add_argument("--dim", default="omega")
    a.add_argument("--word", required=True)
    a.add_argument("--m", type=int, default=0)

    po = sub.add_parser("point", help="generated points and hit counting")
    pos = po.add_subparsers(dest="action", required=True)
    a = pos.add_parser("eval")
    a.add_argument("--point", required=True)
    a.add_argument("--k", type=int, required=True)
    a = pos.add_parser("hits")
    a.add_argument("--point", required=True)
    a.add_argument("--letter", type=int, required=True)
    a.add_argument("--m", type=int, default=0)
    a.add_argument("--depth", type=int)
    a = pos.add_parser("nhits")
    a.add_argument("--word", required=True)
    a = pos.add_parser("base")
    a.add_argument("--seed", type=int)
    a.add_argument("--length", type=int, required=True)

    ad = sub.add_parser("ad", help="truncated tuple digraphs")
    ads = ad.add_subparsers(dest="action", required=True)
    for name in ("edges", "discrete", "color", "chromatic"):
        a = ads.add_parser(name)
        a.add_argument("--dim", default="omega")
        a.add_argument("--k", type=int)
        a.add_argument("--depth", type=int, required=True)
        if name == "color":
            a.add_argument("--coloring", required=True)

    tg = sub.add_parser("lg", help="level tree graphs and unique paths")
    tgs = tg.add_subparsers(dest="action", required=True)
    for name in ("build", "tree-check", "path", "dot"):
        a = tgs.add_parser(name)
        a.add_argument("--l", type=int, required=True)
        a.add_argument("--k", type=int)
        if name == "path":
            a.add_argument("--src", required=True)
            a.add_argument("--dst", required=True)
        if name == "dot":
            a.add_argument("--out-file")

    hm = sub.add_parser("hom", help="per-class homomorphism")
    hms = hm.add_subparsers(dest="action", required=True)
    a = hms.add_parser("apply")
    a.add_argument("--seed", type=int)
    a.add_argument("--word", required=True)
    a.add_argument("--depth", type=int)
    a = hms.add_parser("verify")
    a.add_argument("--seed", type=int)
    a.add_argument("--witness-n", type=int, required=True)
    a.add_argument("--tail", default="[]")
    a.add_argument("--arity", type=int, default=2)
    a.add_argument("--depth", type=int)
    a = hms.add_parser("eq-oracle")
    a.add_argument("--seed", type=int)
    a.add_argument("--l", type=int, required=True)
    a.add_argument("--k", type=int)

    av = sub.add_parser("adv", help="prefix-map adversary")
    avs = av.add_subparsers(dest="action", required=True)
    a = avs.add_parser("run")
    a.add_argument("--oracle", help="shell command speaking the wire protocol")
    a.add_argument("--builtin", choices=sorted(adv.BUILTIN_ORACLES))
    a.add_argument("--rounds", type=int)
    a.add_argument("--fuel", type=int)
    a.add_argument("--bound", type=int)
    a = avs.add_parser("serve")
    a.add_argument("--builtin", required=True, choices=sorted(adv.BUILTIN_ORACLES))
    return p


DISPATCH = {
    "seq": cmd_seq,
    "point": cmd_point,
    "ad": cmd_ad,
    "lg": cmd_lg,
    "hom": cmd_hom,
    "adv": cmd_adv,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return 2
    out = Emitter(args.format)
    try:
        cfg = load_config(args.config)
        status = DISPATCH[args.command](args, cfg, out)
    except UsageError as exc:
        sys.stderr.write("usage error: %s\n" % exc)
        return 2
    except BairecombError as exc:
        sys.stderr.write("error: %s: %s\n" % (type(exc).__name__, exc))
        return 1
    out.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
