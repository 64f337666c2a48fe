"""Tuple digraphs on Baire space, truncated to finite depth.

A witness (n, tail) denotes the infinite tuple whose i-th coordinate is
dense_seq(d, n) + (i,) + tail.  Truncating to depth D and an alphabet bound
turns the digraph into a finite hypergraph on length-D words, which is what
discreteness, colorings and the brute-force chromatic number act on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import points as pt
from . import seqcoding as sc
from .errors import (
    DifferentBases,
    IndexOutOfDimension,
    MissingVertex,
    NotAPartition,
    PartNotDiscrete,
    TooLarge,
)

#: Default limit on the vertex count of exhaustive searches.
VERTEX_BOUND = 4096


@dataclass(frozen=True)
class AdWitness:
    """Witness (n, tail) for the tuple (dense_seq(d,n) + (i,) + tail)_i."""

    n: int
    tail: pt.TailPoint


@dataclass(frozen=True)
class TruncationSpec:
    """Finite window onto the tuple digraph: dimension d, alphabet bound k
    (only consulted when d is omega; for finite d it must equal d), and
    vertex length D."""

    d: object
    k: int
    D: int

    def __post_init__(self):
        sc.check_dimension(self.d)
        if self.d != sc.OMEGA and self.k != self.d:
            raise ValueError("alphabet bound must equal the finite dimension")
        if self.k < 2 or self.D < 0:
            raise ValueError("need k >= 2 and D >= 0")

    @property
    def arity(self):
        return self.k if self.d == sc.OMEGA else min(self.d, self.k)

    def vertices(self):
        return sc.words_of(self.k, self.D)


@dataclass(frozen=True)
class Hyperedge:
    """Depth-D shadow of one witnessed tuple: arity-many distinct length-D
    vertices dense_seq + i + t."""

    vertices: tuple
    n: int
    t: tuple


def tuple_from_witness(d, w, i):
    """Coordinate i of the tuple denoted by w."""
    sc.check_dimension(d)
    if d != sc.OMEGA and i >= d:
        raise IndexOutOfDimension("coordinate %d with dimension %d" % (i, d))
    prefix = sc.dense_seq(d, w.n) + (i,)
    return w.tail.prepend(prefix)


def witness_from_tuple(xs, probe_count=2):
    """Recover the unique (n, tail) with xs[i] = dense_seq + (i,) + tail, or
    None.  Decided exactly on the represented points: candidate n values come
    from the first two coordinates and are verified on probe_count of them."""
    base = xs[0].base
    for x in xs:
        if x.base is not base:
            raise DifferentBases("tuple coordinates over distinct bases")
    probe_count = max(2, min(probe_count, len(xs)))
    # where xs[0] and xs[1] first differ bounds the witness length
    limit = max(len(x.word) for x in xs[:probe_count]) + 1
    diff = None
    for j in range(limit):
        if xs[0].eval(j) != xs[1].eval(j):
            diff = j
            break
    if diff is None:
        return None  # equal or never-diverging representations: no witness
    for n in (diff,):
        if xs[0].eval(n) != 0 or xs[1].eval(n) != 1:
            return None
        if not all(
            xs[0].eval(j) == sc.dense_letter(sc.OMEGA, n, j) for j in range(n)
        ):
            return None
        tail = xs[0].shift(n + 1)
        ok = True
        for i in range(probe_count):
            want = xs[i].shift(n + 1)
            if xs[i].eval(n) != i or not pt.same_point(want, tail):
                ok = False
                break
            if any(
                xs[i].eval(j) != sc.dense_letter(sc.OMEGA, n, j)
                for j in range(n)
            ):
                ok = False
                break
        if ok:
            return AdWitness(n, tail.canonicalize())
    return None


def enumerate_edges(spec):
    """All depth-D hyperedges, n ascending then t lexicographic.

    An edge survives truncation when its dense prefix uses letters below the
    alphabet bound and n + 1 + |t| = D.
    """
    edges = []
    for n in range(spec.D):
        stem = sc.psi(spec.d, n) if spec.d != sc.OMEGA else sc.psi(sc.OMEGA, n)
        if any(letter >= spec.k for letter in stem):
            continue
        prefix = sc.dense_seq(spec.d, n)
        tlen = spec.D - n - 1
        for t in itertools.product(range(spec.k), repeat=tlen):
            vs = tuple(prefix + (i,) + t for i in range(spec.arity))
            edges.append(Hyperedge(vs, n, t))
    return edges


def is_discrete(spec, C):
    """No hyperedge lies entirely inside C."""
    C = set(C)
    for e in enumerate_edges(spec):
        if all(v in C for v in e.vertices):
            return False
    return True


def verify_coloring(spec, coloring):
    """No hyperedge is monochromatic."""
    for v in spec.vertices():
        if v not in coloring:
            raise MissingVertex("vertex %r is uncolored" % (v,))
    for e in enumerate_edges(spec):
        colors = {coloring[v] for v in e.vertices}
        if len(colors) == 1:
            return False
    return True


def brute_chromatic(spec, vertex_bound=VERTEX_BOUND):
    """Least color count admitting a valid coloring, by backtracking."""
    vertices = spec.vertices()
    if len(vertices) > vertex_bound:
        raise TooLarge(
            "%d vertices exceed the bound %d" % (len(vertices), vertex_bound)
        )
    edges = enumerate_edges(spec)
    if not edges:
        return 1
    # visit vertices edge by edge so every hyperedge completes while its
    # other members are recent; lexicographic order separates siblings and
    # makes the backtracking blow up
    order, placed = [], set()
    for e in edges:
        for v in e.vertices:
            if v not in placed:
                placed.add(v)
                order.append(v)
    for v in vertices:
        if v not in placed:
            placed.add(v)
            order.append(v)
    vertices = order
    index = {v: j for j, v in enumerate(vertices)}
    incident = [[] for _ in vertices]
    for e in edges:
        for v in e.vertices:
            incident[index[v]].append(e)
    colors = {}

    def violates(v):
        for e in incident[index[v]]:
            seen = set()
            complete = True
            for w in e.vertices:
                if w in colors:
                    seen.add(colors[w])
                else:
                    complete = False
                    break
            if complete and len(seen) == 1:
                return True
        return False

    def assign(j, ncolors, used):
        if j == len(vertices):
            return True
        v = vertices[j]
        # symmetry pruning: first unused color index only
        for c in range(min(used + 1, ncolors)):
            colors[v] = c
            if not violates(v) and assign(j + 1, ncolors, max(used, c + 1)):
                return True
            del colors[v]
        return False

    ncolors = 1
    while True:
        colors.clear()
        if assign(0, ncolors, 0):
            return ncolors
        ncolors += 1


def coloring_from_partition(spec, parts):
    """Coloring sending each vertex to the index of its part; valid whenever
    the parts are discrete (a monochromatic edge would sit inside a part)."""
    vertices = spec.vertices()
    seen = {}
    for idx, part in enumerate(parts):
        for v in part:
            if v in seen:
                raise NotAPartition("vertex %r in parts %d and %d" % (v, seen[v], idx))
            seen[v] = idx
    missing = [v for v in vertices if v not in seen]
    extra = [v for v in seen if v not in set(vertices)]
    if missing or extra:
        raise NotAPartition(
            "parts do not cover the vertex set exactly "
            "(missing %d, extraneous %d)" % (len(missing), len(extra))
        )
    for idx, part in enumerate(parts):
        if not is_discrete(spec, part):
            raise PartNotDiscrete("part %d carries a whole hyperedge" % idx)
    return dict(seen)
