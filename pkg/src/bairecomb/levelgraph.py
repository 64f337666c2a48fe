"""Level graphs on words of a fixed length and their unique paths.

Two length-(l+1) words are adjacent when they agree everywhere except one
coordinate n, the prefix of length n is the n-th dense word, and the two
letters at n are 0 and some nonzero i.  These graphs are trees, so every
vertex pair has a unique path; ``path_words`` computes it by a recursion on
the length, independent of any alphabet truncation, while ``bfs_path`` is
the search-based cross-check on a built truncation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import seqcoding as sc
from .errors import (
    AlphabetTooSmall,
    Disconnected,
    NotAPath,
    VertexNotInGraph,
)


@dataclass(frozen=True)
class Fiber:
    """The vertex family {dense_seq(n) + (i,) + t | i}; each edge of a level
    graph lies in exactly one fiber."""

    n: int
    t: tuple


class LevelGraph:
    """Truncation of the level-(l+1) graph to the alphabet {0..k-1}."""

    def __init__(self, level, k, vertices, edges):
        self.level = level  # word length l+1
        self.k = k
        self.vertices = vertices
        self.edges = edges  # set of frozensets
        self._adj = {v: [] for v in vertices}
        for e in edges:
            a, b = tuple(e)
            self._adj[a].append(b)
            self._adj[b].append(a)

    def neighbors(self, v):
        if v not in self._adj:
            raise VertexNotInGraph("%r" % (v,))
        return list(self._adj[v])


def hub_word(level):
    """The distinguished root vertex of the level graph: the dense word of
    index equal to the word length."""
    return sc.dense_seq(sc.OMEGA, level)


def build(l, k):
    """Level graph on {0..k-1}^(l+1).

    The alphabet must contain every letter of the dense words up to index l,
    otherwise the connecting fibers leave the truncation and the graph need
    not even be connected.
    """
    level = l + 1
    for j in range(level):
        stem = sc.psi(sc.OMEGA, j)
        bad = [letter for letter in stem if letter >= k]
        if bad:
            raise AlphabetTooSmall(
                "dense word %d uses letter %d >= k=%d" % (j, max(bad), k)
            )
    vertices = sc.words_of(k, level)
    edges = set()
    for n in range(level):
        prefix = sc.dense_seq(sc.OMEGA, n)
        if any(letter >= k for letter in prefix):
            continue
        for t in sc.words_of(k, level - n - 1):
            zero = prefix + (0,) + t
            for i in range(1, k):
                edges.add(frozenset((zero, prefix + (i,) + t)))
    return LevelGraph(level, k, vertices, edges)


def edge_fiber(a, b):
    """The fiber containing edge {a, b}, or None if not an edge."""
    if len(a) != len(b) or a == b:
        return None
    diffs = [j for j in range(len(a)) if a[j] != b[j]]
    if len(diffs) != 1:
        return None
    n = diffs[0]
    if 0 not in (a[n], b[n]):
        return None
    if not sc.dense_has_prefix(sc.OMEGA, n, a[:n]):
        return None
    return Fiber(n, a[n + 1:])


def is_tree(g):
    """Connected with |E| = |V| - 1."""
    if not g.vertices:
        return True
    if len(g.edges) != len(g.vertices) - 1:
        return False
    seen = {g.vertices[0]}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(g.vertices)


def path_words(s, s2):
    """Unique path between two words of equal length, by the level recursion.

    Length 1: (i, 0, i') when both ends are nonzero and distinct, (i, i')
    when exactly one is 0, (i,) when equal.  Length l+2: strip the last
    letters i, i'; if i = i' recurse on the fronts and re-append; otherwise
    route the front through the hub word, inserting hub + (0,) between the
    two halves exactly when both i and i' are nonzero.
    """
    if len(s) != len(s2):
        raise ValueError("path endpoints must have equal length")
    if len(s) == 0:
        raise ValueError("paths live on words of length >= 1")
    if s == s2:
        return [s]
    if len(s) == 1:
        i, i2 = s[0], s2[0]
        if i != 0 and i2 != 0:
            return [(i,), (0,), (i2,)]
        return [s, s2]
    front, i = s[:-1], s[-1]
    front2, i2 = s2[:-1], s2[-1]
    if i == i2:
        return [v + (i,) for v in path_words(front, front2)]
    hub = hub_word(len(front))
    left = [v + (i,) for v in path_words(front, hub)]
    right = [v + (i2,) for v in path_words(hub, front2)]
    if i != 0 and i2 != 0:
        return left + [hub + (0,)] + right
    return left + right


def unique_path(g, s, s2):
    """The recursion's path, checked to lie inside the truncation."""
    for v in (s, s2):
        if v not in g._adj:
            raise VertexNotInGraph("%r" % (v,))
    path = path_words(s, s2)
    for v in path:
        if v not in g._adj:
            raise VertexNotInGraph(
                "path leaves the truncation at %r (alphabet too small)" % (v,)
            )
    return path


def bfs_path(g, s, s2):
    """Shortest path by breadth-first search; in a tree, the unique path."""
    for v in (s, s2):
        if v not in g._adj:
            raise VertexNotInGraph("%r" % (v,))
    if s == s2:
        return [s]
    prev = {s: None}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in prev:
                prev[w] = v
                if w == s2:
                    path = [w]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return list(reversed(path))
                queue.append(w)
    raise Disconnected("no path from %r to %r" % (s, s2))


def check_path(p):
    """Validate that p is a repetition-free path of adjacent vertices."""
    if not p:
        raise NotAPath("empty vertex list")
    if len(set(p)) != len(p):
        raise NotAPath("vertex repeats")
    fibers = []
    for a, b in zip(p, p[1:]):
        f = edge_fiber(a, b)
        if f is None:
            raise NotAPath("%r and %r are not adjacent" % (a, b))
        fibers.append(f)
    return fibers


def fiber_decompose(g_or_none, p):
    """Group a path's edges into maximal runs of one fiber each.

    Returns [(fiber, entry_vertex)] in path order; the entry vertex of a run
    is the path vertex through which the fiber is first reached (its anchor
    in the inductive set construction).
    """
    fibers = check_path(p)
    out = []
    for j, f in enumerate(fibers):
        if not out or out[-1][0] != f:
            out.append((f, p[j]))
    return out


def to_dot(g):
    """DOT rendering; each edge is labeled with its fiber witness."""
    lines = ["graph level%d {" % g.level]
    name = lambda v: '"[%s]"' % ",".join(str(x) for x in v)
    for v in g.vertices:
        lines.append("  %s;" % name(v))
    for e in sorted(g.edges, key=sorted):
        a, b = sorted(e)
        f = edge_fiber(a, b)
        lines.append(
            '  %s -- %s [label="n=%d t=[%s]"];'
            % (name(a), name(b), f.n, ",".join(str(x) for x in f.t))
        )
    lines.append("}")
    return "\n".join(lines)
