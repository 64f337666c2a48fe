"""Per-class homomorphism into the canonical generated point.

Every finite modification x of a base point is determined by its canonical
modification word w (x = w + base tail from |w|).  The image u(x) is built
by induction on |w|, and within one length by induction on the fiber depth
of w's front in the level graph: each step locates the anchor of the last
fiber on the unique path from the hub word, takes the anchor's already
computed image, finds the least index n whose dense word followed by the
anchor's letter is a prefix of that image, and splices the fiber letter in
after it.  All the choices are logged, so a run can be audited.
"""

from __future__ import annotations

import bisect
import threading

from . import digraph as dg
from . import levelgraph as lg
from . import points as pt
from . import seqcoding as sc
from .errors import AlphabetTooSmall, DifferentBases, NotCanonical

#: Default bound for the prefix-hit searches inside image points.
SEARCH_LIMIT = 10**5


class HomContext:
    """Mutable per-class state: the base, its chosen image point, the memo
    of computed images keyed by canonical modification word, and the log of
    chosen hit indices."""

    def __init__(self, base, image_seed=None, search_limit=SEARCH_LIMIT):
        self.base = base
        if image_seed is None:
            image_seed = base.seed + 1
        self.image_base = pt.TailPoint((), pt.make_canonical_base(image_seed), 0)
        self.memo = {(): self.image_base}
        self.choice_log = []  # (modification length, fiber n, fiber t, chosen index)
        self.search_limit = search_limit
        self._img_nz = []
        self._img_nz_upto = 0
        self._lock = threading.RLock()

    def canon_word(self, w):
        """Shortest modification word denoting the same point."""
        w = tuple(w)
        while w and w[-1] == self.base.letter(len(w) - 1):
            w = w[:-1]
        return w

    def modification_word(self, x):
        if x.base is not self.base:
            raise DifferentBases("point is over a different base")
        c = x.canonicalize()
        if c.offset != 0:
            raise NotCanonical(
                "point is shifted against the base (offset %d); not a "
                "finite modification" % c.offset
            )
        return c.word

    def point_of_word(self, w):
        return pt.TailPoint(tuple(w), self.base, len(w))


def _splice(image, n, letter):
    # dense_seq(n) + (letter,) + (image from coordinate n+1 on)
    return image.shift(n + 1).prepend(sc.dense_seq(sc.OMEGA, n) + (letter,))


def _is_hit(y, lam, n):
    if y.eval(n) != lam:
        return False
    return all(y.eval(j) == sc.dense_letter(sc.OMEGA, n, j) for j in range(n))


def _image_nonzeros(ctx, upto):
    """Sorted nonzero coordinate positions of the image-side base point
    below `upto`; cached on the context."""
    base = ctx.image_base.base
    if upto > ctx._img_nz_upto:
        seg = base.prefix(upto)
        ctx._img_nz = [m for m, c in enumerate(seg) if c != 0]
        ctx._img_nz_upto = upto
    lo = bisect.bisect_left(ctx._img_nz, 0)
    hi = bisect.bisect_left(ctx._img_nz, upto)
    return ctx._img_nz[lo:hi]


def _all_zero(ctx, y, nzw, a, b):
    # no nonzero letter of y in [a, b); nzw is the word part's nonzero list
    if a >= b:
        return True
    W = len(y.word)
    i = bisect.bisect_left(nzw, a)
    if i < len(nzw) and nzw[i] < min(b, W):
        return False
    if b <= W:
        return True
    lo = y.drop + max(a, W) - W
    hi = y.drop + b - W
    nzb = _image_nonzeros(ctx, hi)
    i = bisect.bisect_left(nzb, lo)
    return not (i < len(nzb) and nzb[i] < hi)


def _candidate_hits(ctx, y, lam):
    """All n below the search limit with dense_seq(n) + (lam,) a prefix of y.

    The n-th dense word is the n-th coded word padded with zeros, so a hit
    at n means the n-th code is the code of y's length-j prefix for some
    j <= n with only zeros in between.  Only ~15 prefixes fit under the
    enumeration cap, so they are coded directly and their ranks checked
    instead of scanning every n."""
    try:
        code_bound = min(sc.ENUMERATION_CAP, sc._table.code_at(ctx.search_limit))
    except sc.EnumerationBudgetExceeded:
        code_bound = sc.ENUMERATION_CAP
    nzw = [m for m, c in enumerate(y.word) if c != 0]
    out = []
    val = 1
    j = 0
    while val <= code_bound:
        try:
            n = sc._table.rank_of(val)
            if j <= n < ctx.search_limit:
                if y.eval(n) == lam and _all_zero(ctx, y, nzw, j, n):
                    out.append(n)
            letter = y.eval(j)
        except pt.HorizonExceeded:
            break
        val *= sc.nth_prime(j) ** (letter + 1)
        j += 1
    out.sort()
    return out


#: Stand-in letter used when a choice must not depend on the letter that
#: will actually be spliced in.
_PROBE = 1


def _word_code_key(y, n, letter):
    # prime code of the spliced word with trailing zeros stripped; a small
    # code keeps the image's continuation ranks reachable
    word = sc.dense_seq(sc.OMEGA, n) + (letter,) + y.word[n + 1:]
    while word and word[-1] == 0:
        word = word[:-1]
    code = sc._bounded_code(word, sc.ENUMERATION_CAP)
    return (0, code, n) if code is not None else (1, 0, n)


def _ordered_candidates(ctx, y, lam):
    """Hit indices for lam in y, best-first.

    Any hit is a valid splice point; the order prefers results with small
    prime codes (computed with a fixed probe letter so the order cannot
    depend on which letter a fiber member splices in), because small codes
    keep the image's continuation ranks reachable below the horizon."""
    cands = _candidate_hits(ctx, y, lam)
    cands.sort(key=lambda n: _word_code_key(y, n, _PROBE))
    return cands


def _step(ctx, w):
    """The inductive step for modification word w: the parent word whose
    image gets spliced, the letter searched in it, the letter spliced in,
    and the choice-log tag.  Depends on w only, never on chosen indices."""
    base = ctx.base
    if len(w) == 1:
        return (), base.letter(0), w[0], (1, 0, ())
    front, k = w[:-1], w[-1]
    root = sc.dense_seq(sc.OMEGA, len(front))
    if front == root:
        return ctx.canon_word(front), base.letter(len(front)), k, (len(w), -1, ())
    path = lg.path_words(root, front)
    fiber, anchor = lg.fiber_decompose(None, path)[-1]
    parent = ctx.canon_word(anchor + (k,))
    return parent, anchor[fiber.n], front[fiber.n], (len(w), fiber.n, fiber.t)


def _chain(ctx, w):
    """All not-yet-memoized steps needed for u(w), deepest first.  Each
    step's parent is either memoized or the previous chain entry."""
    need = []
    v = w
    while v not in ctx.memo:
        parent, lam, letter, tag = _step(ctx, v)
        need.append((v, parent, lam, letter, tag))
        v = parent
    need.reverse()
    return need


def _build_chain(ctx, need, j, images):
    """Depth-first assignment of splice indices to the chain.

    Each step may use any hit index, so the search takes them best-first
    and backtracks when a later step runs out of hits (a splice can bury
    the prefixes the next search needs).  Terminal steps always take the
    first candidate, which keeps fiber siblings spliced at one shared
    index across separate calls."""
    if j == len(need):
        return True
    v, parent, lam, letter, tag = need[j]
    y = images[parent][0] if parent in images else ctx.memo[parent]
    for n in _ordered_candidates(ctx, y, lam):
        images[v] = (_splice(y, n, letter), tag + (n,))
        if _build_chain(ctx, need, j + 1, images):
            return True
        del images[v]
    return False


def _u_of_word(ctx, w):
    if w in ctx.memo:
        return ctx.memo[w]
    need = _chain(ctx, w)
    images = {}
    if not _build_chain(ctx, need, 0, images):
        raise pt.HorizonExceeded(
            "no image for modification %r admits the required prefix hits "
            "within the search budget" % (w,)
        )
    for v, _, _, _, _ in need:
        image, tag = images[v]
        ctx.memo[v] = image
        ctx.choice_log.append(tag)
    return ctx.memo[w]


def extend_one(ctx, i):
    """Image of the point differing from the base at coordinate 0 only."""
    with ctx._lock:
        if i == ctx.base.letter(0):
            return ctx.memo[()]
        return _u_of_word(ctx, (i,))


def u_apply(ctx, x):
    """Image of a finite modification of the base."""
    with ctx._lock:
        return _u_of_word(ctx, ctx.modification_word(x))


def q_level(s):
    """Fiber depth of a word in its level graph: the number of fiber runs
    on the unique path from the hub word; 0 exactly on the hub word."""
    root = sc.dense_seq(sc.OMEGA, len(s))
    if s == root:
        return 0
    return len(lg.fiber_decompose(None, lg.path_words(root, s)))


def verify_tuple_maps(ctx, w, arity, depth):
    """Check that the images of a witnessed tuple's first `arity`
    coordinates again form a witnessed tuple, with every image a finite
    modification of the chosen class image."""
    xs = [dg.tuple_from_witness(sc.OMEGA, w, i) for i in range(arity)]
    # image the last coordinate first: its construction chain is the longest
    # (the lower coordinates' chains are prefixes of it plus one terminal
    # splice), so planning it first settles the shared memo entries under
    # the strongest constraints
    ys = [None] * arity
    for i in reversed(range(arity)):
        ys[i] = u_apply(ctx, xs[i])
    got = dg.witness_from_tuple(ys, probe_count=arity)
    if got is None:
        return False
    expected = [dg.tuple_from_witness(sc.OMEGA, got, i) for i in range(arity)]
    for y, e in zip(ys, expected):
        if not pt.e0_equivalent(y, ctx.image_base):
            return False
        if y.prefix(depth) != e.prefix(depth):
            return False
    return True


def eq_construction(l, k):
    """Truncated inductive covering of the level-(l+1) vertices by fibers.

    The vertex enumeration phi is lex rank with the hub word swapped to 0.
    Starting from {hub}, stage q+1 absorbs the whole fiber of every
    minimal uncovered phi-value adjacent to the stage-q set, so a vertex's
    stage is its fiber distance from the hub: the number of fiber runs on
    its unique tree path.  Returns the increasing list of covered phi-sets
    and the stage of each vertex.
    """
    g = lg.build(l, k)  # validates the alphabet closure rule
    vertices = sorted(g.vertices)
    root = lg.hub_word(l + 1)
    phi = {v: j for j, v in enumerate(vertices)}
    swap = vertices[0]
    phi[root], phi[swap] = 0, phi[root]
    inv = {p: v for v, p in phi.items()}

    covered = {0}
    sets = [frozenset(covered)]
    depth = {root: 0}
    while len(covered) < len(vertices):
        q = len(sets)
        absorbed = []
        frontier = set(covered)
        for r in sorted(p for p in phi.values() if p not in covered):
            if r in covered:  # absorbed earlier in this stage
                continue
            for p in sorted(frontier):
                e = frozenset((inv[p], inv[r]))
                if e in g.edges:
                    fiber = lg.edge_fiber(inv[p], inv[r])
                    for i in range(k):
                        m = sc.dense_seq(sc.OMEGA, fiber.n) + (i,) + fiber.t
                        if phi[m] not in covered:
                            absorbed.append(m)
                            covered.add(phi[m])
                    break
        if not absorbed:
            raise AlphabetTooSmall(
                "covered part has no uncovered neighbor; truncation is "
                "disconnected"
            )
        for v in absorbed:
            depth[v] = q
        sets.append(frozenset(covered))
    return sets, depth
