"""Finitely presented points of Baire space.

A BasePoint is generated by a deterministic schedule that keeps planting
prefixes of the form ``dense_seq(omega, n)`` followed by a target letter, so
that the hit predicate can be certified from the log instead of taken on
faith.  A TailPoint is a finite word glued onto a shifted base point; the
eventual-equality classes of a base are exactly its finite modifications.

The schedule cannot run forever: once a nonzero letter is planted at
position n, every later witness rank requires counting all codes below
roughly the primorial of n, which grows as a tower.  Evaluation past the
affordable horizon raises HorizonExceeded rather than inventing letters.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from . import seqcoding as sc
from .errors import (
    DifferentBases,
    EnumerationBudgetExceeded,
    HorizonExceeded,
    PreconditionFailed,
)


def _diagonal_targets():
    """Fair enumeration of all (letter, minimum) targets.

    Within each diagonal the letter is taken descending, which front-loads
    the first plant of every letter while positions are still cheap.
    """
    diag = 0
    while True:
        for letter in range(diag, -1, -1):
            yield (letter, diag - letter)
        diag += 1


class BasePoint:
    """Deterministic generated point with a certified hit log.

    The schedule processes targets (l, m) in a fixed fair order: each target
    extends the current word w to ``dense_seq(omega, n) + (l,)`` where n is
    the minimal density witness of w at or past max(m, len(w)).  Every entry
    (n, l) of ``hit_log`` therefore satisfies: the first n letters equal the
    n-th dense word and letter n equals l.
    """

    def __init__(self, seed=0):
        self.seed = seed
        self._letters = list(sc.psi(sc.OMEGA, seed))
        self._hits = []
        self._targets = _diagonal_targets()
        self._done = 0  # targets processed
        self._stuck = False
        self._lock = threading.RLock()

    def __repr__(self):
        return "BasePoint(seed=%d)" % self.seed

    def _advance(self):
        if self._stuck:
            raise HorizonExceeded(
                "base seed=%d: next plant is past the enumeration cap "
                "(letters materialized: %d)" % (self.seed, len(self._letters))
            )
        letter, m = next(self._targets)
        w = tuple(self._letters)
        try:
            n = sc.density_witness(sc.OMEGA, w, max(m, len(w)))
        except EnumerationBudgetExceeded:
            self._stuck = True
            raise HorizonExceeded(
                "base seed=%d: witness for target (l=%d, m=%d) is past the "
                "enumeration cap" % (self.seed, letter, m)
            )
        stem = sc.psi(sc.OMEGA, n)
        self._letters[len(w):] = list(stem[len(w):])
        self._letters.extend([0] * (n - len(self._letters)))
        self._letters.append(letter)
        self._hits.append((n, letter))
        self._done += 1

    def letter(self, k):
        """Coordinate k of the point."""
        with self._lock:
            while len(self._letters) <= k:
                self._advance()
            return self._letters[k]

    def prefix(self, length):
        with self._lock:
            while len(self._letters) < length:
                self._advance()
            return tuple(self._letters[:length])

    def hit_log(self):
        with self._lock:
            return list(self._hits)

    def ensure_targets(self, count):
        """Process schedule targets up to the given count; returns the
        position reached."""
        with self._lock:
            while self._done < count:
                self._advance()
            return len(self._letters)


def make_canonical_base(seed=0):
    """A BasePoint whose schedule certifies its hit structure."""
    return BasePoint(seed)


@dataclass(frozen=True)
class TailPoint:
    """The infinite sequence word + (base shifted left by drop)."""

    word: tuple
    base: BasePoint
    drop: int = 0

    def eval(self, k):
        if k < len(self.word):
            return self.word[k]
        return self.base.letter(self.drop + k - len(self.word))

    def prefix(self, length):
        return tuple(self.eval(k) for k in range(length))

    @property
    def offset(self):
        """Alignment of the tail against the base; invariant under
        canonicalization."""
        return self.drop - len(self.word)

    def canonicalize(self):
        """Shortest representation: absorb trailing word letters that agree
        with the base coordinate they sit over."""
        word, drop = self.word, self.drop
        while word and drop >= 1 and word[-1] == self.base.letter(drop - 1):
            word = word[:-1]
            drop -= 1
        if word is self.word:
            return self
        return TailPoint(word, self.base, drop)

    def shift(self, j):
        """The point from coordinate j on."""
        if j <= len(self.word):
            return TailPoint(self.word[j:], self.base, self.drop)
        return TailPoint((), self.base, self.drop + j - len(self.word))

    def prepend(self, prefix):
        return TailPoint(tuple(prefix) + self.word, self.base, self.drop)


def same_point(x, y):
    """Exact equality of the denoted sequences (same base required)."""
    if x.base is not y.base:
        raise DifferentBases("points over distinct bases")
    a, b = x.canonicalize(), y.canonicalize()
    return a.word == b.word and a.drop == b.drop


def substitute(x, n, p):
    """Replace coordinate n of x by p; tail-equivalent to x."""
    word, drop = x.word, x.drop
    if n >= len(word):
        extra = n + 1 - len(word)
        word = word + tuple(x.base.letter(drop + j) for j in range(extra))
        drop += extra
    word = word[:n] + (p,) + word[n + 1:]
    return TailPoint(word, x.base, drop).canonicalize()


def block_shift(x, n, i):
    """Given a point with prefix dense_seq(omega, n) + (0,), replace the
    letter after the dense prefix by i."""
    for j in range(n):
        if x.eval(j) != sc.dense_letter(sc.OMEGA, n, j):
            raise PreconditionFailed(
                "prefix of length %d is not the %d-th dense word" % (n, n)
            )
    if x.eval(n) != 0:
        raise PreconditionFailed("letter after the dense prefix is not 0")
    return substitute(x, n, i)


def e0_equivalent(x, y):
    """Eventual equality.  Decidable on represented points over one base:
    equal alignment offsets give eventually equal tails, while distinct
    offsets would force the base to be eventually shift-periodic, which the
    generated schedule rules out (it plants unboundedly large letters)."""
    if x.base is not y.base:
        raise DifferentBases("eventual equality needs a common base")
    return x.offset == y.offset


def hit_count(s):
    """Number of n with dense_seq(omega, n) + (0,) an initial segment of the
    finite word s."""
    count = 0
    for n in range(len(s)):
        if s[n] == 0 and sc.dense_has_prefix(sc.OMEGA, n, s[:n]):
            count += 1
    return count


def g_hits(x, l, m, depth):
    """All n in [m, depth) whose dense prefix is followed by letter l in x."""
    out = []
    for n in range(m, depth):
        if x.eval(n) != l:
            continue
        if all(x.eval(j) == sc.dense_letter(sc.OMEGA, n, j) for j in range(n)):
            out.append(n)
    return out


def first_hit(x, l, start=0, limit=None):
    """Least n >= start whose dense prefix in x is followed by letter l.

    The search is honest about its budget: it stops with HorizonExceeded
    once n passes `limit` (default: the enumeration-cap horizon surfaces
    through base evaluation)."""
    n = start
    while True:
        if limit is not None and n >= limit:
            raise HorizonExceeded(
                "no hit for letter %d below %d" % (l, limit)
            )
        if x.eval(n) == l and all(
            x.eval(j) == sc.dense_letter(sc.OMEGA, n, j) for j in range(n)
        ):
            return n
        n += 1
