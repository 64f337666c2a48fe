"""Finite-word codings: prime codes, the coded-word set, rank bijections and
the dense word family.

A word is a tuple of naturals.  Its prime code is
``p_0^(s_0+1) * ... * p_{k-1}^(s_{k-1}+1)`` over consecutive primes starting
at 2, with the empty word coded by 1.  Codes are kept as Python ints, so
they never overflow; what *is* bounded is how far we can enumerate the
sorted code list, since ranks of large codes require counting everything
below them.  ``ENUMERATION_CAP`` is that desk-scale bound.
"""

from __future__ import annotations

import bisect
import itertools
import threading

from sympy import sieve as sympy_sieve

from .errors import EnumerationBudgetExceeded, NotASeqCode

OMEGA = "omega"

#: Largest code value the sorted enumeration cache is allowed to reach.
ENUMERATION_CAP = 10**16

Word = tuple  # tuple of ints


def check_dimension(d):
    if d == OMEGA:
        return d
    if isinstance(d, int) and d >= 2:
        return d
    raise ValueError("dimension must be an int >= 2 or OMEGA, got %r" % (d,))


# --- primes ---------------------------------------------------------------

_primes_lock = threading.Lock()


def nth_prime(i):
    """The i-th prime, 0-indexed (nth_prime(0) == 2)."""
    with _primes_lock:
        return sympy_sieve[i + 1]


# --- prime coding ---------------------------------------------------------

def prime_code(s):
    """Prime code of a finite word; injective, 1 for the empty word."""
    c = 1
    for i, letter in enumerate(s):
        if letter < 0:
            raise ValueError("letters must be naturals, got %r" % (letter,))
        c *= nth_prime(i) ** (letter + 1)
    return c


def prime_decode(c):
    """Inverse of prime_code.  Raises NotASeqCode for integers that skip a
    prime or are not >= 1."""
    if c < 1:
        raise NotASeqCode("codes are >= 1, got %r" % (c,))
    letters = []
    i = 0
    while c > 1:
        p = nth_prime(i)
        e = 0
        while c % p == 0:
            c //= p
            e += 1
        if e == 0:
            raise NotASeqCode("factorization skips prime %d" % p)
        letters.append(e - 1)
        i += 1
    return tuple(letters)


def is_seq_code(c):
    try:
        prime_decode(c)
    except NotASeqCode:
        return False
    return True


# --- sorted enumeration of all codes --------------------------------------

class _CodeTable:
    """Sorted list of every prime code up to a growing bound.

    Codes are generated directly (products of consecutive prime powers with
    all exponents >= 1) rather than by filtering integers, so the cache cost
    is proportional to the number of codes, not to the bound.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._bound = 0
        self._codes = []
        self._stems = []

    def _generate(self, bound):
        out = [1]
        stack = [(0, 1)]
        while stack:
            idx, val = stack.pop()
            v = val * nth_prime(idx)
            while v <= bound:
                out.append(v)
                stack.append((idx + 1, v))
                v *= nth_prime(idx)
        out.sort()
        self._codes = out
        self._stems = [None] * len(out)
        self._bound = bound

    def ensure_bound(self, bound):
        if bound > ENUMERATION_CAP:
            raise EnumerationBudgetExceeded(
                "code enumeration bound %d exceeds cap %d" % (bound, ENUMERATION_CAP)
            )
        with self._lock:
            if bound > self._bound:
                target = min(max(bound, 4 * self._bound, 10**6), ENUMERATION_CAP)
                self._generate(target)

    def ensure_count(self, n):
        while True:
            with self._lock:
                if len(self._codes) > n:
                    return
                b = self._bound
            if b >= ENUMERATION_CAP:
                raise EnumerationBudgetExceeded(
                    "fewer than %d codes below the enumeration cap" % (n + 1,)
                )
            self.ensure_bound(max(b * 4, 10**6))

    def code_at(self, n):
        self.ensure_count(n)
        return self._codes[n]

    def rank_of(self, c):
        self.ensure_bound(c)
        return bisect.bisect_left(self._codes, c)

    def stem_at(self, n):
        self.ensure_count(n)
        with self._lock:
            s = self._stems[n]
            if s is None:
                s = prime_decode(self._codes[n])
                self._stems[n] = s
            return s


_table = _CodeTable()


def seq_rank(c):
    """Number of valid codes strictly below c (the increasing rank)."""
    if not is_seq_code(c):
        raise NotASeqCode("%r is not a prime code" % (c,))
    return _table.rank_of(c)


# --- the enumerations psi_d and the dense words ---------------------------

def psi(d, n):
    """n-th word of d^<omega: code order for d == OMEGA, length-then-lex for
    finite d."""
    check_dimension(d)
    if n < 0:
        raise ValueError("n must be a natural")
    if d == OMEGA:
        return _table.stem_at(n)
    # find the length block containing index n
    length, first = 0, 0
    while True:
        count = d**length
        if n < first + count:
            break
        first += count
        length += 1
    offset = n - first
    letters = []
    for _ in range(length):
        letters.append(offset % d)
        offset //= d
    return tuple(reversed(letters))


def dense_seq(d, n):
    """The n-th dense word: psi(d, n) padded with zeros to length exactly n."""
    stem = psi(d, n)
    return stem + (0,) * (n - len(stem))


def dense_letter(d, n, j):
    """Letter j of dense_seq(d, n) without materializing the padding."""
    if not 0 <= j < n:
        raise IndexError(j)
    stem = psi(d, n)
    return stem[j] if j < len(stem) else 0


def dense_has_prefix(d, n, s):
    """True iff s is an initial segment of dense_seq(d, n)."""
    if n < len(s):
        return False
    stem = psi(d, n)
    for j, letter in enumerate(s):
        if letter != (stem[j] if j < len(stem) else 0):
            return False
    return True


def _truncation_codes(s):
    # codes of stems s[:j] whose dropped tail s[j:] is all zeros; prefix
    # codes past the enumeration cap cannot have computable ranks, so the
    # incremental product stops there
    first_tail_zeros = len(s)
    while first_tail_zeros > 0 and s[first_tail_zeros - 1] == 0:
        first_tail_zeros -= 1
    out = []
    val = 1
    for j in range(len(s) + 1):
        if j >= first_tail_zeros:
            out.append(val)
        if j < len(s):
            val *= nth_prime(j) ** (s[j] + 1)
            if val > ENUMERATION_CAP:
                break
    return out


def _bounded_code(s, bound):
    # prime_code(s) if it is <= bound, else None; avoids building the full
    # bignum for very long words
    val = 1
    for j, letter in enumerate(s):
        val *= nth_prime(j) ** (letter + 1)
        if val > bound:
            return None
    return val


def _extension_codes(s, bound):
    # codes of stems extending s, up to bound
    base = _bounded_code(s, bound)
    if base is None:
        return []
    out = [base]
    stack = [(len(s), base)]
    while stack:
        idx, val = stack.pop()
        v = val * nth_prime(idx)
        while v <= bound:
            out.append(v)
            stack.append((idx + 1, v))
            v *= nth_prime(idx)
    return out


def density_witness(d, s, m):
    """Minimal n >= m with s an initial segment of the n-th dense word."""
    check_dimension(d)
    if d != OMEGA:
        if any(letter >= d for letter in s):
            raise ValueError("letters of %r exceed dimension %d" % (s, d))
        n = max(m, len(s))
        while not dense_has_prefix(d, n, s):
            n += 1
        return n
    # d == OMEGA: the witnesses are exactly the ranks of codes whose decoded
    # stem is compatible with s; walk compatible codes in increasing order.
    target = max(m, len(s))
    own = _bounded_code(s, ENUMERATION_CAP)
    bound = max(own or 0, 10**6)
    truncations = [c for c in _truncation_codes(s) if c <= ENUMERATION_CAP]
    while True:
        candidates = sorted(truncations + _extension_codes(s, bound))
        for c in candidates:
            n = _table.rank_of(c)
            if n >= target:
                return n
        if bound >= ENUMERATION_CAP:
            raise EnumerationBudgetExceeded(
                "no witness for %r at m=%d within cap" % (s, m)
            )
        bound = min(bound * 16, ENUMERATION_CAP)


def words_of(alphabet, length):
    """All words over range(alphabet) of the given length, lexicographic."""
    return [tuple(w) for w in itertools.product(range(alphabet), repeat=length)]
