"""Refutation procedure for claimed continuous prefix maps into the set of
points with infinitely many dense-word-plus-zero prefixes.

A candidate map is presented as a monotone prefix oracle: a function on
finite words whose replies only grow as the query grows.  The adversary
extracts, round by round, the blocks s_n the oracle is committed to, then
picks letters beta(p) freezing the hit count of the image prefix.  A
genuine map would have to keep producing new hits; a finite stabilized
prefix is the desk-scale evidence against it.  Oracles that cheat are
caught instead: every violation verdict carries replayable evidence.
"""

from __future__ import annotations

import json
import subprocess
from dataclasses import dataclass, field

from . import points as pt
from . import seqcoding as sc
from .errors import ContractBreach, NoSafeLetter, OutOfFuel, UsageError

DEFAULT_FUEL = 10**5
DEFAULT_BOUND = 64
DEFAULT_ROUNDS = 4

#: Consecutive depth increases without reply growth before the progress
#: contract is declared broken.
PATIENCE = 32

NON_MONOTONE = "NonMonotone"
NO_PROGRESS = "NoProgress"
HOM_VIOLATION = "HomomorphismViolation"


def _is_prefix(a, b):
    return len(a) <= len(b) and b[: len(a)] == a


class OracleHandle:
    """Query channel with a probe cache, fuel budget and monotone check."""

    def __init__(self, fn, fuel=DEFAULT_FUEL):
        self.fn = fn
        self.fuel = fuel
        self.cache = {}
        self.log = []  # (query, reply) in probe order

    def probe(self, w):
        w = tuple(w)
        if w in self.cache:
            return self.cache[w]
        if self.fuel <= 0:
            raise OutOfFuel("query budget exhausted")
        self.fuel -= 1
        r = tuple(self.fn(w))
        self.log.append((w, r))
        for q, a in self.cache.items():
            if _is_prefix(q, w) and not _is_prefix(a, r):
                raise ContractBreach(
                    NON_MONOTONE,
                    [(q, a), (w, r)],
                    "reply to %r does not extend reply to its prefix %r" % (w, q),
                )
            if _is_prefix(w, q) and not _is_prefix(r, a):
                raise ContractBreach(
                    NON_MONOTONE,
                    [(w, r), (q, a)],
                    "reply to %r does not extend reply to its prefix %r" % (q, w),
                )
        self.cache[w] = r
        return r


@dataclass
class ExtractionState:
    """Progress of the block extraction.

    s_list[n] is the oracle's n-th committed block, alpha[n] the zero-run
    length making the block sum an all-zeros dense index, block_sums the
    running sums Sigma_{j<=n} (1 + alpha(j))."""

    s_list: list = field(default_factory=list)
    alpha: list = field(default_factory=list)
    block_sums: list = field(default_factory=list)
    depth: int = 1  # continuity probe depth reached

    def known_prefix(self):
        out = ()
        for s in self.s_list:
            out = out + tuple(s) + (0,)
        return out


@dataclass
class Verdict:
    tag: str  # "Diagonalized" | "ContractViolation" | "FuelExhausted"
    kind: str = ""  # violation kind, when tag == "ContractViolation"
    evidence: list = field(default_factory=list)
    detail: str = ""
    beta_prefix: tuple = ()
    image_prefix: tuple = ()
    stabilized: int = -1
    rounds: int = 0
    state: ExtractionState = None


def _all_zero_index(at_least):
    """Least N >= at_least whose dense word is all zeros (its coded stem is
    a zero run, i.e. the code is a primorial)."""
    val = 1
    j = 0
    while True:
        n = sc.seq_rank(val)
        if n >= at_least:
            return n
        val *= sc.nth_prime(j)
        j += 1
        if val > sc.ENUMERATION_CAP:
            raise sc.EnumerationBudgetExceeded(
                "no all-zeros index >= %d within the cap" % at_least
            )


def extract_step(h, st):
    """One round: find the oracle's next committed block and zero run.

    Probes s^w_Sigma + i + 0^p for i in {0, 1} at growing depth p until the
    replies diverge at one position carrying i; the shared part before it
    must be the dense word of its own length and extend everything already
    extracted, else the oracle is not presenting a homomorphism.  Two
    larger letters are spot-checked the same way.  Then alpha(n) is chosen
    to land the next block sum on an all-zeros dense index.
    """
    sigma = st.block_sums[-1] if st.block_sums else 0
    stem = (0,) * sigma  # dense word at an all-zeros index
    p = st.depth
    stale = 0
    last_growth = None
    while True:
        r0 = h.probe(stem + (0,) + (0,) * p)
        r1 = h.probe(stem + (1,) + (0,) * p)
        d = None
        for j in range(min(len(r0), len(r1))):
            if r0[j] != r1[j]:
                d = j
                break
        if d is not None:
            if r0[d] != 0 or r1[d] != 1:
                raise ContractBreach(
                    HOM_VIOLATION,
                    [(stem + (0,) + (0,) * p, r0), (stem + (1,) + (0,) * p, r1)],
                    "divergent letters (%r, %r) are not the probed (0, 1)"
                    % (r0[d], r1[d]),
                )
            prefix = r0[:d]
            known = st.known_prefix()
            if sc.dense_seq(sc.OMEGA, d) != prefix or not _is_prefix(known, prefix):
                raise ContractBreach(
                    HOM_VIOLATION,
                    [(stem + (0,) + (0,) * p, r0), (stem + (1,) + (0,) * p, r1)],
                    "committed prefix %r is not the dense word of length %d "
                    "extending %r" % (prefix, d, known),
                )
            for i in (2, 3):
                ri = h.probe(stem + (i,) + (0,) * p)
                if ri[:d] != prefix or (len(ri) > d and ri[d] != i):
                    raise ContractBreach(
                        HOM_VIOLATION,
                        [(stem + (i,) + (0,) * p, ri)],
                        "spot check at letter %d does not fit the pattern" % i,
                    )
            s_n = prefix[len(known):]
            n_sum = _all_zero_index(sigma + 1)
            a = n_sum - sigma - 1
            st.s_list.append(tuple(s_n))
            st.alpha.append(a)
            st.block_sums.append(n_sum)
            st.depth = p
            return st
        growth = len(r0) + len(r1)
        if growth == last_growth:
            stale += 1
            if stale >= PATIENCE:
                raise ContractBreach(
                    NO_PROGRESS,
                    h.log[-2 * PATIENCE:],
                    "replies stopped growing for %d depth increases" % PATIENCE,
                )
        else:
            stale = 0
            last_growth = growth
        p += 1


def build_beta(st, bound=DEFAULT_BOUND):
    """Letters beta(p), each the least below the bound keeping the image
    prefix's hit count at N[s_0]."""
    if len(st.s_list) < 2:
        raise UsageError("need at least two extracted blocks")
    n0 = pt.hit_count(st.s_list[0])
    betas = []
    word = tuple(st.s_list[0])
    for p in range(len(st.s_list) - 1):
        counts = []
        chosen = None
        for b in range(bound):
            cand = word + (b,) + tuple(st.s_list[p + 1])
            c = pt.hit_count(cand)
            counts.append(c)
            if c == n0:
                chosen = b
                break
        if chosen is None:
            raise NoSafeLetter(p, counts)
        betas.append(chosen)
        word = word + (chosen,) + tuple(st.s_list[p + 1])
    return tuple(betas)


def run_adversary(h, rounds=DEFAULT_ROUNDS, bound=DEFAULT_BOUND):
    """Drive the extraction and the letter choice; fold failures into a
    verdict instead of raising."""
    st = ExtractionState()
    try:
        for _ in range(rounds):
            st = extract_step(h, st)
        betas = build_beta(st, bound)
    except ContractBreach as cb:
        return Verdict(
            tag="ContractViolation",
            kind=cb.kind,
            evidence=list(cb.evidence),
            detail=cb.detail,
            rounds=len(st.s_list),
            state=st,
        )
    except OutOfFuel:
        return Verdict(tag="FuelExhausted", rounds=len(st.s_list), state=st)
    image = tuple(st.s_list[0])
    beta_input = ()
    for p, b in enumerate(betas):
        image = image + (b,) + tuple(st.s_list[p + 1])
        beta_input = beta_input + (b,) + (0,) * st.alpha[p]
    return Verdict(
        tag="Diagonalized",
        beta_prefix=beta_input,
        image_prefix=image,
        stabilized=pt.hit_count(st.s_list[0]),
        rounds=len(st.s_list),
        state=st,
    )


def replay_verdict(v):
    """Check a verdict's evidence without the oracle.

    Violation evidence must replay to a genuine breach; a Diagonalized
    verdict must have a stabilized hit count across its reported blocks."""
    if v.tag == "ContractViolation":
        if v.kind == NON_MONOTONE:
            if len(v.evidence) != 2:
                return False
            (q, a), (w, r) = v.evidence
            return _is_prefix(q, w) and not _is_prefix(a, r)
        if v.kind == NO_PROGRESS:
            lengths = [len(r) for _, r in v.evidence]
            return len(lengths) >= 2 and len(set(lengths)) <= 2
        if v.kind == HOM_VIOLATION:
            if not v.evidence:
                return False
            if len(v.evidence) == 2:
                (_, r0), (_, r1) = v.evidence
                d = None
                for j in range(min(len(r0), len(r1))):
                    if r0[j] != r1[j]:
                        d = j
                        break
                if d is None:
                    return False
                if (r0[d], r1[d]) != (0, 1):
                    return True
                return sc.dense_seq(sc.OMEGA, d) != r0[:d]
            # spot-check breach: reply does not extend the committed prefix
            return True
        return False
    if v.tag == "Diagonalized":
        st = v.state
        n0 = pt.hit_count(st.s_list[0])
        if v.stabilized != n0:
            return False
        word = tuple(st.s_list[0])
        idx = len(word)
        for p in range(len(st.s_list) - 1):
            b = v.image_prefix[idx]
            word = word + (b,) + tuple(st.s_list[p + 1])
            idx = len(word)
            if pt.hit_count(word) != n0:
                return False
        return word == v.image_prefix
    return v.tag == "FuelExhausted"


# --- builtin oracles -------------------------------------------------------

def identity_oracle(w):
    """The depth-consistent stub: replies echo the query."""
    return tuple(w)


def prepend_zero_oracle(w):
    """Prefixes every image with a zero; monotone but not a homomorphism."""
    return (0,) + tuple(w)


def broken_oracle(w):
    """Forgets everything past depth 3; breaks the monotone contract."""
    w = tuple(w)
    return w if len(w) <= 3 else w[:2]


BUILTIN_ORACLES = {
    "identity": identity_oracle,
    "prepend-zero": prepend_zero_oracle,
    "broken": broken_oracle,
}


# --- wire protocol ---------------------------------------------------------

def format_word(w):
    return "[%s]" % ",".join(str(x) for x in w)


def parse_word(text):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise UsageError("malformed word %r" % text)
    inner = text[1:-1].strip()
    if not inner:
        return ()
    try:
        letters = tuple(int(x) for x in inner.split(","))
    except ValueError:
        raise UsageError("malformed word %r" % text)
    if any(x < 0 for x in letters):
        raise UsageError("negative letter in %r" % text)
    return letters


def verdict_line(v):
    payload = {
        "kind": v.kind,
        "detail": v.detail,
        "beta_prefix": list(v.beta_prefix),
        "image_prefix": list(v.image_prefix),
        "stabilized": v.stabilized,
        "rounds": v.rounds,
    }
    return "V %s %s" % (v.tag, json.dumps(payload, sort_keys=True))


def serve_oracle(fn, rin, rout):
    """Oracle side of the wire protocol: answer Q lines until the adversary
    sends its verdict (or the stream closes)."""
    for line in rin:
        line = line.strip()
        if not line:
            continue
        if line.startswith("Q "):
            reply = fn(parse_word(line[2:]))
            rout.write("A %s\n" % format_word(reply))
            rout.flush()
        elif line.startswith("V "):
            return line
        else:
            raise UsageError("unexpected protocol line %r" % line)
    return None


class WireOracle:
    """Adversary-side callable speaking the wire protocol to a subprocess."""

    def __init__(self, cmd):
        self.proc = subprocess.Popen(
            cmd,
            shell=True,
            stdin=subprocess.PIPE,
            stdout=subprocess.PIPE,
            text=True,
        )

    def __call__(self, w):
        self.proc.stdin.write("Q %s\n" % format_word(w))
        self.proc.stdin.flush()
        line = self.proc.stdout.readline()
        if not line.startswith("A "):
            raise UsageError("oracle protocol reply %r" % line)
        return parse_word(line[2:])

    def finish(self, verdict):
        try:
            self.proc.stdin.write(verdict_line(verdict) + "\n")
            self.proc.stdin.flush()
            self.proc.stdin.close()
        except (BrokenPipeError, ValueError):
            pass
        self.proc.wait(timeout=10)
