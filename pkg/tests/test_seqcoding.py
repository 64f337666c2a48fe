"""Codings against an independently generated oracle table."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bairecomb import seqcoding as sc
from bairecomb.errors import EnumerationBudgetExceeded, NotASeqCode

# first 50 codes and their decodings, generated by a separate
# trial-division enumerate-filter-sort pass and frozen here
CODES_50 = [
    1, 2, 4, 6, 8, 12, 16, 18, 24, 30, 32, 36, 48, 54, 60, 64, 72, 90, 96,
    108, 120, 128, 144, 150, 162, 180, 192, 210, 216, 240, 256, 270, 288,
    300, 324, 360, 384, 420, 432, 450, 480, 486, 512, 540, 576, 600, 630,
    648, 720, 750,
]
STEMS_50 = [
    (), (0,), (1,), (0, 0), (2,), (1, 0), (3,), (0, 1), (2, 0), (0, 0, 0),
    (4,), (1, 1), (3, 0), (0, 2), (1, 0, 0), (5,), (2, 1), (0, 1, 0),
    (4, 0), (1, 2), (2, 0, 0), (6,), (3, 1), (0, 0, 1), (0, 3), (1, 1, 0),
    (5, 0), (0, 0, 0, 0), (2, 2), (3, 0, 0), (7,), (0, 2, 0), (4, 1),
    (1, 0, 1), (1, 3), (2, 1, 0), (6, 0), (1, 0, 0, 0), (3, 2), (0, 1, 1),
    (4, 0, 0), (0, 4), (8,), (1, 2, 0), (5, 1), (2, 0, 1), (0, 1, 0, 0),
    (2, 3), (3, 1, 0), (0, 0, 2),
]


def test_prime_code_examples():
    assert sc.prime_code(()) == 1
    assert sc.prime_code((0,)) == 2
    assert sc.prime_code((1, 0, 2)) == 4 * 3 * 125


def test_round_trip_small():
    for length in range(4):
        for w in itertools.product(range(4), repeat=length):
            assert sc.prime_decode(sc.prime_code(w)) == w


def test_decode_rejects_non_codes():
    for c in (0, -1, 3, 5, 9, 10, 25):
        with pytest.raises(NotASeqCode):
            sc.prime_decode(c)
    assert not sc.is_seq_code(10)
    assert sc.is_seq_code(12)


def test_code_table_matches_oracle():
    for n, (c, stem) in enumerate(zip(CODES_50, STEMS_50)):
        assert sc._table.code_at(n) == c
        assert sc.psi(sc.OMEGA, n) == stem
        assert sc.seq_rank(c) == n


def test_psi_finite_is_length_then_lex():
    # d = 2: blocks of size 2^length in lexicographic order
    expected = [()]
    for length in range(1, 4):
        expected.extend(itertools.product(range(2), repeat=length))
    for n, w in enumerate(expected):
        assert sc.psi(2, n) == tuple(w)


def test_dense_lengths():
    for d in (2, 3, sc.OMEGA):
        for n in range(300):
            assert len(sc.dense_seq(d, n)) == n
            assert len(sc.psi(d, n)) <= n


def test_dense_letter_and_prefix_agree():
    for d in (2, sc.OMEGA):
        for n in range(60):
            w = sc.dense_seq(d, n)
            assert all(sc.dense_letter(d, n, j) == w[j] for j in range(n))
            assert sc.dense_has_prefix(d, n, w)
            assert sc.dense_has_prefix(d, n, w[: n // 2])
            if n:
                bumped = (w[0] + 1,) + w[1:]
                assert not sc.dense_has_prefix(d, n, bumped)


def test_density_witness_small():
    for d in (2, sc.OMEGA):
        for s in [(), (0,), (1,), (0, 1), (1, 0, 0)]:
            for m in (0, 3, 17):
                n = sc.density_witness(d, s, m)
                assert n >= m
                assert sc.dense_has_prefix(d, n, s)
                # minimality
                for j in range(m, n):
                    assert not sc.dense_has_prefix(d, j, s)


def test_density_witness_budget():
    # a word with a huge letter has no affordable witness
    with pytest.raises(EnumerationBudgetExceeded):
        sc.density_witness(sc.OMEGA, (10**4,), 0)


@given(st.lists(st.integers(0, 8), max_size=8).map(tuple))
@settings(max_examples=200, deadline=None)
def test_round_trip_property(w):
    assert sc.prime_decode(sc.prime_code(w)) == w


@given(st.integers(0, 1500))
@settings(max_examples=100, deadline=None)
def test_rank_is_inverse_of_code_at(n):
    assert sc.seq_rank(sc._table.code_at(n)) == n


def test_words_of():
    assert sc.words_of(2, 0) == [()]
    assert len(sc.words_of(3, 2)) == 9
    assert sc.words_of(2, 2)[0] == (0, 0)
