"""Adversary: verdicts against the builtin oracles, contract checks, replay
and the wire protocol."""

import io

import pytest

from bairecomb import adversary as adv
from bairecomb import points as pt
from bairecomb.errors import ContractBreach, NoSafeLetter, OutOfFuel, UsageError


def run_builtin(name, **kw):
    h = adv.OracleHandle(adv.BUILTIN_ORACLES[name], kw.pop("fuel", adv.DEFAULT_FUEL))
    return adv.run_adversary(h, **kw)


def test_identity_is_diagonalized():
    v = run_builtin("identity")
    assert v.tag == "Diagonalized"
    assert v.rounds == adv.DEFAULT_ROUNDS
    assert v.stabilized == pt.hit_count(v.state.s_list[0])
    # the stabilized count holds across every reported block boundary
    assert adv.replay_verdict(v)


def test_prepend_zero_breaks_homomorphism():
    v = run_builtin("prepend-zero")
    assert v.tag == "ContractViolation"
    assert v.kind == adv.HOM_VIOLATION
    assert adv.replay_verdict(v)


def test_broken_is_non_monotone():
    v = run_builtin("broken")
    assert v.tag == "ContractViolation"
    assert v.kind == adv.NON_MONOTONE
    assert adv.replay_verdict(v)
    (q, a), (w, r) = v.evidence
    assert q == w[: len(q)] and a != r[: len(a)]


def test_silent_oracle_makes_no_progress():
    h = adv.OracleHandle(lambda w: ())
    v = adv.run_adversary(h)
    assert v.tag == "ContractViolation"
    assert v.kind == adv.NO_PROGRESS
    assert adv.replay_verdict(v)


def test_fuel_exhaustion():
    v = run_builtin("identity", fuel=3)
    assert v.tag == "FuelExhausted"
    assert adv.replay_verdict(v)


def test_probe_caches_and_burns_fuel():
    h = adv.OracleHandle(adv.identity_oracle, fuel=2)
    assert h.probe((1, 2)) == (1, 2)
    assert h.probe((1, 2)) == (1, 2)  # cached, no fuel
    assert h.fuel == 1
    h.probe((3,))
    with pytest.raises(OutOfFuel):
        h.probe((4,))


def test_monotone_check_both_directions():
    replies = {(): (0,), (0,): (), (1,): (5,), (1, 0): (6,)}
    h = adv.OracleHandle(lambda w: replies[w])
    h.probe(())
    with pytest.raises(ContractBreach) as e:
        h.probe((0,))  # reply shrinks under a longer query
    assert e.value.kind == adv.NON_MONOTONE
    h2 = adv.OracleHandle(lambda w: replies[w])
    h2.probe((1, 0))
    with pytest.raises(ContractBreach):
        h2.probe((1,))  # shorter query probed later, replies conflict


def test_all_zero_index_values():
    # ranks of the primorials 1, 2, 6, 30, 210
    got = []
    n = 0
    for _ in range(5):
        n = adv._all_zero_index(n + 1) if got else adv._all_zero_index(0)
        got.append(n)
    assert got == [0, 1, 3, 9, 27]


def test_build_beta_needs_blocks():
    with pytest.raises(UsageError):
        adv.build_beta(adv.ExtractionState())


def test_build_beta_no_safe_letter():
    st = adv.ExtractionState(s_list=[(), ()], alpha=[0], block_sums=[1])
    # bound 1 only offers letter 0, which creates a hit: count 1 != 0
    with pytest.raises(NoSafeLetter) as e:
        adv.build_beta(st, bound=1)
    assert e.value.args  # carries position and candidate counts


def test_word_format_round_trip():
    for w in [(), (0,), (1, 0, 2), (10, 11)]:
        assert adv.parse_word(adv.format_word(w)) == w
    with pytest.raises(UsageError):
        adv.parse_word("1,0")
    with pytest.raises(UsageError):
        adv.parse_word("[1,-2]")
    with pytest.raises(UsageError):
        adv.parse_word("[a]")


def test_serve_oracle_protocol():
    rin = io.StringIO("Q [1,0]\nQ []\nV Diagonalized {}\n")
    rout = io.StringIO()
    last = adv.serve_oracle(adv.prepend_zero_oracle, rin, rout)
    assert rout.getvalue() == "A [0,1,0]\nA [0]\n"
    assert last == "V Diagonalized {}"


def test_wire_oracle_subprocess():
    cmd = "bairecomb adv serve --builtin identity"
    wire = adv.WireOracle(cmd)
    h = adv.OracleHandle(wire)
    v = adv.run_adversary(h)
    wire.finish(v)
    assert v.tag == "Diagonalized"
    assert adv.replay_verdict(v)


def test_verdicts_deterministic():
    a = run_builtin("identity")
    b = run_builtin("identity")
    assert adv.verdict_line(a) == adv.verdict_line(b)
