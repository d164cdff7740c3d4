import random

import pytest

from helpers import naive_iterate, random_sts
from supertask.evaluation import (
    Rule,
    lamp_answer,
    state_at,
    state_at_finite,
    verify_limit_consistency,
)
from supertask.ordinal import OMEGA, Ordinal, add, is_even, parse_ordinal
from supertask.sts import load_builtin, rho_analyze, thomson_lamp

P = parse_ordinal


@pytest.fixture(scope="module")
def lamp():
    return thomson_lamp()


@pytest.fixture(scope="module")
def fig2():
    return load_builtin("figure2")


def test_finite_examples(lamp):
    assert state_at_finite(lamp, "off", 1) == "on"
    assert state_at_finite(lamp, "off", 0) == "off"


def test_finite_against_naive():
    rng = random.Random(25)
    sts = random_sts(rng, 25)
    for start in sts.states:
        assert state_at_finite(sts, start, 9999) == naive_iterate(sts, start, 9999)


def test_finite_sweep():
    rng = random.Random(1)
    for _ in range(20):
        sts = random_sts(rng, rng.randint(1, 50))
        start = rng.choice(sts.states)
        x = start
        for n in range(300):
            assert state_at_finite(sts, start, n) == x
            x = sts.transition[x]


@pytest.mark.parametrize(
    "start, runtime, final",
    [("off", "w", "off"), ("on", "w", "on"), ("off", "w+1", "on"), ("off", "w*2", "off"), ("on", "w+3", "off")],
)
def test_lamp_runtimes(lamp, start, runtime, final):
    assert state_at(lamp, start, P(runtime)).final_state == final


def test_figure2(fig2):
    assert [state_at(fig2, s, OMEGA).final_state for s in "1234"] == ["3", "3", "3", "4"]
    assert state_at(fig2, "1", P("w*2")).final_state == "3"
    assert state_at(fig2, "1", P("w+1")).final_state == "4"


def test_rules(lamp):
    assert state_at(lamp, "off", 4).rule_applied is Rule.FINITE_ITERATION
    assert state_at(lamp, "off", OMEGA).rule_applied is Rule.LIMIT_ENTRY_NODE
    assert state_at(lamp, "off", P("w^2+1")).rule_applied is Rule.LIMIT_PLUS_REMAINDER
    assert str(Rule.LIMIT_ENTRY_NODE) == "LimitEntryNode"


def test_limit_rule_all_limits():
    rng = random.Random(5)
    limits = [P(t) for t in ("w", "w*2", "w^2", "w^2+w", "w^(w)*3")]
    for _ in range(40):
        sts = random_sts(rng, rng.randint(1, 20))
        for start in sts.states:
            entry = rho_analyze(sts, start).entry_node
            for lam in limits:
                assert state_at(sts, start, lam).final_state == entry


def test_remainder_rule():
    rng = random.Random(9)
    for _ in range(40):
        sts = random_sts(rng, rng.randint(1, 20))
        start = rng.choice(sts.states)
        shape = rho_analyze(sts, start)
        for q in range(2 * shape.period + 1):
            for lam in ("w", "w^2+w"):
                got = state_at(sts, start, add(P(lam), Ordinal.of(q))).final_state
                assert got == naive_iterate(sts, shape.entry_node, q)


def test_deterministic():
    rng = random.Random(2)
    sts = random_sts(rng, 15)
    for start in sts.states:
        assert state_at(sts, start, P("w+4")) == state_at(sts, start, P("w+4"))


def test_lamp_parity_coherence(lamp):
    for n in range(50):
        assert (state_at(lamp, "off", n).final_state == "off") == is_even(Ordinal.of(n))
    for text in ("w", "w+1", "w*2"):
        assert (state_at(lamp, "off", P(text)).final_state == "off") == is_even(P(text))


def test_verify_limit_consistency(lamp, fig2):
    assert verify_limit_consistency(lamp, "off", 10)
    assert verify_limit_consistency(fig2, "1", 10)
    rng = random.Random(100)
    for _ in range(100):
        sts = random_sts(rng, rng.randint(1, 25))
        assert verify_limit_consistency(sts, rng.choice(sts.states), 25)
    with pytest.raises(ValueError):
        verify_limit_consistency(lamp, "off", 0)


def test_lamp_answer():
    assert lamp_answer("off") == "off"
    assert lamp_answer("on") == "on"
