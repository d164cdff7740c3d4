"""State of an STS run after an ordinal number of steps.

Finite runtimes are plain iteration (shortcut through the cycle).  A runtime
``L + q`` with non-zero limit part ``L`` lands on the entry node of the cycle
the run falls into, then takes ``q`` further transitions.  Every finite
system has tail and period below w, so the entry-node rule is applied to
every limit part uniformly (w, w*2, w^2, ...).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from supertask.ordinal import OMEGA, Ordinal, add, decompose
from supertask.sts import RhoShape, StateTransitionSystem, rho_analyze, thomson_lamp


class Rule(enum.Enum):
    FINITE_ITERATION = "FiniteIteration"
    LIMIT_ENTRY_NODE = "LimitEntryNode"
    LIMIT_PLUS_REMAINDER = "LimitPlusRemainder"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class EvalResult:
    final_state: str
    runtime: Ordinal
    rho: RhoShape
    rule_applied: Rule


def _walk(shape: RhoShape, n: int) -> str:
    if n < shape.tail_length:
        return shape.tail[n]
    return shape.cycle[(n - shape.tail_length) % shape.period]


def state_at_finite(sts: StateTransitionSystem, start: str, n: int) -> str:
    if n < 0:
        raise ValueError("step count must be non-negative")
    return _walk(rho_analyze(sts, start), n)


def state_at(sts: StateTransitionSystem, start: str, runtime: Ordinal | int) -> EvalResult:
    runtime = Ordinal.of(runtime)
    shape = rho_analyze(sts, start)
    limit_part, q = decompose(runtime)
    if not limit_part:
        return EvalResult(_walk(shape, q), runtime, shape, Rule.FINITE_ITERATION)
    # from the entry node, q more steps stay on the cycle
    final = shape.cycle[q % shape.period]
    rule = Rule.LIMIT_PLUS_REMAINDER if q else Rule.LIMIT_ENTRY_NODE
    return EvalResult(final, runtime, shape, rule)


def verify_limit_consistency(sts: StateTransitionSystem, start: str, sample_count: int) -> bool:
    """Check the limit rule against finite samples at whole multiples of the period.

    For m = 1..sample_count and every q < k, the state after mu + m*k + q
    steps must equal the state at runtime w + q.
    """
    if sample_count < 1:
        raise ValueError("sample_count must be at least 1")
    shape = rho_analyze(sts, start)
    mu, k = shape.tail_length, shape.period
    at_limit = [state_at(sts, start, add(OMEGA, Ordinal.of(q))).final_state for q in range(k)]
    for m in range(1, sample_count + 1):
        x = start
        for _ in range(mu + m * k):
            x = sts.transition[x]
        for q in range(k):
            if x != at_limit[q]:
                return False
            x = sts.transition[x]
    return True


def lamp_answer(initial: str) -> str:
    final = state_at(thomson_lamp(), initial, OMEGA).final_state
    assert final == initial
    return final
