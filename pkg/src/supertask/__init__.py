"""Transfinite evaluation of finite state-transition systems.

Ordinal arithmetic below epsilon-zero, rho-shape analysis of deterministic
systems, the entry-node rule for limit runtimes, exact timekeeper and
Grandi-series helpers, and the pi parity machine.
"""
from supertask.ordinal import (
    OMEGA,
    Ordinal,
    add,
    compare,
    decompose,
    format_ordinal,
    is_even,
    is_limit,
    multiply,
    parse_ordinal,
    successor,
)
from supertask.sts import StateTransitionSystem, parse_sts, rho_analyze, thomson_lamp, validate
from supertask.evaluation import EvalResult, Rule, lamp_answer, state_at, state_at_finite

__version__ = "0.1.0"
