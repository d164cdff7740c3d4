"""Timekeeper and series helpers, all in exact rational arithmetic.

The jab schedule puts jab ``n`` at duration ``(1/2)**(n-1)`` minutes, so the
whole sequence finishes at exactly 2 minutes.  Time 2 is the first instant
past every finite step and corresponds to ordinal position w.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from supertask.errors import DomainError, InputError

TOTAL_TIME = Fraction(2)


@total_ordering
class _OmegaPosition:
    """Position w: later than every natural-numbered step."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __hash__(self):
        return hash("omega-position")

    def __repr__(self):
        return "OmegaPosition"

    def __str__(self):
        return "omega"


OmegaPosition = _OmegaPosition()


@dataclass(frozen=True)
class GeometricSchedule:
    first_term: Fraction = Fraction(1)
    ratio: Fraction = Fraction(1, 2)

    def __post_init__(self):
        if not 0 < self.ratio < 1:
            raise ValueError("ratio must lie strictly between 0 and 1")

    @property
    def total(self) -> Fraction:
        return self.first_term / (1 - self.ratio)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc


def jab_time(n: int) -> Fraction:
    if n < 1:
        raise DomainError("jabs are numbered from 1")
    return Fraction(1, 2 ** (n - 1))


def elapsed_after(n: int) -> Fraction:
    """Time at which jab ``n`` completes: ``2 - 2**(1-n)``."""
    if n < 0:
        raise DomainError("step count must be non-negative")
    return TOTAL_TIME - Fraction(2, 2**n)


def position_at_time(t: Fraction):
    """Number of jabs completed by time ``t``, or ``OmegaPosition`` at t = 2."""
    t = Fraction(t)
    if t < 0 or t > TOTAL_TIME:
        raise DomainError(f"time {t} is outside [0, 2]")
    if t == TOTAL_TIME:
        return OmegaPosition
    n = 0
    while elapsed_after(n + 1) <= t:
        n += 1
    return n


def epsilon_witness(epsilon: Fraction) -> int:
    """Least N with ``|elapsed_after(m) - 2| < epsilon`` for every m > N.

    The deviation at step m is exactly ``2**(1-m)``, decreasing in m, so the
    condition only has to hold at m = N + 1.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise DomainError(
            "epsilon must be positive; only OmegaPosition itself is at distance 0 from the limit"
        )
    n = 0
    while Fraction(1, 2**n) >= epsilon:
        n += 1
    return n


def harmonic_term(n: int) -> Fraction:
    if n < 1:
        raise DomainError("harmonic terms are numbered from 1")
    return Fraction(1, n)


def harmonic_witness(epsilon: Fraction) -> int:
    """Least N with 1/n < epsilon for all n > N."""
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise DomainError("epsilon must be positive")
    return epsilon.denominator // epsilon.numerator


def grandi_partial_sums(count: int) -> list[int]:
    sums = []
    total = 0
    for i in range(count):
        total += 1 if i % 2 == 0 else -1
        sums.append(total)
    return sums


def cesaro_mean(count: int) -> Fraction:
    if count < 1:
        raise DomainError("the Cesaro mean needs at least one partial sum")
    # partial sums alternate 1, 0, 1, ... so the first `count` add up to ceil(count/2)
    return Fraction((count + 1) // 2, count)


class Grouping(enum.Enum):
    LEADING_UNPAIRED = "leading-unpaired"  # 1 + (-1 + 1) + (-1 + 1) + ...
    FULLY_PAIRED = "fully-paired"  # (1 - 1) + (1 - 1) + ...


def grouped_sum(pairs: int, grouping: Grouping) -> int:
    if pairs < 0:
        raise DomainError("pair count must be non-negative")
    if grouping is Grouping.LEADING_UNPAIRED:
        return 1 + sum(-1 + 1 for _ in range(pairs))
    return sum(1 - 1 for _ in range(pairs))


def grouping_for_initial(state: str) -> Grouping:
    """Lamp reading of the bracketing: starting off returns to 0, starting on
    keeps the leading 1."""
    return {"off": Grouping.FULLY_PAIRED, "on": Grouping.LEADING_UNPAIRED}[state]
