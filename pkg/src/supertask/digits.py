"""Decimal digits of pi and the parity machine that reads them.

Index 0 is the integer digit 3; index i >= 1 is the i-th fractional digit.
The parity machine outputs 1 for an even digit and 0 for an odd one.  It has
no eventual period, so asking for its state at a limit runtime is an error
rather than an answer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Sequence

from supertask import kernels
from supertask.errors import DomainError
from supertask.ordinal import Ordinal, decompose, format_ordinal

DEFAULT_MAX_INDEX = 1000
GUARD_DIGITS = 10

# Machin's formula in scaled integer arithmetic; not produced by the spigot.
PI_REFERENCE_100 = (
    "31415926535897932384626433832795028841971693993751"
    "05820974944592307816406286208998628034825342117067"
)


class IndexBeyondBound(DomainError):
    pass


class NoFinitePeriod(DomainError):
    pass


class UnstableDigits(RuntimeError):
    pass


@lru_cache(maxsize=8)
def _prefix(count: int) -> tuple[int, ...]:
    digits = kernels.spigot_digits(count + GUARD_DIGITS)
    # a longer buffer must agree on the requested prefix, else carries leaked
    check = kernels.spigot_digits(count + 2 * GUARD_DIGITS)
    if digits[:count] != check[:count]:
        raise UnstableDigits(f"spigot prefix of {count} digits not stable under guard digits")
    return tuple(digits[:count])


@dataclass(frozen=True)
class DigitStream:
    max_index: int = DEFAULT_MAX_INDEX
    _digits: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.max_index < 0:
            raise ValueError("max_index must be non-negative")
        object.__setattr__(self, "_digits", _prefix(self.max_index + 1))

    def digit_at(self, n: int) -> int:
        self._check(n)
        return self._digits[n]

    def parity_bit(self, n: int) -> int:
        return 1 - self.digit_at(n) % 2

    def digits(self, count: int | None = None) -> tuple[int, ...]:
        count = self.max_index + 1 if count is None else count
        if count > self.max_index + 1:
            raise IndexBeyondBound(f"{count} digits requested, bound is {self.max_index + 1}")
        return self._digits[:count]

    def parities(self, count: int | None = None) -> list[int]:
        return [1 - d % 2 for d in self.digits(count)]

    def _check(self, n: int):
        if n < 0:
            raise DomainError("digit index must be non-negative")
        if n > self.max_index:
            raise IndexBeyondBound(f"digit index {n} is beyond the bound {self.max_index}")


@lru_cache(maxsize=1)
def default_stream() -> DigitStream:
    return DigitStream()


def pi_digit(n: int, stream: DigitStream | None = None) -> int:
    return (stream or default_stream()).digit_at(n)


def parity_bit(n: int, stream: DigitStream | None = None) -> int:
    return (stream or default_stream()).parity_bit(n)


class PeriodScanReport(NamedTuple):
    prefix_length: int
    max_tail: int
    max_period: int
    found: tuple[int, int] | None


def period_scan(
    prefix_length: int,
    max_tail: int,
    max_period: int,
    stream: Sequence[int] | None = None,
) -> PeriodScanReport:
    """Exhaustively look for a tail ``mu <= max_tail`` and period
    ``k <= max_period`` that the first ``prefix_length`` values obey.

    ``stream`` defaults to the pi parity stream.  The smallest tail wins,
    then the smallest period for that tail.
    """
    if max_period < 1 or max_tail < 0:
        raise DomainError("need max_period >= 1 and max_tail >= 0")
    if max_tail + 2 * max_period > prefix_length:
        raise DomainError("prefix must cover the tail plus two full periods")
    if stream is None:
        if prefix_length > default_stream().max_index + 1:
            raise IndexBeyondBound(f"prefix {prefix_length} exceeds the digit bound")
        seq = default_stream().parities(prefix_length)
    else:
        if prefix_length > len(stream):
            raise DomainError("stream is shorter than the requested prefix")
        seq = list(stream[:prefix_length])
    found = kernels.period_scan(seq, max_tail, max_period)
    return PeriodScanReport(prefix_length, max_tail, max_period, found)


def pi_parity_state_at(runtime: Ordinal | int, stream: DigitStream | None = None) -> int:
    runtime = Ordinal.of(runtime)
    limit_part, n = decompose(runtime)
    if limit_part:
        raise NoFinitePeriod(
            f"NoFinitePeriod: the pi parity stream has no finite period, "
            f"so runtime {format_ordinal(runtime)} has no defined state"
        )
    return parity_bit(n, stream)
