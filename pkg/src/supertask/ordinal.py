"""Ordinals below epsilon-zero in Cantor normal form.

An :class:`Ordinal` is a tuple of ``(exponent, coefficient)`` terms with
strictly decreasing exponents (themselves ordinals) and positive integer
coefficients.  Values are canonical at construction time, so structural
equality is ordinal equality.

Also contains the hereditarily finite (von Neumann) model of the naturals
and the set-theoretic parity check used for the lamp argument.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import NamedTuple

from supertask.errors import DomainError, InputError

__all__ = [
    "Ordinal",
    "LimitDecomposition",
    "OrdinalSyntaxError",
    "ZERO",
    "ONE",
    "OMEGA",
    "parse_ordinal",
    "format_ordinal",
    "compare",
    "successor",
    "add",
    "multiply",
    "omega_power",
    "is_limit",
    "decompose",
    "is_even",
    "von_neumann_set",
    "cardinality",
    "even_split_exists",
]

# Parser recursion guard; every CNF expression is below epsilon-zero, so the
# only bound worth enforcing is on exponent nesting depth.
MAX_EXPONENT_DEPTH = 32


class OrdinalSyntaxError(InputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    terms: tuple[tuple[Ordinal, int], ...] = ()

    def __post_init__(self):
        prev = None
        for exponent, coefficient in self.terms:
            if not isinstance(exponent, Ordinal):
                raise TypeError("exponent must be an Ordinal")
            if not isinstance(coefficient, int) or coefficient < 1:
                raise ValueError(f"coefficient must be a positive int, got {coefficient!r}")
            if prev is not None and compare(prev, exponent) <= 0:
                raise ValueError("exponents must be strictly decreasing")
            prev = exponent

    @classmethod
    def of(cls, value: int | Ordinal) -> Ordinal:
        if isinstance(value, Ordinal):
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot convert {type(value).__name__} to Ordinal")
        if value < 0:
            raise ValueError("ordinals are non-negative")
        return cls(((ZERO, value),)) if value else ZERO

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0].terms)

    def __int__(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is not finite")
        return self.terms[0][1] if self.terms else 0

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __lt__(self, other):
        try:
            other = Ordinal.of(other)
        except TypeError:
            return NotImplemented
        return compare(self, other) < 0

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return other >= 0 and self.terms == Ordinal.of(other).terms
        if isinstance(other, Ordinal):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other):
        try:
            return add(self, Ordinal.of(other))
        except TypeError:
            return NotImplemented

    def __radd__(self, other):
        try:
            return add(Ordinal.of(other), self)
        except TypeError:
            return NotImplemented

    def __mul__(self, other):
        try:
            return multiply(self, Ordinal.of(other))
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return multiply(Ordinal.of(other), self)
        except TypeError:
            return NotImplemented

    def __str__(self):
        return format_ordinal(self)

    def __repr__(self):
        return f"Ordinal({format_ordinal(self)!r})"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


class LimitDecomposition(NamedTuple):
    limit_part: Ordinal
    finite_tail: int


def compare(a: Ordinal, b: Ordinal) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def omega_power(exponent: Ordinal, coefficient: int = 1) -> Ordinal:
    return Ordinal(((exponent, coefficient),)) if coefficient else ZERO


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return a
    lead_exp, lead_coef = b.terms[0]
    kept = []
    for exponent, coefficient in a.terms:
        c = compare(exponent, lead_exp)
        if c > 0:
            kept.append((exponent, coefficient))
        else:
            if c == 0:
                lead_coef += coefficient
            break
    return Ordinal((*kept, (lead_exp, lead_coef), *b.terms[1:]))


def successor(a: Ordinal) -> Ordinal:
    return add(a, ONE)


def multiply(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal product ``a * b`` (``a`` repeated ``b`` times)."""
    if not a.terms or not b.terms:
        return ZERO
    lead_exp, lead_coef = a.terms[0]
    result = ZERO
    for exponent, coefficient in b.terms:
        if exponent.terms:
            # a * w^e absorbs everything but the leading exponent of a
            piece = omega_power(add(lead_exp, exponent), coefficient)
        else:
            piece = Ordinal(((lead_exp, lead_coef * coefficient), *a.terms[1:]))
        result = add(result, piece)
    return result


def is_limit(a: Ordinal) -> bool:
    return bool(a.terms) and bool(a.terms[-1][0].terms)


def decompose(a: Ordinal) -> LimitDecomposition:
    if a.terms and not a.terms[-1][0].terms:
        return LimitDecomposition(Ordinal(a.terms[:-1]), a.terms[-1][1])
    return LimitDecomposition(a, 0)


def is_even(a: Ordinal) -> bool:
    """Parity of an ordinal: a limit part is always even (2*L = L), so only
    the finite tail decides."""
    return decompose(a).finite_tail % 2 == 0


# -- text form ---------------------------------------------------------------

def format_ordinal(o: Ordinal) -> str:
    if not o.terms:
        return "0"
    parts = []
    for exponent, coefficient in o.terms:
        if not exponent.terms:
            parts.append(str(coefficient))
            continue
        if exponent == ONE:
            base = "w"
        elif exponent.is_finite:
            base = f"w^{int(exponent)}"
        else:
            base = f"w^({format_ordinal(exponent)})"
        parts.append(base if coefficient == 1 else f"{base}*{coefficient}")
    return "+".join(parts)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.depth = 0

    def parse(self) -> Ordinal:
        value = self.expr()
        self.skip()
        if self.pos != len(self.text):
            raise OrdinalSyntaxError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return value

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise OrdinalSyntaxError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def expr(self) -> Ordinal:
        value = self.term()
        while self.peek() == "+":
            self.pos += 1
            value = add(value, self.term())
        return value

    def nat(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            found = repr(self.text[start]) if start < len(self.text) else "end of input"
            raise OrdinalSyntaxError(f"expected a number, found {found}", start)
        return int(self.text[start:self.pos])

    def term(self) -> Ordinal:
        ch = self.peek()
        if ch not in ("w", "ω"):
            return Ordinal.of(self.nat())
        self.pos += 1
        exponent = ONE
        if self.peek() == "^":
            self.pos += 1
            if self.peek() == "(":
                self.pos += 1
                self.depth += 1
                if self.depth > MAX_EXPONENT_DEPTH:
                    raise OrdinalSyntaxError("exponent nesting too deep", self.pos)
                exponent = self.expr()
                self.expect(")")
                self.depth -= 1
            else:
                exponent = Ordinal.of(self.nat())
        coefficient = 1
        if self.peek() == "*":
            self.pos += 1
            at = self.pos
            coefficient = self.nat()
            if coefficient == 0:
                raise OrdinalSyntaxError("coefficient must be positive", at)
        return omega_power(exponent, coefficient)


def parse_ordinal(text: str) -> Ordinal:
    """Parse an expression such as ``"w^2*3+w*2+5"`` and normalize it to CNF.

    ``ω`` is accepted as an alias for ``w``.
    """
    return _Parser(text).parse()


# -- finite set-theoretic model ----------------------------------------------

def von_neumann_set(n: int, bound: int = 16) -> frozenset:
    """The von Neumann natural ``n``: built from the empty set by S(a) = a | {a}.

    Successive values share structure, so ``n`` frozensets are allocated in
    total even though the fully expanded tree has 2**n leaves.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    if n > bound:
        raise DomainError(f"n={n} exceeds the von Neumann bound {bound}")
    s: frozenset = frozenset()
    for _ in range(n):
        s = s | {s}
    return s


def cardinality(s: frozenset) -> int:
    return len(s)


def even_split_exists(n: int) -> tuple[frozenset, frozenset] | None:
    """Search every bipartition of ``{0..n-1}`` for two equinumerous halves.

    Exhaustive on purpose: it is the set-theoretic definition of evenness,
    checked independently of ``n % 2``.
    """
    if n < 0 or n > 20:
        raise DomainError(f"even_split_exists is limited to 0 <= n <= 20, got {n}")
    universe = range(n)
    for mask in range(1 << n):
        if 2 * bin(mask).count("1") != n:
            continue
        left = frozenset(i for i in universe if mask >> i & 1)
        right = frozenset(universe) - left
        return left, right
    return None
