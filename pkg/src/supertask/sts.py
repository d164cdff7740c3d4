"""Finite deterministic state-transition systems.

File format (line oriented, ``#`` starts a comment)::

    states: off on
    start: off on
    selected: off
    transition: off -> on
    transition: on -> off
    runtime: w

Every state needs exactly one outgoing transition.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from typing import NamedTuple

from supertask import kernels
from supertask.errors import InputError
from supertask.ordinal import Ordinal, OrdinalSyntaxError, format_ordinal, parse_ordinal

_LABEL = re.compile(r"[A-Za-z0-9_]+\Z")
_TRANSITION = re.compile(r"([A-Za-z0-9_]+)\s*->\s*([A-Za-z0-9_]+)\Z")


class STSError(InputError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class STSSyntaxError(STSError):
    pass


class DuplicateEdge(STSError):
    pass


class MissingTransition(STSError):
    pass


class UnknownState(STSError):
    pass


class EmptySet(STSError):
    pass


@dataclass(frozen=True, eq=False)
class StateTransitionSystem:
    states: tuple[str, ...]
    start_states: tuple[str, ...]
    transition: dict[str, str]
    selected_start: str | None = None
    runtime: Ordinal | None = None
    _index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        if not self.states:
            raise EmptySet("no states declared")
        if not self.start_states:
            raise EmptySet("no start states declared")
        if len(set(self.states)) != len(self.states):
            raise STSSyntaxError("duplicate state label")
        index = {s: i for i, s in enumerate(self.states)}
        for s in self.start_states:
            if s not in index:
                raise UnknownState(f"start state {s!r} is not declared")
        if self.selected_start is not None and self.selected_start not in self.start_states:
            raise UnknownState(f"selected state {self.selected_start!r} is not a start state")
        for src, dst in self.transition.items():
            if src not in index:
                raise UnknownState(f"transition from undeclared state {src!r}")
            if dst not in index:
                raise UnknownState(f"transition to undeclared state {dst!r}")
        for s in self.states:
            if s not in self.transition:
                raise MissingTransition(f"state {s!r} has no outgoing transition")
        object.__setattr__(self, "transition", dict(self.transition))
        object.__setattr__(self, "_index", index)

    def __eq__(self, other):
        if not isinstance(other, StateTransitionSystem):
            return NotImplemented
        return (
            self.states == other.states
            and self.start_states == other.start_states
            and self.transition == other.transition
            and self.selected_start == other.selected_start
            and self.runtime == other.runtime
        )

    __hash__ = None

    @cached_property
    def successors(self) -> tuple[int, ...]:
        return tuple(self._index[self.transition[s]] for s in self.states)

    def index(self, state: str) -> int:
        try:
            return self._index[state]
        except KeyError:
            raise UnknownState(f"unknown state {state!r}") from None

    def step(self, state: str) -> str:
        return self.transition[state]

    @property
    def default_start(self) -> str:
        return self.selected_start or self.start_states[0]


def parse_sts(text: str) -> StateTransitionSystem:
    states: list[str] | None = None
    starts: list[str] | None = None
    selected = None
    runtime = None
    transition: dict[str, str] = {}
    edge_line: dict[str, int] = {}

    def labels(value: str, lineno: int) -> list[str]:
        out = value.split()
        for label in out:
            if not _LABEL.match(label):
                raise STSSyntaxError(f"invalid label {label!r}", lineno)
        return out

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if not sep:
            raise STSSyntaxError(f"expected 'key: value', got {line!r}", lineno)
        if key == "states":
            if states is not None:
                raise STSSyntaxError("repeated 'states' line", lineno)
            states = labels(value, lineno)
            if not states:
                raise EmptySet("empty state set", lineno)
            if len(set(states)) != len(states):
                raise STSSyntaxError("duplicate state label", lineno)
        elif key == "start":
            if starts is not None:
                raise STSSyntaxError("repeated 'start' line", lineno)
            starts = labels(value, lineno)
            if not starts:
                raise EmptySet("empty start set", lineno)
        elif key == "selected":
            if selected is not None:
                raise STSSyntaxError("repeated 'selected' line", lineno)
            found = labels(value, lineno)
            if len(found) != 1:
                raise STSSyntaxError("'selected' takes exactly one label", lineno)
            selected = found[0]
        elif key == "transition":
            m = _TRANSITION.match(value)
            if not m:
                raise STSSyntaxError(f"expected 'a -> b', got {value!r}", lineno)
            src, dst = m.groups()
            if src in transition:
                raise DuplicateEdge(
                    f"state {src!r} already has an edge to {transition[src]!r} "
                    f"(line {edge_line[src]}); transitions must be a function",
                    lineno,
                )
            transition[src] = dst
            edge_line[src] = lineno
        elif key == "runtime":
            if runtime is not None:
                raise STSSyntaxError("repeated 'runtime' line", lineno)
            try:
                runtime = parse_ordinal(value)
            except OrdinalSyntaxError as exc:
                raise STSSyntaxError(f"bad runtime: {exc}", lineno) from None
        else:
            raise STSSyntaxError(f"unknown key {key!r}", lineno)

    if states is None:
        raise EmptySet("no 'states' line")
    if starts is None:
        raise EmptySet("no 'start' line")
    return StateTransitionSystem(tuple(states), tuple(starts), transition, selected, runtime)


def serialize_sts(sts: StateTransitionSystem) -> str:
    lines = [
        "states: " + " ".join(sts.states),
        "start: " + " ".join(sts.start_states),
    ]
    if sts.selected_start is not None:
        lines.append(f"selected: {sts.selected_start}")
    lines.extend(f"transition: {s} -> {sts.transition[s]}" for s in sts.states)
    if sts.runtime is not None:
        lines.append(f"runtime: {format_ordinal(sts.runtime)}")
    return "\n".join(lines) + "\n"


class RhoShape(NamedTuple):
    start: str
    tail_length: int
    period: int
    entry_node: str
    cycle: tuple[str, ...]
    tail: tuple[str, ...]


def rho_analyze(sts: StateTransitionSystem, start: str) -> RhoShape:
    """Split the run from ``start`` into its tail and the cycle it falls into."""
    mu, k = kernels.rho(sts.successors, sts.index(start))
    run = [start]
    for _ in range(mu + k - 1):
        run.append(sts.transition[run[-1]])
    return RhoShape(start, mu, k, run[mu], tuple(run[mu:]), tuple(run[:mu]))


class Diagnostic(NamedTuple):
    code: str
    message: str


@dataclass(frozen=True)
class Diagnostics:
    warnings: tuple[Diagnostic, ...] = ()

    def codes(self) -> list[str]:
        return [w.code for w in self.warnings]

    def __bool__(self):
        return bool(self.warnings)


def cycles(sts: StateTransitionSystem) -> list[tuple[str, ...]]:
    """All cycles of the transition graph, each rotated to start at the
    member declared first, ordered by that member."""
    found = []
    color = dict.fromkeys(sts.states, 0)  # 0 new, 1 on current path, 2 done
    for s in sts.states:
        path = []
        x = s
        while color[x] == 0:
            color[x] = 1
            path.append(x)
            x = sts.transition[x]
        if color[x] == 1:
            cyc = path[path.index(x):]
            first = min(range(len(cyc)), key=lambda i: sts.index(cyc[i]))
            found.append(tuple(cyc[first:] + cyc[:first]))
        for p in path:
            color[p] = 2
    found.sort(key=lambda c: sts.index(c[0]))
    return found


def reachable(sts: StateTransitionSystem, starts=None) -> set[str]:
    seen = set()
    for s in sts.start_states if starts is None else starts:
        while s not in seen:
            seen.add(s)
            s = sts.transition[s]
    return seen


def validate(sts: StateTransitionSystem) -> Diagnostics:
    live = reachable(sts)
    warnings = [
        Diagnostic("UnreachableState", f"state {s!r} is not reachable from any start state")
        for s in sts.states
        if s not in live
    ]
    for cyc in cycles(sts):
        if cyc[0] not in live:
            warnings.append(
                Diagnostic(
                    "InaccessibleCycle",
                    f"cycle {' -> '.join(cyc)} is not accessible from any start state",
                )
            )
    return Diagnostics(tuple(warnings))


def thomson_lamp() -> StateTransitionSystem:
    return StateTransitionSystem(
        states=("off", "on"),
        start_states=("off", "on"),
        transition={"off": "on", "on": "off"},
        selected_start="off",
    )


def load_builtin(name: str) -> StateTransitionSystem:
    """Load one of the bundled systems: ``lamp`` or ``figure2``.

    ``figure2`` is a reconstruction (1 -> 2 -> 3 -> 4 -> 3) chosen so that
    starts 1, 2 and 3 end in state 3 and start 4 ends in state 4.
    """
    text = resources.files("supertask").joinpath("data").joinpath(f"{name}.sts").read_text()
    return parse_sts(text)
