import random

from supertask.ordinal import Ordinal, add, omega_power
from supertask.sts import StateTransitionSystem


def random_sts(rng: random.Random, n_states: int) -> StateTransitionSystem:
    states = tuple(f"s{i}" for i in range(n_states))
    transition = {s: rng.choice(states) for s in states}
    starts = tuple(rng.sample(states, rng.randint(1, n_states)))
    return StateTransitionSystem(states, starts, transition)


def naive_iterate(sts: StateTransitionSystem, start: str, n: int) -> str:
    x = start
    for _ in range(n):
        x = sts.transition[x]
    return x


def random_ordinal(rng: random.Random, depth: int = 2) -> Ordinal:
    """Random CNF value built through ``add`` so it is canonical."""
    value = Ordinal()
    for _ in range(rng.randint(0, 3)):
        if depth and rng.random() < 0.7:
            exponent = random_ordinal(rng, depth - 1)
        else:
            exponent = Ordinal()
        value = add(value, omega_power(exponent, rng.randint(1, 4)))
    return value


def pair(a: int, b: int) -> Ordinal:
    """w*a + b built directly from terms, without the arithmetic under test."""
    one = Ordinal(((Ordinal(), 1),))
    terms = []
    if a:
        terms.append((one, a))
    if b:
        terms.append((Ordinal(), b))
    return Ordinal(tuple(terms))
