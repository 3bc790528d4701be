"""Seeded random instance generation.

All generators take a `random.Random` (or a seed) and are deterministic
for a given seed, so generated corpora are reproducible byte for byte.
"""

from __future__ import annotations

import random

from .automata import Automaton
from .errors import InputError


def _rng(seed_or_rng) -> random.Random:
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def state_names(n: int) -> tuple:
    return tuple(f"q{i}" for i in range(1, n + 1))


def letter_names(k: int) -> tuple:
    if k <= 26:
        return tuple("abcdefghijklmnopqrstuvwxyz"[:k])
    return tuple(f"x{j}" for j in range(1, k + 1))


def random_complete_automaton(seed, n: int, k: int) -> Automaton:
    rng = _rng(seed)
    states, letters = state_names(n), letter_names(k)
    trans = {}
    for q in states:
        for x in letters:
            trans[(q, x)] = states[rng.randrange(n)]
    return Automaton(states, letters, trans)


def random_partial_automaton(seed, n: int, k: int, density: float = 0.8) -> Automaton:
    """Each (state, letter) entry is present with probability `density`."""
    rng = _rng(seed)
    states, letters = state_names(n), letter_names(k)
    trans = {}
    for q in states:
        for x in letters:
            if rng.random() < density:
                trans[(q, x)] = states[rng.randrange(n)]
    return Automaton(states, letters, trans)


def random_pwaa(seed, n: int, k: int, density: float = 0.8) -> Automaton:
    """Random partial weakly acyclic automaton: targets never precede their
    source in declaration order (self-loops allowed)."""
    rng = _rng(seed)
    states, letters = state_names(n), letter_names(k)
    trans = {}
    for i, q in enumerate(states):
        for x in letters:
            if rng.random() < density:
                trans[(q, x)] = states[rng.randrange(i, n)]
    return Automaton(states, letters, trans)


def random_complete_waa(seed, n: int, k: int) -> Automaton:
    return random_pwaa(seed, n, k, density=1.1)


def forward_biased_automaton(seed, n: int, k: int, bias: float = 0.75) -> Automaton:
    """Complete automaton whose transitions prefer non-decreasing targets;
    with probability 1 - bias a target is uniform over all states.  Keeps
    the total-order engine's later stages non-trivial at scale."""
    rng = _rng(seed)
    states, letters = state_names(n), letter_names(k)
    trans = {}
    for i, q in enumerate(states):
        for x in letters:
            if rng.random() < bias:
                trans[(q, x)] = states[rng.randrange(i, n)]
            else:
                trans[(q, x)] = states[rng.randrange(n)]
    return Automaton(states, letters, trans)


def random_relation(seed, a: Automaton, m: int) -> frozenset:
    """m distinct ordered pairs over the automaton's states."""
    rng = _rng(seed)
    if m > a.n * a.n:
        raise InputError("more pairs requested than exist")
    pairs = set()
    while len(pairs) < m:
        p = a.states[rng.randrange(a.n)]
        q = a.states[rng.randrange(a.n)]
        pairs.add((p, q))
    return frozenset(pairs)


def random_total_order(seed, a: Automaton) -> frozenset:
    """A uniformly random strict total order on the automaton's states."""
    rng = _rng(seed)
    perm = list(a.states)
    rng.shuffle(perm)
    return frozenset(
        (perm[i], perm[j]) for i in range(len(perm)) for j in range(i + 1, len(perm))
    )
