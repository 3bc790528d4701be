"""Polynomial-time engines for strict total orders under the last<first path
order, and careful synchronization of partial weakly acyclic automata via
the two-way equivalence between the problems.

For a strict total order, a word is valid exactly when no path ever moves a
state strictly backward in the order, so the engines work on the pruned
table with all backward transitions removed.  The fast engine keeps the
accumulated word in filtered form: letters that act as the identity on the
current active set are dropped as they arise.  Dropping them changes no
state's trajectory, and every kept letter moves at least one active state
strictly forward, which caps the witness length by n(n-1)/2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .automata import Automaton, Word, is_weakly_acyclic, run_set
from .errors import InputError
from .orders import OrderKind, Variant, strict_total_order
from . import powerset


@dataclass
class EngineTrace:
    """Per-iteration snapshots of the main loop: active set and the letter
    set currently known to be defined on it, plus the word so far."""

    stages: list = field(default_factory=list)  # (active frozenset, sigma_def frozenset, word tuple)


@dataclass
class EngineResult:
    positive: bool
    witness: Word | None
    iterations: int = 0
    trace: EngineTrace | None = None


def cerny_bound(n: int, variant: Variant) -> int:
    """Length cap for shortest witnesses on strict-total instances: each
    letter moves some token forward, position 0 is free only under from-1."""
    if n < 1:
        raise InputError("need n >= 1")
    base = n * (n - 1) // 2
    return base + 1 if variant is Variant.FROM1 else base


def _ranked_table(a: Automaton, order) -> np.ndarray:
    """k x n transition table in rank space (-1 = undefined)."""
    rank = {q: r for r, q in enumerate(order)}
    pos_of_idx = np.array([rank[q] for q in a.states], dtype=np.int64)
    t = np.full((a.k, a.n), -1, dtype=np.int64)
    for j in range(a.k):
        row = a.table[j]
        for i, tgt in enumerate(row):
            if tgt >= 0:
                t[j, pos_of_idx[i]] = pos_of_idx[tgt]
    return t


def _prune_backward(t: np.ndarray) -> np.ndarray:
    n = t.shape[1]
    ranks = np.arange(n)
    t = t.copy()
    t[(t >= 0) & (t < ranks)] = -1
    return t


class _Explorer:
    """State of the fast engine between main-loop iterations."""

    def __init__(self, t: np.ndarray, n: int):
        self.t = t
        self.n = n
        self.act = np.ones(n, dtype=bool)
        self.word: list[int] = []  # letter indices, already filtered

    def active_ranks(self) -> np.ndarray:
        return np.flatnonzero(self.act)

    def _apply_letter(self, lj: int) -> bool:
        """Apply one letter to the active set; returns True when it moved
        something (identity letters are not recorded)."""
        idx = np.flatnonzero(self.act)
        tgt = self.t[lj, idx]
        if bool((tgt < 0).any()):
            raise AssertionError("letter applied outside its defined domain")
        if np.array_equal(tgt, idx):
            return False
        new = np.zeros(self.n, dtype=bool)
        new[tgt] = True
        self.act = new
        self.word.append(lj)
        return True

    def explore(self, sigma: list[int]) -> None:
        """Scan the active states upward; whenever a letter of `sigma` moves
        the scanned state strictly forward, apply it and replay the word
        that was accumulated before this call (re-confining the active set),
        then resume from the same position.
        """
        replay = list(self.word)
        t, n = self.t, self.n
        pos = 0
        while True:
            idx = np.flatnonzero(self.act[pos:])
            if idx.size == 0:
                return
            q = pos + int(idx[0])
            if q == n - 1:
                return
            moved = False
            for lj in sigma:
                tgt = t[lj, q]
                if tgt > q:
                    self._apply_letter(lj)
                    for rj in replay:
                        self._apply_letter(rj)
                    moved = True
                    break
            pos = q if moved else q + 1


def fast_decide(a: Automaton, relation, variant: Variant = Variant.FROM0,
                collect_trace: bool = False) -> EngineResult:
    """Decide synchronizability under a strict total order, with witness.

    Main loop: prune backward transitions (abort when a state loses every
    outgoing arc); drop letters undefined on the maximal state (it can never
    be left, so those letters can never be used); exhaust the letters that
    are defined everywhere; then repeatedly admit letters that became safe
    on the shrunken active set until nothing changes.  Accept exactly when
    the active set is the maximal state alone.

    Under from-1 the first letter is unconstrained; each of the k choices is
    reduced to a subset-start search handled by the exact powerset engine.
    """
    if not a.is_complete:
        raise InputError("the total-order engine needs a complete automaton")
    order = strict_total_order(a, relation)
    if variant is Variant.FROM1:
        return _decide_from1(a, relation, order)

    n = a.n
    trace = EngineTrace() if collect_trace else None
    if n == 1:
        return EngineResult(True, (), 0, trace)

    t = _prune_backward(_ranked_table(a, order))
    if bool((t < 0).all(axis=0).any()):
        return EngineResult(False, None, 0, trace)
    dead_letters = t[:, n - 1] < 0
    t[dead_letters, :] = -1
    if bool((t < 0).all(axis=0).any()):
        return EngineResult(False, None, 0, trace)

    fully_defined = (t >= 0).all(axis=1)
    sigma_def = [j for j in range(a.k) if fully_defined[j]]
    if not sigma_def:
        return EngineResult(False, None, 0, trace)
    sigma_par = [j for j in range(a.k) if not fully_defined[j] and not dead_letters[j]]

    ex = _Explorer(t, n)
    ex.explore(sigma_def)
    if trace is not None:
        trace.stages.append(_snapshot(a, order, ex, sigma_def))

    iterations = 0
    while True:
        iterations += 1
        idx = ex.active_ranks()
        admitted = [j for j in sigma_par if bool((t[j, idx] >= 0).all())]
        if admitted:
            sigma_def = sigma_def + admitted
            sigma_par = [j for j in sigma_par if j not in admitted]
        before = ex.act.copy()
        ex.explore(sigma_def)
        if trace is not None:
            trace.stages.append(_snapshot(a, order, ex, sigma_def))
        if np.array_equal(before, ex.act):
            break

    final = ex.active_ranks()
    if final.size == 1 and int(final[0]) == n - 1:
        witness = tuple(a.letters[j] for j in ex.word)
        _check_total_witness(a, order, witness)
        return EngineResult(True, witness, iterations, trace)
    return EngineResult(False, None, iterations, trace)


def _snapshot(a: Automaton, order, ex: _Explorer, sigma_def) -> tuple:
    active = frozenset(order[r] for r in ex.active_ranks())
    return (active, frozenset(a.letters[j] for j in sigma_def),
            tuple(a.letters[j] for j in ex.word))


def _check_total_witness(a: Automaton, order, word: Word) -> None:
    """Structural verification: defined everywhere, never moving backward,
    ending in the maximal state alone.  For a strict total order this is
    equivalent to the definitional check and stays fast at large n."""
    t = _ranked_table(a, order)
    act = np.ones(a.n, dtype=bool)
    for x in word:
        idx = np.flatnonzero(act)
        tgt = t[a.letter_index[x], idx]
        if bool((tgt < 0).any()) or bool((tgt < idx).any()):
            raise AssertionError("engine produced an order-violating witness")
        act = np.zeros(a.n, dtype=bool)
        act[tgt] = True
    if not (act.sum() == 1 and act[a.n - 1]):
        raise AssertionError("engine witness does not synchronize into the maximal state")
    if a.n > 1 and len(word) > cerny_bound(a.n, Variant.FROM0):
        raise AssertionError("engine witness exceeds the forward-move budget")


def _decide_from1(a: Automaton, relation, order) -> EngineResult:
    if a.n == 1:
        return EngineResult(True, (), 0, None)
    best: tuple | None = None
    for lj, x in enumerate(a.letters):
        row = a.table[lj]
        start = {a.states[row[i]] for i in range(a.n)}
        res = powerset.decide(a, OrderKind.LF_PATH, Variant.FROM0, relation, start=start)
        if res.positive:
            cand = (1 + len(res.witness), lj, (x,) + res.witness)
            if best is None or cand[:2] < best[:2]:
                best = cand
    if best is None:
        return EngineResult(False, None, 0, None)
    return EngineResult(True, best[2], 0, None)


def greedy_decide(a: Automaton, relation) -> EngineResult:
    """Reference engine: at each step take the first letter (declaration
    order) that is defined on every active state and moves one of them
    strictly forward; reject when no such letter exists."""
    if not a.is_complete:
        raise InputError("the total-order engine needs a complete automaton")
    order = strict_total_order(a, relation)
    n = a.n
    if n == 1:
        return EngineResult(True, ())
    t = _prune_backward(_ranked_table(a, order))
    act = np.ones(n, dtype=bool)
    word = []
    while True:
        idx = np.flatnonzero(act)
        if idx.size == 1:
            witness = tuple(a.letters[j] for j in word)
            _check_total_witness(a, order, witness)
            return EngineResult(True, witness)
        chosen = -1
        for lj in range(a.k):
            tgt = t[lj, idx]
            if bool((tgt >= 0).all()) and bool((tgt > idx).any()):
                chosen = lj
                break
        if chosen < 0:
            return EngineResult(False, None)
        act = np.zeros(n, dtype=bool)
        act[t[chosen, idx]] = True
        word.append(chosen)


def pwaa_from_total(a: Automaton, relation) -> Automaton:
    """Remove every transition that goes strictly backward in the order;
    the result is weakly acyclic by construction."""
    if not a.is_complete:
        raise InputError("expected a complete automaton")
    order = strict_total_order(a, relation)
    rank = {q: r for r, q in enumerate(order)}
    kept = {(q, x): tgt for (q, x), tgt in a.transitions.items() if rank[tgt] >= rank[q]}
    return Automaton(a.states, a.letters, kept)


def _fresh_token(base: str, taken) -> str:
    if base not in taken:
        return base
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def total_from_pwaa(a: Automaton):
    """Complete a partial weakly acyclic automaton with a new bottom state.

    Undefined entries are redirected to the bottom state, which every letter
    takes to the maximal state of the ordering.  Returns the completed
    automaton together with the full strict total order (bottom included).
    """
    order = is_weakly_acyclic(a)
    if order is None:
        raise InputError("automaton is not weakly acyclic")
    bottom = _fresh_token("q<", set(a.states))
    states = (bottom,) + a.states
    trans = dict(a.transitions)
    top = order[-1] if order else bottom
    for q in a.states:
        for x in a.letters:
            if (q, x) not in trans:
                trans[(q, x)] = bottom
    for x in a.letters:
        trans[(bottom, x)] = top
    full_order = (bottom,) + order
    relation = frozenset(
        (full_order[i], full_order[j])
        for i in range(len(full_order))
        for j in range(i + 1, len(full_order))
    )
    return Automaton(states, a.letters, trans), relation


def careful_sync_pwaa(a: Automaton, collect_trace: bool = False) -> EngineResult:
    """Careful synchronization of a partial weakly acyclic automaton.

    Completes the automaton with the bottom state, runs the fast engine on
    the induced total order, and filters the witness against the original
    automaton's active sets (letters that only move the bottom state drop
    out), which keeps the length within n(n-1)/2 for the original n.
    """
    if is_weakly_acyclic(a) is None:
        raise InputError("automaton is not weakly acyclic")
    if a.n == 1:
        return EngineResult(True, ())
    completed, relation = total_from_pwaa(a)
    res = fast_decide(completed, relation, collect_trace=collect_trace)
    if not res.positive:
        return EngineResult(False, None, res.iterations, res.trace)
    witness = _filter_word(a, res.witness)
    run = run_set(a, a.states, witness)
    if not run.complete or len(run.final) != 1:
        raise AssertionError("careful witness failed verification on the partial automaton")
    if len(witness) > a.n * (a.n - 1) // 2:
        raise AssertionError("careful witness exceeds the forward-move budget")
    return EngineResult(True, witness, res.iterations, res.trace)


def _filter_word(a: Automaton, word: Word) -> Word:
    """Drop letters that act as the pointwise identity on the evolving
    active set; trajectories are unchanged, so the filtered word has the
    same action wherever the original was defined."""
    cur = set(range(a.n))
    kept = []
    for x in word:
        row = a.table[a.letter_index[x]]
        if any(row[i] != i for i in cur):
            kept.append(x)
            cur = {row[i] for i in cur}
    return tuple(kept)
