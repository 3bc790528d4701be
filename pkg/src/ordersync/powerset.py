"""Exact decision procedure for order-constrained synchronization.

Breadth-first search over an enhanced powerset automaton: a configuration
is the current active set plus active-pair bookkeeping, one global pair set
for the set orders and one pair set per active path for the path orders.
A pair is "active" when it would be violated if the word stopped now
(for the last/first order: when its forbidden first component has already
been enabled).  Start configurations are derived from the occurrence
semantics at position 0, so subset start sets are handled exactly.

Moves through an undefined transition on an active state are simply not
expanded; with that single rule the same search decides careful
synchronization of partial automata.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .automata import Automaton
from .errors import InputError
from .orders import OrderKind, Variant, canonical_relation

DEFAULT_BUDGET = 10_000_000


class Verdict(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Configuration:
    """Search node: active states plus pair bookkeeping.

    `pairs` is the global active-pair set for the set orders; `per_state`
    maps each active state to its path's active pairs for the path orders
    (stored sorted by declaration).  The error configuration is absorbing
    and never accepting.
    """

    active: frozenset
    pairs: frozenset | None = None
    per_state: tuple | None = None
    error: bool = False


@dataclass
class SearchResult:
    verdict: Verdict
    witness: tuple | None
    explored: int
    depth: int

    @property
    def positive(self) -> bool:
        return self.verdict is Verdict.POSITIVE


ERROR_KEY = ("error",)


class _Engine:
    """Bitmask-level configuration transducer for one problem instance."""

    def __init__(self, a: Automaton, kind: OrderKind, variant: Variant, relation):
        self.a = a
        self.kind = kind
        self.variant = variant
        self.rel = canonical_relation(a, relation)
        n = a.n
        self.mask_p = [0] * n  # pairs whose first component is the state
        self.mask_q = [0] * n  # pairs whose second component is the state
        for bit, (p, q) in enumerate(self.rel):
            self.mask_p[a.state_index[p]] |= 1 << bit
            self.mask_q[a.state_index[q]] |= 1 << bit
        self.all_pairs = (1 << len(self.rel)) - 1

    # -- start configurations ------------------------------------------------
    # Derived from the occurrence values at position 0: a pair starts active
    # exactly when it is violated (or, for last<first, armed) before any
    # letter is read.  Under from-1 nothing has occurred yet.

    def initial_key(self, start_idx: tuple):
        kind, from0 = self.kind, self.variant is Variant.FROM0
        if not kind.on_paths:
            if kind is OrderKind.LL_SET:
                if from0:
                    in_p = in_q = 0
                    for i in start_idx:
                        in_p |= self.mask_p[i]
                        in_q |= self.mask_q[i]
                    pairs = self.all_pairs & ~(in_q & ~in_p)
                else:
                    pairs = self.all_pairs
            else:  # LEQ_SET
                if from0:
                    in_p = in_q = 0
                    for i in start_idx:
                        in_p |= self.mask_p[i]
                        in_q |= self.mask_q[i]
                    pairs = in_p & ~in_q
                else:
                    pairs = 0
            return (start_idx, pairs)
        masks = []
        for i in start_idx:
            if kind is OrderKind.LL_PATH:
                m = self.all_pairs & ~(self.mask_q[i] & ~self.mask_p[i]) if from0 else self.all_pairs
            elif kind is OrderKind.LEQ_PATH:
                m = (self.mask_p[i] & ~self.mask_q[i]) if from0 else 0
            else:  # LF_PATH: arm pairs keyed on the start state itself
                m = self.mask_q[i] if from0 else 0
                if m & self.mask_p[i]:
                    return ERROR_KEY
            masks.append(m)
        return (start_idx, tuple(masks))

    # -- transitions ----------------------------------------------------------

    def successor_key(self, key, letter_j: int):
        if key == ERROR_KEY:
            return ERROR_KEY
        row = self.a.table[letter_j]
        act = key[0]
        if not self.kind.on_paths:
            pairs = key[1]
            e_idx = set()
            in_p = in_q = 0
            for i in act:
                t = row[i]
                if t < 0:
                    return None  # inadmissible move on a partial automaton
                if t not in e_idx:
                    e_idx.add(t)
                    in_p |= self.mask_p[t]
                    in_q |= self.mask_q[t]
            if self.kind is OrderKind.LL_SET:
                pairs = (pairs | in_p) & ~(in_q & ~in_p)
            else:
                pairs = (pairs | in_p) & ~in_q
            return (tuple(sorted(e_idx)), pairs)

        merged: dict[int, int] = {}
        for i, m in zip(act, key[1]):
            t = row[i]
            if t < 0:
                return None
            merged[t] = merged.get(t, 0) | m
        kind = self.kind
        targets = sorted(merged)
        masks = []
        for t in targets:
            m = merged[t]
            if kind is OrderKind.LL_PATH:
                m = (m | self.mask_p[t]) & ~(self.mask_q[t] & ~self.mask_p[t])
            elif kind is OrderKind.LEQ_PATH:
                m = (m | self.mask_p[t]) & ~self.mask_q[t]
            else:  # LF_PATH: visits only arm pairs; an armed first component errors out
                m = m | self.mask_q[t]
                if m & self.mask_p[t]:
                    return ERROR_KEY
            masks.append(m)
        return (tuple(targets), tuple(masks))

    def is_final(self, key) -> bool:
        if key == ERROR_KEY or len(key[0]) != 1:
            return False
        if self.kind is OrderKind.LF_PATH:
            return True  # violations were caught eagerly
        if not self.kind.on_paths:
            return key[1] == 0
        return key[1][0] == 0

    # -- token-level views ----------------------------------------------------

    def to_configuration(self, key) -> Configuration:
        if key == ERROR_KEY:
            return Configuration(active=frozenset(), pairs=frozenset(), error=True)
        states = self.a.states
        active = frozenset(states[i] for i in key[0])
        if not self.kind.on_paths:
            return Configuration(active=active, pairs=self._unmask(key[1]))
        per = tuple((states[i], self._unmask(m)) for i, m in zip(key[0], key[1]))
        return Configuration(active=active, per_state=per)

    def from_configuration(self, cfg: Configuration):
        if cfg.error:
            return ERROR_KEY
        act = tuple(sorted(self.a._state(q) for q in cfg.active))
        if not self.kind.on_paths:
            return (act, self._mask(cfg.pairs or ()))
        by_state = {self.a._state(q): self._mask(m) for q, m in (cfg.per_state or ())}
        if set(by_state) != set(act):
            raise InputError("per-path pair map must have exactly the active states as keys")
        return (act, tuple(by_state[i] for i in act))

    def _unmask(self, m: int) -> frozenset:
        return frozenset(pair for bit, pair in enumerate(self.rel) if m >> bit & 1)

    def _mask(self, pairs) -> int:
        idx = {pair: bit for bit, pair in enumerate(self.rel)}
        m = 0
        for pair in pairs:
            pair = tuple(pair)
            if pair not in idx:
                raise InputError(f"pair {pair!r} is not in the relation")
            m |= 1 << idx[pair]
        return m


def initial_configuration(a: Automaton, kind: OrderKind, variant: Variant, relation, start=None) -> Configuration:
    """The start configuration for the given problem (subset start allowed)."""
    start_set = a.check_set(a.states if start is None else start)
    if not start_set:
        raise InputError("start set must be nonempty")
    eng = _Engine(a, kind, variant, relation)
    start_idx = tuple(sorted(a._state(q) for q in start_set))
    return eng.to_configuration(eng.initial_key(start_idx))


def successor(a: Automaton, kind: OrderKind, relation, cfg: Configuration, x) -> Configuration | None:
    """One configuration step; None when the move is inadmissible (an active
    state has no transition under x).  The error configuration is absorbing.

    The ambient relation is needed because newly entered states can activate
    pairs that are not in the configuration's current bookkeeping.
    """
    eng = _Engine(a, kind, Variant.FROM0, relation)
    key = eng.successor_key(eng.from_configuration(cfg), a._letter(x))
    return None if key is None else eng.to_configuration(key)


def decide(a: Automaton, kind: OrderKind, variant: Variant, relation, start=None,
           budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Breadth-first search for a shortest witness.

    Letters expand in declaration order, so among equal-length witnesses the
    lexicographically least one (by declaration) is returned.  Exhausting the
    reachable configurations proves a negative; overrunning the budget yields
    an inconclusive verdict, never a wrong answer.
    """
    start_set = a.check_set(a.states if start is None else start)
    if not start_set:
        raise InputError("start set must be nonempty")
    eng = _Engine(a, kind, variant, relation)
    start_idx = tuple(sorted(a._state(q) for q in start_set))
    root = eng.initial_key(start_idx)
    explored = 0
    if eng.is_final(root):
        return SearchResult(Verdict.POSITIVE, (), 1, 0)
    seen = {root: None}
    queue = deque([(root, 0)])
    depth_reached = 0
    while queue:
        key, depth = queue.popleft()
        explored += 1
        depth_reached = max(depth_reached, depth)
        for lj in range(a.k):
            nxt = eng.successor_key(key, lj)
            if nxt is None or nxt == ERROR_KEY or nxt in seen:
                continue
            seen[nxt] = (key, lj)
            if eng.is_final(nxt):
                word = [a.letters[lj]]
                cur = key
                while seen[cur] is not None:
                    cur, pj = seen[cur]
                    word.append(a.letters[pj])
                word.reverse()
                return SearchResult(Verdict.POSITIVE, tuple(word), explored, depth + 1)
            if len(seen) > budget:
                return SearchResult(Verdict.INCONCLUSIVE, None, explored, depth + 1)
            queue.append((nxt, depth + 1))
    return SearchResult(Verdict.NEGATIVE, None, explored, depth_reached)


def search_depth_bound(n: int, p: int) -> int:
    """Witness-length cap (n(n-1)/2 + 1) * 2**p for instances whose relation
    restricted to some subset of n - p states is strict and total."""
    if p < 0 or p > n:
        raise InputError("need 0 <= p <= n")
    return (n * (n - 1) // 2 + 1) * (1 << p)
