"""Deterministic complete/partial automata and their transition dynamics.

States and letters are arbitrary string tokens.  Declaration order is
significant: every deterministic tie-break in the package follows it.
Partiality is ordinary data (an absent entry), not an error, so that
careful-synchronization logic can reason about undefined transitions.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field

from .errors import InputError

Word = tuple[str, ...]


class Automaton:
    """A deterministic semi-automaton with a possibly partial transition table.

    `transitions` may be a ``{(state, letter): target}`` mapping or an
    iterable of ``(state, letter, target)`` triples.  All tokens must be
    declared; at most one target per (state, letter) pair.
    """

    __slots__ = ("states", "letters", "transitions", "state_index", "letter_index", "table")

    def __init__(self, states, letters, transitions=()):
        self.states: Word = tuple(states)
        self.letters: Word = tuple(letters)
        if len(set(self.states)) != len(self.states):
            raise InputError("duplicate state token in declaration")
        if len(set(self.letters)) != len(self.letters):
            raise InputError("duplicate letter token in declaration")
        self.state_index = {q: i for i, q in enumerate(self.states)}
        self.letter_index = {x: j for j, x in enumerate(self.letters)}

        if hasattr(transitions, "items"):
            triples = [(q, x, t) for (q, x), t in transitions.items()]
        else:
            triples = [tuple(tr) for tr in transitions]

        table = [[-1] * len(self.states) for _ in self.letters]
        canon = {}
        for q, x, t in triples:
            i = self._state(q)
            j = self._letter(x)
            ti = self._state(t)
            if table[j][i] != -1:
                raise InputError(f"duplicate transition for ({q!r}, {x!r})")
            table[j][i] = ti
            canon[(q, x)] = t
        self.table = tuple(tuple(row) for row in table)
        self.transitions = canon

    def _state(self, q) -> int:
        try:
            return self.state_index[q]
        except KeyError:
            raise InputError(f"undeclared state {q!r}") from None

    def _letter(self, x) -> int:
        try:
            return self.letter_index[x]
        except KeyError:
            raise InputError(f"undeclared letter {x!r}") from None

    @property
    def n(self) -> int:
        return len(self.states)

    @property
    def k(self) -> int:
        return len(self.letters)

    @property
    def is_complete(self) -> bool:
        return all(t >= 0 for row in self.table for t in row)

    def check_word(self, w) -> Word:
        w = tuple(w)
        for x in w:
            self._letter(x)
        return w

    def check_set(self, s) -> frozenset:
        s = frozenset(s)
        for q in s:
            self._state(q)
        return s

    def __eq__(self, other):
        return (
            isinstance(other, Automaton)
            and self.states == other.states
            and self.letters == other.letters
            and self.transitions == other.transitions
        )

    def __hash__(self):
        return hash((self.states, self.letters, frozenset(self.transitions.items())))

    def __repr__(self):
        return f"Automaton(states={len(self.states)}, letters={len(self.letters)}, defined={len(self.transitions)})"


@dataclass
class SetRun:
    """Active-set sequence ``sets[0..j]``; a partial run records where it cut."""

    sets: list
    failed_position: int | None = None
    failed_state: str | None = None

    @property
    def complete(self) -> bool:
        return self.failed_position is None

    @property
    def final(self):
        return self.sets[-1]


@dataclass
class PathRun:
    """State sequence of one path; cut data as in :class:`SetRun`."""

    states: list
    failed_position: int | None = None
    failed_state: str | None = None

    @property
    def complete(self) -> bool:
        return self.failed_position is None


def step(a: Automaton, q, x):
    """Target of (q, x), or None when the transition is undefined."""
    i = a._state(q)
    j = a._letter(x)
    t = a.table[j][i]
    return None if t < 0 else a.states[t]


def run_set(a: Automaton, s, w) -> SetRun:
    """Apply w to the state set s, recording every intermediate active set.

    Stops at the first undefined transition on an active state and marks
    the 1-based position and the state that had no move.
    """
    s = a.check_set(s)
    w = a.check_word(w)
    cur = sorted(a._state(q) for q in s)
    out = SetRun(sets=[frozenset(a.states[i] for i in cur)])
    for pos, x in enumerate(w, start=1):
        row = a.table[a.letter_index[x]]
        nxt = set()
        for i in cur:
            t = row[i]
            if t < 0:
                out.failed_position = pos
                out.failed_state = a.states[i]
                return out
            nxt.add(t)
        cur = sorted(nxt)
        out.sets.append(frozenset(a.states[i] for i in cur))
    return out


def run_path(a: Automaton, r, w) -> PathRun:
    """The path induced by w starting at the single state r."""
    i = a._state(r)
    w = a.check_word(w)
    out = PathRun(states=[r])
    for pos, x in enumerate(w, start=1):
        t = a.table[a.letter_index[x]][i]
        if t < 0:
            out.failed_position = pos
            out.failed_state = a.states[i]
            return out
        i = t
        out.states.append(a.states[i])
    return out


@dataclass
class SyncResult:
    positive: bool
    word: Word | None = None


def _pair_bfs(a: Automaton, i: int, j: int) -> Word | None:
    """Shortest word merging states i and j, scanning letters in declaration
    order so that the result is also lexicographically least."""
    start = (i, j) if i < j else (j, i)
    if i == j:
        return ()
    seen = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        for lj in range(a.k):
            row = a.table[lj]
            p, q = row[node[0]], row[node[1]]
            if p > q:
                p, q = q, p
            if p == q:
                # reconstruct
                word = [a.letters[lj]]
                cur = node
                while seen[cur] is not None:
                    cur, lx = seen[cur]
                    word.append(lx)
                word.reverse()
                return tuple(word)
            nxt = (p, q)
            if nxt not in seen:
                seen[nxt] = (node, a.letters[lj])
                queue.append(nxt)
    return None


def _subset_bfs(a: Automaton, start: tuple) -> Word | None:
    """Exact subset-to-singleton search; used when greedy pair merging sticks
    on a proper subset (plain pair merging only decides the full-set case)."""
    seen = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if len(node) == 1:
            word = []
            cur = node
            while seen[cur] is not None:
                cur, lx = seen[cur]
                word.append(lx)
            word.reverse()
            return tuple(word)
        for lj in range(a.k):
            row = a.table[lj]
            nxt = tuple(sorted({row[i] for i in node}))
            if nxt not in seen:
                seen[nxt] = (node, a.letters[lj])
                queue.append(nxt)
    return None


def classic_sync(a: Automaton, s=None) -> SyncResult:
    """Unconstrained synchronization of a complete automaton.

    Builds a witness by repeatedly merging the two smallest active states
    via shortest paths in the squared automaton.  For the full state set
    this is exact; a stuck proper subset falls back to an exact
    subset-space search.
    """
    if not a.is_complete:
        raise InputError("classic synchronization is defined on complete automata")
    s = a.check_set(a.states if s is None else s)
    if not s:
        return SyncResult(False)
    active = sorted(a._state(q) for q in s)
    full = len(s) == a.n
    word: list = []
    while len(active) > 1:
        i, j = active[0], active[1]
        merge = _pair_bfs(a, i, j)
        if merge is None:
            if full:
                return SyncResult(False)
            w = _subset_bfs(a, tuple(active))
            if w is None:
                return SyncResult(False)
            word.extend(w)
            return SyncResult(True, tuple(word))
        word.extend(merge)
        rows = [a.table[a.letter_index[x]] for x in merge]
        nxt = set(active)
        for row in rows:
            nxt = {row[q] for q in nxt}
        active = sorted(nxt)
    return SyncResult(True, tuple(word))


def is_weakly_acyclic(a: Automaton):
    """Topological ordering of the states (self-loops ignored), or None.

    Among ready states the smallest in declaration order is emitted first,
    so the ordering is deterministic.
    """
    n = a.n
    out_edges = [set() for _ in range(n)]
    indeg = [0] * n
    for row in a.table:
        for i, t in enumerate(row):
            if t >= 0 and t != i and t not in out_edges[i]:
                out_edges[i].add(t)
                indeg[t] += 1
    ready = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        i = heapq.heappop(ready)
        order.append(i)
        for t in out_edges[i]:
            indeg[t] -= 1
            if indeg[t] == 0:
                heapq.heappush(ready, t)
    if len(order) != n:
        return None
    return tuple(a.states[i] for i in order)
