"""Ground-truth order semantics: occurrence positions and the five induced
state orders.

A word w applied to a base (the whole state set for the set orders, every
single start state for the path orders) yields occurrence positions per
state.  ``first``/``last`` use the sentinels |w|+1 and -1 for states that
never occur.  Under the from-1 variant an occurrence at position 0 (the
initial configuration) counts for neither first nor last.

Everything here is the oracle side: deciders elsewhere are validated
against these literal evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .automata import Automaton, run_path, run_set
from .errors import InputError, PartialityError


class OrderKind(Enum):
    LL_SET = "ll_set"      # last(p) <  last(q) on the active-set sequence
    LEQ_SET = "leq_set"    # last(p) <= last(q) on the active-set sequence
    LL_PATH = "ll_path"    # last(p) <  last(q) on every path
    LEQ_PATH = "leq_path"  # last(p) <= last(q) on every path
    LF_PATH = "lf_path"    # last(p) <  first(q) on every path

    @property
    def on_paths(self) -> bool:
        return self in (OrderKind.LL_PATH, OrderKind.LEQ_PATH, OrderKind.LF_PATH)


class Variant(Enum):
    FROM0 = "from0"  # position 0 counts toward occurrences
    FROM1 = "from1"  # position 0 is ignored


SET_KINDS = (OrderKind.LL_SET, OrderKind.LEQ_SET)
PATH_KINDS = (OrderKind.LL_PATH, OrderKind.LEQ_PATH, OrderKind.LF_PATH)


@dataclass
class OccurrenceTable:
    """First/last active position of every state for one base and word."""

    word_length: int
    first: dict
    last: dict


def canonical_relation(a: Automaton, relation) -> tuple:
    """Deduplicated relation sorted by declaration order of (p, q)."""
    pairs = set()
    for p, q in relation:
        a._state(p)
        a._state(q)
        pairs.add((p, q))
    return tuple(sorted(pairs, key=lambda pq: (a.state_index[pq[0]], a.state_index[pq[1]])))


def strict_total_order(a: Automaton, relation) -> tuple:
    """The state permutation a strict total order describes, smallest first.

    Raises InputError naming an offending pair when the relation is not
    irreflexive, asymmetric, total and transitive on the whole state set.
    """
    rel = set(canonical_relation(a, relation))
    for p, q in rel:
        if p == q:
            raise InputError(f"relation is not strict: reflexive pair ({p!r}, {q!r})")
        if (q, p) in rel:
            raise InputError(f"relation is not asymmetric: both ({p!r}, {q!r}) and ({q!r}, {p!r})")
    wins = {q: 0 for q in a.states}
    for p, q in rel:
        wins[p] += 1
    order = sorted(a.states, key=lambda q: (-wins[q], a.state_index[q]))
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            if (order[i], order[j]) not in rel:
                raise InputError(
                    f"relation is not a strict total order: pair ({order[i]!r}, {order[j]!r}) unresolved"
                )
    if len(rel) != a.n * (a.n - 1) // 2:
        extra = sorted(rel)[0]
        raise InputError(f"relation is not a strict total order near pair {extra!r}")
    return tuple(order)


def occurrences(a: Automaton, base, w, variant: Variant) -> OccurrenceTable:
    """Exact first/last positions over the run from `base`.

    `base` is a single state token (path semantics) or a collection of
    states (set semantics).  Partial runs raise PartialityError.
    """
    w = a.check_word(w)
    m = len(w)
    if isinstance(base, str):
        run = run_path(a, base, w)
        if not run.complete:
            raise PartialityError(run.failed_position, run.failed_state, w[run.failed_position - 1])
        layers = [(q,) for q in run.states]
    else:
        run = run_set(a, base, w)
        if not run.complete:
            raise PartialityError(run.failed_position, run.failed_state, w[run.failed_position - 1])
        layers = run.sets
    first = {q: m + 1 for q in a.states}
    last = {q: -1 for q in a.states}
    start = 1 if variant is Variant.FROM1 else 0
    for pos in range(start, m + 1):
        for q in layers[pos]:
            if first[q] > pos:
                first[q] = pos
            last[q] = pos
    return OccurrenceTable(word_length=m, first=first, last=last)


def _holds_on_table(kind: OrderKind, table: OccurrenceTable, p, q) -> bool:
    if kind in (OrderKind.LL_SET, OrderKind.LL_PATH):
        return table.last[p] < table.last[q]
    if kind in (OrderKind.LEQ_SET, OrderKind.LEQ_PATH):
        return table.last[p] <= table.last[q]
    return table.last[p] < table.first[q]


def _bases(a: Automaton, kind: OrderKind, base):
    if kind.on_paths:
        if base is None:
            return list(a.states)
        return sorted(a.check_set(base), key=a.state_index.__getitem__)
    return [frozenset(a.states) if base is None else a.check_set(base)]


def order_holds(a: Automaton, kind: OrderKind, variant: Variant, w, pair, base=None) -> bool:
    """Literal evaluation of one pair under the chosen order.

    Path kinds quantify over every start state (or every state of `base`
    when the subset problem restricts the active paths).
    """
    p, q = pair
    a._state(p)
    a._state(q)
    for b in _bases(a, kind, base):
        table = occurrences(a, b, w, variant)
        if not _holds_on_table(kind, table, p, q):
            return False
    return True


def relation_satisfied(a: Automaton, kind: OrderKind, variant: Variant, w, relation, base=None):
    """Conjunction over the relation; returns (ok, first violated pair)."""
    rel = canonical_relation(a, relation)
    tables = [occurrences(a, b, w, variant) for b in _bases(a, kind, base)]
    for pair in rel:
        for table in tables:
            if not _holds_on_table(kind, table, pair[0], pair[1]):
                return False, pair
    return True, None


def induced_order(a: Automaton, kind: OrderKind, variant: Variant, w, base=None) -> frozenset:
    """The full relation the word induces: every pair for which the order holds."""
    tables = [occurrences(a, b, w, variant) for b in _bases(a, kind, base)]
    out = set()
    for p in a.states:
        for q in a.states:
            if all(_holds_on_table(kind, t, p, q) for t in tables):
                out.add((p, q))
    return frozenset(out)
