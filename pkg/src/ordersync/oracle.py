"""Independent brute-force decider: exhaustive word enumeration checked
against the occurrence semantics.  Validates every other decision engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .automata import Automaton
from .orders import OrderKind, Variant, relation_satisfied


class OracleVerdict(Enum):
    POSITIVE = "positive"
    NEGATIVE_TO_BOUND = "negative up to bound"


@dataclass
class OracleResult:
    verdict: OracleVerdict
    witness: tuple | None
    checked: int
    max_len: int

    @property
    def positive(self) -> bool:
        return self.verdict is OracleVerdict.POSITIVE


def enumerate_decide(a: Automaton, kind: OrderKind, variant: Variant, relation,
                     start=None, max_len: int = 8) -> OracleResult:
    """Try every word of length 0..max_len in length-then-lex order.

    Positive on the first word whose image of `start` is a singleton and
    whose induced order contains the relation.  A bounded miss is reported
    as "negative up to bound", never as a proven negative: only a length
    theorem entitles the caller to read it as definitive.

    Words whose prefix already hits an undefined transition on an active
    state are pruned together with all their extensions, which is exactly
    the careful-synchronization admissibility rule.
    """
    start_set = a.check_set(a.states if start is None else start)
    start_idx = tuple(sorted(a._state(q) for q in start_set))
    checked = 0

    def qualifies(word) -> bool:
        ok, _ = relation_satisfied(a, kind, variant, word, relation, base=start_set)
        return ok

    # level-order walk of the prefix tree; each node carries its active set
    level = [((), start_idx)]
    for length in range(0, max_len + 1):
        for word, act in level:
            checked += 1
            if len(act) == 1 and qualifies(word):
                return OracleResult(OracleVerdict.POSITIVE, word, checked, max_len)
        if length == max_len:
            break
        nxt = []
        for word, act in level:
            for lj, x in enumerate(a.letters):
                row = a.table[lj]
                img = set()
                dead = False
                for i in act:
                    t = row[i]
                    if t < 0:
                        dead = True
                        break
                    img.add(t)
                if dead:
                    continue
                nxt.append((word + (x,), tuple(sorted(img))))
        level = nxt
        if not level:
            break
    return OracleResult(OracleVerdict.NEGATIVE_TO_BOUND, None, checked, max_len)
