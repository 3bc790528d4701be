"""Synchronizing words under state-order constraints.

Decides whether a deterministic automaton admits a synchronizing word whose
induced state order agrees with a given relation, for five order semantics
in two position variants, with witness words, brute-force oracles, the
polynomial-time total-order engine (equivalently careful synchronization of
partial weakly acyclic automata), and hardness-style instance generators.
"""

from .automata import (Automaton, PathRun, SetRun, SyncResult, classic_sync,
                       is_weakly_acyclic, run_path, run_set, step)
from .certificate import decide_ll_path, pairwise_merge, tail_word
from .errors import BudgetExceeded, InputError, ParseError, PartialityError
from .oracle import OracleResult, OracleVerdict, enumerate_decide
from .orders import (OccurrenceTable, OrderKind, Variant, canonical_relation,
                     induced_order, occurrences, order_holds,
                     relation_satisfied, strict_total_order)
from .powerset import (Configuration, SearchResult, Verdict, decide,
                       initial_configuration, search_depth_bound, successor)
from .total_order import (EngineResult, EngineTrace, careful_sync_pwaa,
                          cerny_bound, fast_decide, greedy_decide,
                          pwaa_from_total, total_from_pwaa)

__all__ = [
    "Automaton", "PathRun", "SetRun", "SyncResult", "classic_sync",
    "is_weakly_acyclic", "run_path", "run_set", "step",
    "decide_ll_path", "pairwise_merge", "tail_word",
    "BudgetExceeded", "InputError", "ParseError", "PartialityError",
    "OracleResult", "OracleVerdict", "enumerate_decide",
    "OccurrenceTable", "OrderKind", "Variant", "canonical_relation",
    "induced_order", "occurrences", "order_holds", "relation_satisfied",
    "strict_total_order",
    "Configuration", "SearchResult", "Verdict", "decide",
    "initial_configuration", "search_depth_bound", "successor",
    "EngineResult", "EngineTrace", "careful_sync_pwaa", "cerny_bound",
    "fast_decide", "greedy_decide", "pwaa_from_total", "total_from_pwaa",
]
