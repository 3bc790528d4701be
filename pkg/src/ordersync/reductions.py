"""Instance transformations between synchronization problems.

Each construction maps a source problem (careful synchronization of a
partial automaton, vertex cover, subset synchronization of a weakly
acyclic automaton) to an order-constrained synchronization instance with
the same verdict.  They serve as cross-checks for the deciders and as
test-instance generators; none of them is used as a proof.

Arbitrary choices the constructions leave open (a mimicked state, the
simulated subset member) are fixed as the smallest token in declaration
order so output is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import Automaton, is_weakly_acyclic
from .errors import InputError
from .orders import OrderKind, Variant


@dataclass
class ReductionOutput:
    automaton: Automaton
    relation: frozenset
    kind: OrderKind
    variant: Variant
    subset: frozenset | None
    note: str


def _fresh(base: str, taken: set) -> str:
    if base not in taken:
        taken.add(base)
        return base
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    taken.add(f"{base}{i}")
    return f"{base}{i}"


def careful_to_leq_sets(a: Automaton, variant: Variant = Variant.FROM0) -> ReductionOutput:
    """Careful synchronization -> last<=last on sets with a single pair.

    Adds a catch state for undefined transitions and a tracker state; both
    mimic the smallest declared state.  The tracker may only disappear
    strictly after position 0, which forces the word to stay defined on the
    original automaton.  Valid under both position variants.
    """
    if not a.states:
        raise InputError("source automaton must be nonempty")
    taken = set(a.states)
    q_catch = _fresh("qbot", taken)
    tracker = _fresh("r", taken)
    t0 = a.states[0]
    trans = {}
    for q in a.states:
        for x in a.letters:
            trans[(q, x)] = a.transitions.get((q, x), q_catch)
    for x in a.letters:
        mimic = trans[(t0, x)]
        trans[(q_catch, x)] = mimic
        trans[(tracker, x)] = mimic
    out = Automaton(a.states + (q_catch, tracker), a.letters, trans)
    return ReductionOutput(
        automaton=out,
        relation=frozenset({(q_catch, tracker)}),
        kind=OrderKind.LEQ_SET,
        variant=variant,
        subset=None,
        note=f"careful-sync source with {a.n} states; catch={q_catch} tracker={tracker}",
    )


def careful_to_ll_sets(a: Automaton, variant: Variant = Variant.FROM0) -> ReductionOutput:
    """Careful synchronization -> strict last<last on sets.

    Same skeleton as the non-strict reduction, plus a feeder copy of every
    original state and of the tracker; copies collapse onto their originals
    with every letter, so each state is re-entered at position 1 and the
    strict comparison can be won.  The catch state is not copied.
    """
    base = careful_to_leq_sets(a, variant)
    inner = base.automaton
    q_catch, tracker = inner.states[-2], inner.states[-1]
    taken = set(inner.states)
    copies = {q: _fresh(f"{q}'", taken) for q in a.states + (tracker,)}
    trans = dict(inner.transitions)
    for q, cp in copies.items():
        for x in a.letters:
            trans[(cp, x)] = q
    states = inner.states + tuple(copies[q] for q in a.states + (tracker,))
    out = Automaton(states, a.letters, trans)
    return ReductionOutput(
        automaton=out,
        relation=frozenset({(q_catch, tracker)}),
        kind=OrderKind.LL_SET,
        variant=variant,
        subset=None,
        note=f"careful-sync source with {a.n} states; copies feed originals",
    )


def vc_to_leq_paths0(edges, k: int, vertices=None) -> ReductionOutput:
    """Vertex cover -> last<=last on paths, position 0 included.

    The word must list a cover within the first k letters (a counter chain
    enforces the deadline through the tracked pair), and every edge gadget
    must be switched by one of its endpoints before the punctuation letter
    arrives.
    """
    edges = [tuple(e) for e in edges]
    if vertices is None:
        vertices = sorted({v for e in edges for v in e})
    vertices = list(vertices)
    if k < 0 or k > len(vertices):
        raise InputError("need 0 <= k <= |V|")
    for u, v in edges:
        if u == v or u not in vertices or v not in vertices:
            raise InputError(f"bad edge ({u!r}, {v!r})")
    taken = set()
    vtokens = [_fresh(str(v), taken) for v in vertices]
    vmap = dict(zip(vertices, vtokens))
    punct = _fresh("p", taken)
    f, r, s = _fresh("f", taken), _fresh("r", taken), _fresh("s", taken)
    letters = vtokens + [punct]
    estates = []
    for u, v in edges:
        e = _fresh(f"e_{u}_{v}", taken)
        ehat = _fresh(f"e_{u}_{v}^", taken)
        estates.append((e, ehat, vmap[u], vmap[v]))
    chain = [_fresh(f"c{i}", taken) for i in range(1, k + 3)]

    trans = {}
    for x in letters:
        trans[(s, x)] = s
        trans[(f, x)] = s if x == punct else f
        trans[(r, x)] = s if x == punct else r
    for e, ehat, xu, xv in estates:
        for x in letters:
            if x == punct:
                trans[(e, x)] = f
                trans[(ehat, x)] = s
            else:
                trans[(e, x)] = ehat if x in (xu, xv) else e
                trans[(ehat, x)] = ehat
    for i, c in enumerate(chain):  # chain[i] is the (i+1)-th counter state
        last = i == len(chain) - 1
        for x in letters:
            if x == punct:
                if last:
                    trans[(c, x)] = s
                elif i == len(chain) - 2:
                    trans[(c, x)] = r
                else:
                    trans[(c, x)] = c
            else:
                trans[(c, x)] = c if last else chain[i + 1]

    states = [f, r, s] + [q for e, ehat, _, _ in estates for q in (e, ehat)] + chain
    relation = {(chain[0], r)} | {(e, ehat) for e, ehat, _, _ in estates}
    out = Automaton(states, letters, trans)
    return ReductionOutput(
        automaton=out,
        relation=frozenset(relation),
        kind=OrderKind.LEQ_PATH,
        variant=Variant.FROM0,
        subset=None,
        note=f"vertex-cover source with {len(vertices)} vertices, {len(edges)} edges, k={k}",
    )


def careful_to_lf_paths(a: Automaton, variant: Variant = Variant.FROM0) -> ReductionOutput:
    """Careful synchronization -> last<first on paths.

    A wake-up letter releases theauxiliary states into the original
    automaton; the relation forbids any path from touching the catch state
    once the originals are active, which again outlaws undefined
    transitions.  The from-1 form additionally feeds every original state
    and the tracker through a copy so that the constraint arms right after
    the unrestricted first move.
    """
    if not a.states:
        raise InputError("source automaton must be nonempty")
    taken = set(a.states)
    q_catch, tracker, sink = _fresh("qbot", taken), _fresh("r", taken), _fresh("s", taken)
    wake = _fresh("c", set(a.letters))
    letters = a.letters + (wake,)
    t0 = a.states[0]
    trans = {}
    for q in a.states:
        for x in a.letters:
            trans[(q, x)] = a.transitions.get((q, x), q_catch)
        trans[(q, wake)] = q
    for x in a.letters:
        trans[(q_catch, x)] = q_catch
        trans[(tracker, x)] = sink
        trans[(sink, x)] = sink
    trans[(q_catch, wake)] = t0
    trans[(tracker, wake)] = t0
    trans[(sink, wake)] = t0
    states = a.states + (q_catch, tracker, sink)
    relation = {(sink, tracker)} | {(q_catch, q) for q in a.states}

    if variant is Variant.FROM1:
        copies = {q: _fresh(f"{q}'", taken) for q in a.states + (tracker,)}
        for q, cp in copies.items():
            for x in letters:
                trans[(cp, x)] = q
        states = states + tuple(copies[q] for q in a.states + (tracker,))

    out = Automaton(states, letters, trans)
    return ReductionOutput(
        automaton=out,
        relation=frozenset(relation),
        kind=OrderKind.LF_PATH,
        variant=variant,
        subset=None,
        note=f"careful-sync source with {a.n} states; wake letter {wake}",
    )


def subsetwaa_to_total1(a: Automaton, subset) -> ReductionOutput:
    """Subset synchronization of a complete weakly acyclic automaton ->
    last<first on paths under a strict total order, from-1 variant.

    Subset members get parked copies released by a reset letter; the reset
    must be the first move (a top trap state punishes anything else), after
    which exactly the subset plus the bottom state is active and the bottom
    state shadows a chosen subset member.
    """
    order = is_weakly_acyclic(a)
    if order is None:
        raise InputError("source automaton must be weakly acyclic")
    if not a.is_complete:
        raise InputError("source automaton must be complete")
    subset = a.check_set(subset)
    if len(subset) < 2:
        raise InputError("subset must have at least two states")
    smembers = sorted(subset, key=a.state_index.__getitem__)
    q_s = smembers[0]
    taken = set(a.states)
    bottom, top = _fresh("q<", taken), _fresh("q>", taken)
    reset = _fresh("c", set(a.letters))
    copies = {q: _fresh(f"{q}^", taken) for q in smembers}
    letters = a.letters + (reset,)

    trans = dict(a.transitions)
    for q in a.states:
        trans[(q, reset)] = bottom
    for q, cp in copies.items():
        for x in a.letters:
            trans[(cp, x)] = cp
        trans[(cp, reset)] = q
    for x in a.letters:
        trans[(bottom, x)] = a.transitions[(q_s, x)]
        trans[(top, x)] = top
    trans[(bottom, reset)] = q_s
    trans[(top, reset)] = q_s

    states = a.states + tuple(copies[q] for q in smembers) + (bottom, top)
    # full strict total order: bottom, then the ordering with each copy
    # directly below its original, then top
    ranked = [bottom]
    for q in order:
        if q in copies:
            ranked.append(copies[q])
        ranked.append(q)
    ranked.append(top)
    relation = frozenset(
        (ranked[i], ranked[j]) for i in range(len(ranked)) for j in range(i + 1, len(ranked))
    )
    out = Automaton(states, letters, trans)
    return ReductionOutput(
        automaton=out,
        relation=relation,
        kind=OrderKind.LF_PATH,
        variant=Variant.FROM1,
        subset=None,
        note=f"subset-sync source with {a.n} states, |S|={len(subset)}, shadow={q_s}",
    )
