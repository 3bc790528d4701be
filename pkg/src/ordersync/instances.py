"""Line-oriented instance files and vertex-cover graph files.

Instance format (UTF-8, `#` starts a comment, blank lines ignored)::

    states: 1 2 3 4 5
    alphabet: a b
    trans: 1 a 1          # repeatable; an absent entry is undefined
    order: ll_set         # ll_set | leq_set | ll_path | leq_path | lf_path
    variant: from0        # from0 | from1
    pair: 1 2             # repeatable
    subset: 2 4           # optional start set

Graph format for vertex-cover sources::

    vertices: 1 2 3
    edge: 1 2             # repeatable
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .automata import Automaton
from .errors import ParseError
from .orders import OrderKind, Variant, canonical_relation


@dataclass
class Instance:
    automaton: Automaton
    kind: OrderKind | None = None
    variant: Variant | None = None
    relation: frozenset = frozenset()
    subset: frozenset | None = None

    def __eq__(self, other):
        return (
            isinstance(other, Instance)
            and self.automaton == other.automaton
            and self.kind == other.kind
            and self.variant == other.variant
            and self.relation == other.relation
            and self.subset == other.subset
        )


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_instance(text: str) -> Instance:
    states = letters = None
    trans = []
    kind = variant = None
    pairs = []
    subset = None
    last_line = 0
    for lineno, line in _content_lines(text):
        last_line = lineno
        if ":" not in line:
            raise ParseError(lineno, f"expected 'key: values', got {line!r}")
        key, _, rest = line.partition(":")
        key = key.strip()
        toks = rest.split()
        if key == "states":
            if states is not None:
                raise ParseError(lineno, "duplicate 'states' line")
            if not toks:
                raise ParseError(lineno, "empty state declaration")
            states = toks
        elif key == "alphabet":
            if letters is not None:
                raise ParseError(lineno, "duplicate 'alphabet' line")
            letters = toks
        elif key == "trans":
            if len(toks) != 3:
                raise ParseError(lineno, "trans needs '<state> <letter> <state>'")
            trans.append((lineno, tuple(toks)))
        elif key == "order":
            if kind is not None:
                raise ParseError(lineno, "duplicate 'order' line")
            try:
                kind = OrderKind(toks[0]) if len(toks) == 1 else None
            except ValueError:
                kind = None
            if kind is None:
                raise ParseError(lineno, f"unknown order {rest.strip()!r}")
        elif key == "variant":
            if variant is not None:
                raise ParseError(lineno, "duplicate 'variant' line")
            try:
                variant = Variant(toks[0]) if len(toks) == 1 else None
            except ValueError:
                variant = None
            if variant is None:
                raise ParseError(lineno, f"unknown variant {rest.strip()!r}")
        elif key == "pair":
            if len(toks) != 2:
                raise ParseError(lineno, "pair needs '<state> <state>'")
            pairs.append((lineno, (toks[0], toks[1])))
        elif key == "subset":
            if subset is not None:
                raise ParseError(lineno, "duplicate 'subset' line")
            if not toks:
                raise ParseError(lineno, "empty subset")
            subset = (lineno, toks)
        else:
            raise ParseError(lineno, f"unknown key {key!r}")

    if states is None:
        raise ParseError(last_line + 1, "missing 'states' declaration")
    if letters is None:
        raise ParseError(last_line + 1, "missing 'alphabet' declaration")
    sset, lset = set(states), set(letters)
    if len(sset) != len(states):
        raise ParseError(last_line + 1, "duplicate state token")
    if len(lset) != len(letters):
        raise ParseError(last_line + 1, "duplicate letter token")

    seen_keys = set()
    triples = []
    for lineno, (q, x, t) in trans:
        for tok, pool, what in ((q, sset, "state"), (x, lset, "letter"), (t, sset, "state")):
            if tok not in pool:
                raise ParseError(lineno, f"undeclared {what} {tok!r}")
        if (q, x) in seen_keys:
            raise ParseError(lineno, f"duplicate transition for ({q!r}, {x!r})")
        seen_keys.add((q, x))
        triples.append((q, x, t))
    automaton = Automaton(states, letters, triples)

    relation = set()
    for lineno, (p, q) in pairs:
        for tok in (p, q):
            if tok not in sset:
                raise ParseError(lineno, f"undeclared state {tok!r}")
        relation.add((p, q))

    sub = None
    if subset is not None:
        lineno, toks = subset
        for tok in toks:
            if tok not in sset:
                raise ParseError(lineno, f"undeclared state {tok!r}")
        sub = frozenset(toks)

    return Instance(automaton=automaton, kind=kind, variant=variant,
                    relation=frozenset(relation), subset=sub)


def emit_instance(inst: Instance, comments=()) -> str:
    a = inst.automaton
    lines = [f"# {c}" for c in comments]
    lines.append("states: " + " ".join(a.states))
    lines.append("alphabet: " + " ".join(a.letters))
    for q in a.states:
        for x in a.letters:
            t = a.transitions.get((q, x))
            if t is not None:
                lines.append(f"trans: {q} {x} {t}")
    if inst.kind is not None:
        lines.append(f"order: {inst.kind.value}")
    if inst.variant is not None:
        lines.append(f"variant: {inst.variant.value}")
    for p, q in canonical_relation(a, inst.relation):
        lines.append(f"pair: {p} {q}")
    if inst.subset is not None:
        lines.append("subset: " + " ".join(sorted(inst.subset, key=a.state_index.__getitem__)))
    return "\n".join(lines) + "\n"


@dataclass
class GraphFile:
    vertices: tuple
    edges: tuple = field(default_factory=tuple)


def parse_graph(text: str) -> GraphFile:
    vertices = None
    edges = []
    last_line = 0
    for lineno, line in _content_lines(text):
        last_line = lineno
        key, _, rest = line.partition(":")
        key = key.strip()
        toks = rest.split()
        if key == "vertices":
            if vertices is not None:
                raise ParseError(lineno, "duplicate 'vertices' line")
            if not toks:
                raise ParseError(lineno, "empty vertex declaration")
            vertices = toks
        elif key == "edge":
            if len(toks) != 2:
                raise ParseError(lineno, "edge needs '<vertex> <vertex>'")
            edges.append((lineno, (toks[0], toks[1])))
        else:
            raise ParseError(lineno, f"unknown key {key!r}")
    if vertices is None:
        raise ParseError(last_line + 1, "missing 'vertices' declaration")
    vset = set(vertices)
    if len(vset) != len(vertices):
        raise ParseError(last_line + 1, "duplicate vertex token")
    out = []
    for lineno, (u, v) in edges:
        for tok in (u, v):
            if tok not in vset:
                raise ParseError(lineno, f"undeclared vertex {tok!r}")
        if u == v:
            raise ParseError(lineno, "self-loops are not simple-graph edges")
        out.append((u, v))
    return GraphFile(vertices=tuple(vertices), edges=tuple(out))


def emit_graph(g: GraphFile, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append("vertices: " + " ".join(g.vertices))
    for u, v in g.edges:
        lines.append(f"edge: {u} {v}")
    return "\n".join(lines) + "\n"
