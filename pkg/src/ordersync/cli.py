"""Command-line interface.

Exit codes: 0 positive / success, 1 negative / failed check, 2 inconclusive,
64 usage error, 65 unusable input (parse error, inapplicable engine).
"""

from __future__ import annotations

import argparse
import sys

from . import certificate, generate, instances, oracle, powerset, reductions, total_order
from .automata import run_set
from .errors import InputError, ParseError, PartialityError
from .orders import (OrderKind, Variant, canonical_relation, induced_order,
                     relation_satisfied, strict_total_order)

EX_USAGE = 64
EX_DATA = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _read_instance(path: str) -> instances.Instance:
    with open(path, encoding="utf-8") as fh:
        return instances.parse_instance(fh.read())


def _format_word(a, word) -> str:
    if not word:
        return ""
    if all(len(x) == 1 for x in a.letters):
        return "".join(word)
    return " ".join(word)


def _parse_word(a, text: str):
    toks = text.split()
    if toks and all(t in a.letter_index for t in toks):
        return tuple(toks)
    if all(len(x) == 1 for x in a.letters) and all(c in a.letter_index for c in text.strip()):
        return tuple(text.strip())
    raise InputError(f"cannot read {text!r} as a word over the alphabet")


def _require_order(inst: instances.Instance):
    if inst.kind is None:
        raise InputError("instance file has no 'order' line")
    if inst.variant is None:
        raise InputError("instance file has no 'variant' line")


def _is_strict_total(a, relation) -> bool:
    try:
        strict_total_order(a, relation)
        return True
    except InputError:
        return False


def _cmd_decide(args) -> int:
    inst = _read_instance(args.file)
    _require_order(inst)
    a, kind, variant = inst.automaton, inst.kind, inst.variant
    rel = inst.relation
    engine = args.engine
    if engine == "auto":
        if inst.subset is not None or not a.is_complete:
            engine = "powerset"
        elif kind is OrderKind.LF_PATH and variant is Variant.FROM0 and _is_strict_total(a, rel):
            engine = "fast"
        elif kind is OrderKind.LL_PATH:
            engine = "certificate"
        else:
            engine = "powerset"

    if engine in ("fast", "greedy"):
        if kind is not OrderKind.LF_PATH:
            raise InputError(f"engine {engine!r} applies to order lf_path only")
        if inst.subset is not None:
            raise InputError(f"engine {engine!r} does not take a start subset")
        if not _is_strict_total(a, rel):
            raise InputError(f"engine {engine!r} needs a strict total order relation")
        if engine == "greedy":
            if variant is not Variant.FROM0:
                raise InputError("engine 'greedy' handles variant from0 only")
            res = total_order.greedy_decide(a, rel)
        else:
            res = total_order.fast_decide(a, rel, variant)
        if res.positive:
            print(f"YES {_format_word(a, res.witness)}".rstrip())
            return 0
        print("NO")
        return 1

    if engine == "certificate":
        if kind is not OrderKind.LL_PATH:
            raise InputError("engine 'certificate' applies to order ll_path only")
        if inst.subset is not None:
            raise InputError("engine 'certificate' does not take a start subset")
        if not a.is_complete:
            raise InputError("engine 'certificate' needs a complete automaton")
        res = certificate.decide_ll_path(a, rel, variant)
    else:
        res = powerset.decide(a, kind, variant, rel, start=inst.subset, budget=args.budget)

    if res.verdict is powerset.Verdict.POSITIVE:
        print(f"YES {_format_word(a, res.witness)}".rstrip())
        return 0
    if res.verdict is powerset.Verdict.NEGATIVE:
        print("NO")
        return 1
    print("INCONCLUSIVE")
    return 2


def _cmd_check(args) -> int:
    inst = _read_instance(args.file)
    _require_order(inst)
    a = inst.automaton
    word = _parse_word(a, args.word)
    base = inst.subset
    try:
        ok, bad = relation_satisfied(a, inst.kind, inst.variant, word, inst.relation, base=base)
    except PartialityError as exc:
        print(f"UNDEFINED at position {exc.position} on state {exc.state}")
        return 1
    if not ok:
        print(f"VIOLATED ({bad[0]}, {bad[1]})")
        return 1
    run = run_set(a, base if base is not None else a.states, word)
    if not run.complete:
        print(f"UNDEFINED at position {run.failed_position} on state {run.failed_state}")
        return 1
    if len(run.final) != 1:
        final = " ".join(sorted(run.final, key=a.state_index.__getitem__))
        print(f"NOT-SYNCHRONIZED; final set {{{final}}}")
        return 1
    print(f"SATISFIED; synchronized to {next(iter(run.final))}")
    return 0


def _cmd_orders(args) -> int:
    inst = _read_instance(args.file)
    _require_order(inst)
    a = inst.automaton
    word = _parse_word(a, args.word)
    rel = induced_order(a, inst.kind, inst.variant, word, base=inst.subset)
    for p, q in canonical_relation(a, rel):
        print(f"{p} {q}")
    return 0


def _cmd_careful(args) -> int:
    inst = _read_instance(args.file)
    res = total_order.careful_sync_pwaa(inst.automaton)
    if res.positive:
        print(f"YES {_format_word(inst.automaton, res.witness)}".rstrip())
        return 0
    print("NO")
    return 1


def _cmd_oracle(args) -> int:
    inst = _read_instance(args.file)
    _require_order(inst)
    res = oracle.enumerate_decide(inst.automaton, inst.kind, inst.variant,
                                  inst.relation, start=inst.subset, max_len=args.max_len)
    if res.positive:
        print(f"YES {_format_word(inst.automaton, res.witness)}".rstrip())
        return 0
    print(f"NO-UP-TO-BOUND {args.max_len}")
    return 1


_REDUCTIONS = ("careful_to_leq_sets", "careful_to_ll_sets", "careful_to_lf_paths0",
               "careful_to_lf_paths1", "vc_to_leq_paths0", "subsetwaa_to_total1")


def _cmd_reduce(args) -> int:
    name = args.name
    if name == "vc_to_leq_paths0":
        with open(args.file, encoding="utf-8") as fh:
            graph = instances.parse_graph(fh.read())
        if args.k is None:
            raise InputError("vc_to_leq_paths0 needs --k")
        out = reductions.vc_to_leq_paths0(graph.edges, args.k, vertices=graph.vertices)
    else:
        inst = _read_instance(args.file)
        if name == "careful_to_leq_sets":
            out = reductions.careful_to_leq_sets(inst.automaton)
        elif name == "careful_to_ll_sets":
            out = reductions.careful_to_ll_sets(inst.automaton)
        elif name == "careful_to_lf_paths0":
            out = reductions.careful_to_lf_paths(inst.automaton, Variant.FROM0)
        elif name == "careful_to_lf_paths1":
            out = reductions.careful_to_lf_paths(inst.automaton, Variant.FROM1)
        else:
            if inst.subset is None:
                raise InputError("subsetwaa_to_total1 needs a 'subset' line in the source file")
            out = reductions.subsetwaa_to_total1(inst.automaton, inst.subset)
    produced = instances.Instance(automaton=out.automaton, kind=out.kind,
                                  variant=out.variant, relation=out.relation,
                                  subset=out.subset)
    text = instances.emit_instance(produced, comments=[f"reduction {name}", out.note])
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {args.output}: {out.automaton.n} states, {out.automaton.k} letters, "
          f"{len(out.relation)} pairs, order {out.kind.value} {out.variant.value}")
    return 0


def _cmd_gen(args) -> int:
    try:
        kind = OrderKind(args.kind)
        variant = Variant(args.variant)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    a = generate.random_complete_automaton(args.seed, args.states, args.letters)
    rel = generate.random_relation(args.seed + 1, a, args.pairs)
    inst = instances.Instance(automaton=a, kind=kind, variant=variant, relation=rel)
    text = instances.emit_instance(
        inst, comments=[f"generated: states={args.states} letters={args.letters} "
                        f"pairs={args.pairs} kind={kind.value} variant={variant.value} seed={args.seed}"])
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {args.output}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="ordersync",
                     description="decide synchronization under state-order constraints")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide an instance file")
    p.add_argument("file")
    p.add_argument("--engine", choices=("auto", "powerset", "fast", "greedy", "certificate"),
                   default="auto")
    p.add_argument("--budget", type=int, default=powerset.DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("check", help="verify one word against an instance")
    p.add_argument("file")
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("orders", help="print the relation a word induces")
    p.add_argument("file")
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_orders)

    p = sub.add_parser("careful", help="carefully synchronize a partial weakly acyclic automaton")
    p.add_argument("file")
    p.set_defaults(func=_cmd_careful)

    p = sub.add_parser("oracle", help="bounded brute-force enumeration")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("reduce", help="build an instance from a source problem")
    p.add_argument("name", choices=_REDUCTIONS)
    p.add_argument("file")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("--states", type=int, required=True)
    p.add_argument("--letters", type=int, required=True)
    p.add_argument("--pairs", type=int, required=True)
    p.add_argument("--kind", required=True)
    p.add_argument("--variant", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EX_USAGE
    try:
        return args.func(args)
    except (ParseError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATA
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATA


if __name__ == "__main__":
    raise SystemExit(main())
