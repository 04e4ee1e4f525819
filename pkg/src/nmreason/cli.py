"""Command-line front-end.

Commands: check, compare, exceptions, complete, classify, extensions,
expansions, minimal-models.  Exit codes: 0 success, 1 failed --assert,
2 input error, 3 completion refused (non-unique preferred structure).
Output is deterministic for a fixed input and flag set.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis
from . import autoepistemic as ael
from . import circumscription as circ
from . import cwa
from . import defaults as dl
from .classical import GroundTheory, entails
from .errors import CompletionRefused, NmrError
from .kb import KnowledgeBase, ground, with_flags
from .parser import parse_formula, parse_kb
from .report import FORMAT_VERSION, render_figure, render_text, report_to_dict
from .syntax import EQ, Formula, Implies, Not, format_formula, simplify

SEMANTICS_ALIASES = {"circ": analysis.CIRCUMSCRIPTION, "ael": analysis.AUTOEPISTEMIC}
SEMANTICS_CHOICES = list(analysis.SEMANTICS) + sorted(SEMANTICS_ALIASES)

EXIT_OK = 0
EXIT_ASSERT = 1
EXIT_INPUT = 2
EXIT_REFUSED = 3


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CompletionRefused as exc:
        print(f"refused: {exc}", file=sys.stderr)
        for alt in exc.alternatives:
            print("alternative exception set: {" + ", ".join(alt) + "}")
        return EXIT_REFUSED
    except NmrError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nmreason",
        description="Entailment under closed-world, circumscriptive, default, and autoepistemic semantics, plus exception analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="answer queries under one semantics")
    _common(p)
    p.add_argument("--semantics", required=True, choices=SEMANTICS_CHOICES)
    _query_opts(p)
    p.add_argument("--mode", choices=("skeptical", "credulous"), default="skeptical")
    p.add_argument("--grounded", action="store_true", help="note ungrounded default extensions")
    p.add_argument("--assert", dest="assert_yes", action="store_true", help="exit 1 on any 'no'")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("compare", help="entailment matrix across all semantics plus the axes block")
    _common(p)
    _query_opts(p)
    p.add_argument("--figure", metavar="PATH", help="also render the report to an image file")
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("exceptions", help="exception set of a defeasible generalisation")
    _common(p)
    p.add_argument("--gen", required=True)
    p.add_argument("--semantics", required=True, choices=SEMANTICS_CHOICES)
    p.set_defaults(handler=cmd_exceptions)

    p = sub.add_parser("complete", help="turn a defeasible generalisation into a universal one minus exceptions")
    _common(p)
    p.add_argument("--gen", required=True)
    p.add_argument("--semantics", required=True, choices=SEMANTICS_CHOICES)
    p.set_defaults(handler=cmd_complete)

    p = sub.add_parser("classify", help="classify a generalisation/instance discrepancy")
    _common(p)
    p.add_argument("--gen", required=True)
    p.add_argument("--fact", required=True, help="ground formula describing the instance")
    p.add_argument("--untrusted-gen", action="store_true")
    p.add_argument("--untrusted-fact", action="store_true")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("extensions", help="default-logic extensions of the KB")
    _common(p)
    p.add_argument("--grounded", action="store_true", help="also report groundedness per extension")
    p.set_defaults(handler=cmd_extensions)

    p = sub.add_parser("expansions", help="autoepistemic stable expansions of the KB")
    _common(p)
    p.set_defaults(handler=cmd_expansions)

    p = sub.add_parser("minimal-models", help="circumscriptively minimal models of the KB")
    _common(p)
    p.set_defaults(handler=cmd_minimal_models)

    return parser


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("kb", help="KB-language source file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--verbose", action="store_true")


def _query_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--query", action="append", default=[], help="inline query (repeatable)")
    p.add_argument("--queries", metavar="FILE", help="file with one query per line")


def _load_kb(path: str) -> KnowledgeBase:
    with open(path, encoding="utf-8") as fh:
        return parse_kb(fh.read())


def _load_queries(args, kb: KnowledgeBase, allow_vars: bool = False) -> list[Formula]:
    texts = list(args.query)
    if args.queries:
        with open(args.queries, encoding="utf-8") as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if line:
                    texts.append(line)
    return [parse_formula(t, kb, allow_vars=allow_vars) for t in texts]


def _canonical(semantics: str) -> str:
    return SEMANTICS_ALIASES.get(semantics, semantics)


def _emit_json(payload: dict) -> None:
    payload = {"format-version": FORMAT_VERSION, **payload}
    print(json.dumps(payload, indent=2, sort_keys=False))


def cmd_check(args) -> int:
    kb = _load_kb(args.kb)
    semantics = _canonical(args.semantics)
    queries = _load_queries(args, kb, allow_vars=semantics == analysis.CWA_DC)
    notes: list[str] = []
    tkb = analysis.translate(kb, semantics)
    if tkb is not kb and args.verbose:
        notes.append("defeasible generalisations translated for " + semantics)

    if semantics == analysis.CWA:
        aug = cwa.cwa_augment(tkb)
        if not aug.consistent:
            notes.append("closed-world augmentation is inconsistent; every query is entailed")
        answer = lambda q: entails(aug.theory(), cwa.prepare_query(tkb, q))
    elif semantics == analysis.CWA_DC:
        dckb = with_flags(tkb, domain_closure=True)
        aug = cwa.cwa_augment(dckb)
        if not aug.consistent:
            notes.append("closed-world augmentation is inconsistent; every query is entailed")
        answer = lambda q: entails(aug.theory(), cwa.prepare_query(dckb, q))
    elif semantics == analysis.CIRCUMSCRIPTION:
        gp = ground(tkb)
        theory = GroundTheory(gp.atoms, gp.formulas)
        answer = lambda q: circ.theory_circ_entails(theory, simplify(q, tkb.unique_names))
    elif semantics == analysis.DEFAULT:
        dt = dl.DefaultTheory.from_kb(tkb)
        exts = dl.extensions(dt)
        if not exts:
            notes.append("zero extensions; skeptical answers are vacuous, credulous are false")
        if args.grounded:
            for w in exts:
                if not dl.is_grounded(dt, w):
                    notes.append(
                        "ungrounded extension: {" + ", ".join(w.generating_ids()) + "}"
                    )
        test = all if args.mode == "skeptical" else any
        answer = lambda q: test(w.member(simplify(q, tkb.unique_names)) for w in exts)
    else:
        exps = ael.stable_expansions(tkb)
        if not exps:
            notes.append("zero stable expansions; skeptical answers are vacuous, credulous are false")
        if any(w.degenerate for w in exps):
            notes.append("degenerate (inconsistent-kernel) expansion present")
        test = all if args.mode == "skeptical" else any
        answer = lambda q: test(w.member(simplify(q, tkb.unique_names)) for w in exps)

    results = [(format_formula(q), "yes" if answer(q) else "no") for q in queries]
    for note in notes:
        print(f"note: {note}", file=sys.stderr)
    if args.format == "json":
        _emit_json(
            {
                "command": "check",
                "semantics": semantics,
                "mode": args.mode,
                "results": [{"query": t, "verdict": v} for t, v in results],
                "notes": notes,
            }
        )
    else:
        for text, verdict in results:
            print(verdict if len(results) == 1 else f"{text}\t{verdict}")
    if args.assert_yes and any(v == "no" for _, v in results):
        return EXIT_ASSERT
    return EXIT_OK


def cmd_compare(args) -> int:
    kb = _load_kb(args.kb)
    queries = _load_queries(args, kb)
    report = analysis.compare(kb, queries)
    if args.figure:
        render_figure(report, args.figure)
        if args.verbose:
            print(f"note: figure written to {args.figure}", file=sys.stderr)
    if args.format == "json":
        print(json.dumps(report_to_dict(report), indent=2))
    else:
        print(render_text(report), end="")
    return EXIT_OK


def cmd_exceptions(args) -> int:
    kb = _load_kb(args.kb)
    exc = analysis.exceptions(kb, args.gen, _canonical(args.semantics))
    if args.format == "json":
        _emit_json(
            {
                "command": "exceptions",
                "generalisation": exc.generalisation_id,
                "semantics": exc.semantics,
                "members": list(exc.members),
                "trace": exc.trace,
                "notes": exc.notes,
            }
        )
    else:
        for note in exc.notes:
            print(f"note: {note}", file=sys.stderr)
        for member in exc.members:
            line = member
            if args.verbose and member in exc.trace:
                line += f"\t{exc.trace[member]}"
            print(line)
    return EXIT_OK


def cmd_complete(args) -> int:
    kb = _load_kb(args.kb)
    completed, exc = analysis.complete_generalisation(kb, args.gen, _canonical(args.semantics))
    rendered = f"all {completed.id}: {format_formula(Implies(completed.antecedent, completed.consequent))}."
    if args.format == "json":
        _emit_json(
            {
                "command": "complete",
                "generalisation": completed.id,
                "semantics": exc.semantics,
                "completed": rendered,
                "exceptions": list(exc.members),
            }
        )
    else:
        print(rendered)
        if args.verbose:
            print("exceptions: {" + ", ".join(exc.members) + "}", file=sys.stderr)
    return EXIT_OK


def cmd_classify(args) -> int:
    kb = _load_kb(args.kb)
    gen = kb.generalisation(args.gen)
    if gen is None:
        raise NmrError(f"unknown generalisation {args.gen!r}")
    fact = parse_formula(args.fact, kb)
    try:
        label = analysis.classify_discrepancy(
            gen, fact, gen_trusted=not args.untrusted_gen, fact_trusted=not args.untrusted_fact
        )
    except ValueError as exc:
        raise NmrError(str(exc)) from exc
    if args.format == "json":
        payload = {"command": "classify", "generalisation": gen.id, "classification": label}
        if label == analysis.EXCEPTION:
            payload["advisory"] = f"consider demoting {gen.id!r} to a defeasible generalisation (~>)"
        _emit_json(payload)
    else:
        print(label)
        if label == analysis.EXCEPTION:
            print(
                f"advisory: consider demoting {gen.id!r} to a defeasible generalisation (~>)",
                file=sys.stderr,
            )
    return EXIT_OK


def cmd_extensions(args) -> int:
    kb = _load_kb(args.kb)
    tkb = analysis.translate(kb, analysis.DEFAULT)
    dt = dl.DefaultTheory.from_kb(tkb)
    exts = dl.extensions(dt)
    rows = []
    for w in exts:
        row = {
            "generating": list(w.generating_ids()),
            "kernel-literals": _decided_literals(w.kernel),
        }
        if args.grounded:
            row["grounded"] = dl.is_grounded(dt, w)
        rows.append(row)
    if args.format == "json":
        _emit_json({"command": "extensions", "count": len(rows), "extensions": rows})
    else:
        print(f"{len(rows)} extension(s)")
        for i, row in enumerate(rows, start=1):
            tail = "" if "grounded" not in row else f"  grounded={'yes' if row['grounded'] else 'no'}"
            print(f"extension {i}: generating = {{{', '.join(row['generating'])}}}{tail}")
            print(f"  kernel: {' '.join(row['kernel-literals'])}")
    return EXIT_OK


def cmd_expansions(args) -> int:
    kb = _load_kb(args.kb)
    tkb = analysis.translate(kb, analysis.AUTOEPISTEMIC)
    exps = ael.stable_expansions(tkb)
    rows = []
    for w in exps:
        rows.append(
            {
                "assignment": {str(a): v for a, v in w.assignment},
                "kernel-literals": _decided_literals(w.kernel),
                "degenerate": w.degenerate,
            }
        )
    if args.format == "json":
        _emit_json({"command": "expansions", "count": len(rows), "expansions": rows})
    else:
        print(f"{len(rows)} expansion(s)")
        for i, row in enumerate(rows, start=1):
            assigned = " ".join(f"{k}={'true' if v else 'false'}" for k, v in row["assignment"].items())
            tail = "  [degenerate]" if row["degenerate"] else ""
            print(f"expansion {i}: {assigned or '(no modal atoms)'}{tail}")
            print(f"  kernel: {' '.join(row['kernel-literals'])}")
    return EXIT_OK


def cmd_minimal_models(args) -> int:
    kb = _load_kb(args.kb)
    tkb = analysis.translate(kb, analysis.CIRCUMSCRIPTION)
    gp = ground(tkb)
    mm = circ.minimal_models(GroundTheory(gp.atoms, gp.formulas))
    if args.format == "json":
        _emit_json(
            {
                "command": "minimal-models",
                "count": len(mm),
                "models": [m.literals().split() for m in mm],
            }
        )
    else:
        print(f"{len(mm)} minimal model(s)")
        for i, m in enumerate(mm, start=1):
            print(f"model {i}: {m.literals()}")
    return EXIT_OK


def _decided_literals(kernel: GroundTheory) -> list[str]:
    out = []
    for atom in kernel.atoms:
        if atom.predicate == EQ:
            continue
        if entails(kernel, atom):
            out.append(format_formula(atom))
        elif entails(kernel, Not(atom)):
            out.append("-" + format_formula(atom))
    return out


if __name__ == "__main__":
    sys.exit(main())
