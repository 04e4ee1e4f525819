"""Defeasible-generalisation analysis across the four semantics.

translate() rewrites each defeasible generalisation P(x) ~> Q(x) into the
target formalism:

  circumscription   all g: P(x) & -Ab_g(x) -> Q(x), one fresh abnormality
                    predicate per generalisation
  default           default g: P(x) : Q(x) / Q(x)
  autoepistemic     ael g: P(x) & -B(-Q(x)) -> Q(x)
  cwa / cwa-dc      dropped; the closed world cannot state defeasible
                    knowledge at the object level, and reports mark the
                    corresponding cells n/a

exceptions() extracts, per generalisation, the constants that every
preferred structure of the translated KB excludes from the generalisation;
complete_generalisation() turns the defeasible generalisation plus its
exception set into an equivalent universal one and certifies the
equivalence literal by literal.  compare() evaluates a query list under all
five semantics and attaches the static four-axis classification of each
formalism.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import autoepistemic as ael
from . import circumscription as circ
from . import cwa
from . import defaults as dl
from .classical import GroundTheory, consistent, entails
from .errors import AnalysisError, CompletionRefused
from .kb import (
    DEFEASIBLE,
    UNIVERSAL,
    AelFormula,
    DefaultRule,
    Generalisation,
    KnowledgeBase,
    PredicateDecl,
    declared_atoms,
    ground,
    with_flags,
)
from .syntax import (
    And,
    Atom,
    Belief,
    Formula,
    Implies,
    Not,
    atoms_of,
    equality,
    format_formula,
    is_objective,
    simplify,
    substitute,
)
from .syntax import const as mk_const
from .syntax import var as mk_var

CWA = "cwa"
CWA_DC = "cwa-dc"
CIRCUMSCRIPTION = "circumscription"
DEFAULT = "default"
AUTOEPISTEMIC = "autoepistemic"
SEMANTICS = (CWA, CWA_DC, CIRCUMSCRIPTION, DEFAULT, AUTOEPISTEMIC)

AXIS_NAMES = ("mechanism", "level", "exceptions", "generalisations")

# the four-axis classification of each formalism; cwa-dc shares the cwa row
TABLE_AXES: dict[str, dict[str, str]] = {
    CWA: {
        "mechanism": "syntactic",
        "level": "epistemic",
        "exceptions": "/",
        "generalisations": "/",
    },
    CWA_DC: {
        "mechanism": "syntactic",
        "level": "epistemic",
        "exceptions": "/",
        "generalisations": "/",
    },
    CIRCUMSCRIPTION: {
        "mechanism": "semantic",
        "level": "ontological",
        "exceptions": "explicit",
        "generalisations": "logical",
    },
    DEFAULT: {
        "mechanism": "syntactic",
        "level": "epistemic",
        "exceptions": "implicit",
        "generalisations": "meta-logical",
    },
    AUTOEPISTEMIC: {
        "mechanism": "syntactic",
        "level": "epistemic",
        "exceptions": "implicit",
        "generalisations": "logical",
    },
}


def _check_semantics(semantics: str) -> None:
    if semantics not in SEMANTICS:
        raise AnalysisError(f"unknown semantics {semantics!r}; expected one of {SEMANTICS}")


def ab_predicate_name(kb: KnowledgeBase, gen_id: str) -> str:
    """The fresh abnormality predicate translate() mints for a generalisation."""
    taken = {p.name for p in kb.predicates}
    for g in kb.generalisations:
        if g.mode == DEFEASIBLE and g.id != gen_id:
            taken.add(f"Ab_{g.id}")
    name = f"Ab_{gen_id}"
    n = 1
    while name in taken:
        name = f"Ab_{gen_id}_{n}"
        n += 1
    return name


def translate(kb: KnowledgeBase, target: str) -> KnowledgeBase:
    """Rewrite every defeasible generalisation into the target formalism."""
    _check_semantics(target)
    defeasible = [g for g in kb.generalisations if g.mode == DEFEASIBLE]
    if not defeasible:
        return kb
    kept = [g for g in kb.generalisations if g.mode == UNIVERSAL]
    preds = list(kb.predicates)
    defaults = list(kb.defaults)
    aels = list(kb.ael_formulas)

    if target in (CWA, CWA_DC):
        return replace(kb, generalisations=tuple(kept))

    for g in defeasible:
        v = mk_var(g.variable)
        if target == CIRCUMSCRIPTION:
            ab_name = ab_predicate_name(kb, g.id)
            preds.append(PredicateDecl(ab_name, 1, abnormality=True))
            guarded = And(g.antecedent, Not(Atom(ab_name, (v,), abnormality=True)))
            kept.append(Generalisation(g.id, UNIVERSAL, guarded, g.consequent, g.annotation))
        elif target == DEFAULT:
            defaults.append(DefaultRule(g.id, g.antecedent, g.consequent, g.consequent))
        elif target == AUTOEPISTEMIC:
            guard = Not(Belief(simplify(Not(g.consequent))))
            aels.append(AelFormula(g.id, Implies(And(g.antecedent, guard), g.consequent)))
    return replace(
        kb,
        predicates=tuple(preds),
        generalisations=tuple(kept),
        defaults=tuple(defaults),
        ael_formulas=tuple(aels),
    )


@dataclass
class ExceptionSet:
    generalisation_id: str
    semantics: str
    members: tuple[str, ...]
    trace: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)


def _require_defeasible(kb: KnowledgeBase, gen_id: str) -> Generalisation:
    gen = kb.generalisation(gen_id)
    if gen is None:
        raise AnalysisError(f"unknown generalisation {gen_id!r}")
    if gen.mode != DEFEASIBLE:
        raise AnalysisError(
            f"generalisation {gen_id!r} is universal; exceptions apply to defeasible ones"
        )
    return gen


def exceptions(kb: KnowledgeBase, gen_id: str, semantics: str) -> ExceptionSet:
    """The constants every preferred structure excludes from the generalisation.

    A constant is a member when its antecedent instance holds skeptically
    and the semantics-specific exclusion evidence holds in every preferred
    structure: the abnormality atom under circumscription, a blocked
    justification under default logic, a believed negated consequent under
    autoepistemic logic.  Constants excluded in only some structures are
    noted, not included.
    """
    _check_semantics(semantics)
    gen = _require_defeasible(kb, gen_id)
    if semantics in (CWA, CWA_DC):
        raise AnalysisError("the closed world has no notion of exception")
    tkb = translate(kb, semantics)
    un = tkb.unique_names
    v = gen.variable
    members: list[str] = []
    trace: dict[str, str] = {}
    notes: list[str] = []

    def instance(schema: Formula, c: str) -> Formula:
        return simplify(substitute(schema, {v: mk_const(c)}), un)

    if semantics == CIRCUMSCRIPTION:
        ab_name = ab_predicate_name(kb, gen_id)
        gp = ground(tkb)
        mm = circ.minimal_models(GroundTheory(gp.atoms, gp.formulas))
        if not mm:
            notes.append("theory unsatisfiable: no minimal models, exception set empty")
        for c in kb.constants:
            if not mm:
                continue
            ab_atom = Atom(ab_name, (mk_const(c),), abnormality=True)
            ant = instance(gen.antecedent, c)
            abnormal_in = sum(1 for m in mm if m.satisfies(ab_atom))
            ant_holds = all(m.satisfies(ant) for m in mm)
            if ant_holds and abnormal_in == len(mm):
                members.append(c)
                trace[c] = f"{ab_name}({c}) true in all {len(mm)} minimal models"
            elif abnormal_in:
                notes.append(
                    f"{c}: {ab_name}({c}) true in {abnormal_in} of {len(mm)} minimal models (credulous only)"
                )
    elif semantics == DEFAULT:
        dt = dl.DefaultTheory.from_kb(tkb)
        exts = dl.extensions(dt)
        if not exts:
            notes.append("no extensions: exception set empty")
        elif not consistent(dt.facts):
            notes.append("facts are inconsistent: every justification is trivially blocked")
        for c in kb.constants:
            if not exts:
                continue
            ant = instance(gen.antecedent, c)
            cons = instance(gen.consequent, c)
            blocked_in = sum(
                1
                for w in exts
                if w.member(ant) and not consistent(w.kernel.extended(cons))
            )
            if blocked_in == len(exts):
                members.append(c)
                trace[c] = (
                    f"prerequisite holds and justification {format_formula(cons)} "
                    f"is blocked in every extension"
                )
            elif blocked_in:
                notes.append(
                    f"{c}: justification blocked in {blocked_in} of {len(exts)} extensions (credulous only)"
                )
    elif semantics == AUTOEPISTEMIC:
        exps = ael.stable_expansions(tkb)
        if not exps:
            notes.append("no stable expansions: exception set empty")
        elif any(w.degenerate for w in exps):
            notes.append("degenerate expansion present: every belief is forced")
        for c in kb.constants:
            if not exps:
                continue
            ant = instance(gen.antecedent, c)
            negated = simplify(Not(instance(gen.consequent, c)), un)
            believed_in = sum(1 for w in exps if w.believes(negated))
            ant_holds = all(w.member(ant) for w in exps)
            if ant_holds and believed_in == len(exps):
                members.append(c)
                trace[c] = f"B({format_formula(negated)}) holds in every expansion"
            elif believed_in:
                notes.append(
                    f"{c}: B({format_formula(negated)}) holds in {believed_in} of {len(exps)} expansions (credulous only)"
                )

    return ExceptionSet(gen_id, semantics, tuple(sorted(members)), trace, notes)


def candidate_exception_sets(kb: KnowledgeBase, gen_id: str, semantics: str) -> list[tuple[str, ...]]:
    """Per preferred structure, the exception set it would induce."""
    _check_semantics(semantics)
    gen = _require_defeasible(kb, gen_id)
    tkb = translate(kb, semantics)
    un = tkb.unique_names
    v = gen.variable

    def instance(schema: Formula, c: str) -> Formula:
        return simplify(substitute(schema, {v: mk_const(c)}), un)

    sets: list[tuple[str, ...]] = []
    if semantics == CIRCUMSCRIPTION:
        ab_name = ab_predicate_name(kb, gen_id)
        gp = ground(tkb)
        for m in circ.minimal_models(GroundTheory(gp.atoms, gp.formulas)):
            ext = tuple(
                sorted(
                    c
                    for c in kb.constants
                    if m.satisfies(Atom(ab_name, (mk_const(c),), abnormality=True))
                )
            )
            if ext not in sets:
                sets.append(ext)
    elif semantics == DEFAULT:
        dt = dl.DefaultTheory.from_kb(tkb)
        for w in dl.extensions(dt):
            ext = tuple(
                sorted(
                    c
                    for c in kb.constants
                    if w.member(instance(gen.antecedent, c))
                    and not consistent(w.kernel.extended(instance(gen.consequent, c)))
                )
            )
            if ext not in sets:
                sets.append(ext)
    elif semantics == AUTOEPISTEMIC:
        for w in ael.stable_expansions(tkb):
            ext = tuple(
                sorted(
                    c
                    for c in kb.constants
                    if w.believes(simplify(Not(instance(gen.consequent, c)), un))
                )
            )
            if ext not in sets:
                sets.append(ext)
    return sorted(sets)


def complete_generalisation(
    kb: KnowledgeBase, gen_id: str, semantics: str
) -> tuple[Generalisation, ExceptionSet]:
    """Rewrite a defeasible generalisation as a universal one minus its exceptions.

    Requires a unique preferred structure (one minimal abnormality
    extension, one extension, one expansion); otherwise CompletionRefused
    lists the alternatives.  On success the equivalence is certified: for
    every ground literal over the original vocabulary, entailment under the
    defeasible semantics equals classical entailment from the KB with the
    generalisation replaced by the completed one.
    """
    _check_semantics(semantics)
    gen = _require_defeasible(kb, gen_id)
    if semantics in (CWA, CWA_DC):
        raise AnalysisError("the closed world has no notion of exception")

    candidates = candidate_exception_sets(kb, gen_id, semantics)
    if len(candidates) != 1:
        raise CompletionRefused(
            f"{len(candidates)} preferred structures disagree on the exceptions of {gen_id!r}",
            candidates,
        )
    exc = exceptions(kb, gen_id, semantics)

    v = mk_var(gen.variable)
    antecedent = gen.antecedent
    for e in exc.members:
        antecedent = And(antecedent, Not(equality(v, mk_const(e))))
    completed = Generalisation(gen.id, UNIVERSAL, antecedent, gen.consequent, gen.annotation)

    completed_kb = replace(
        kb,
        generalisations=tuple(completed if g.id == gen_id else g for g in kb.generalisations),
    )
    _certify(kb, completed_kb, gen_id, semantics)
    return completed, exc


def _certify(kb: KnowledgeBase, completed_kb: KnowledgeBase, gen_id: str, semantics: str) -> None:
    """Exhaustive per-literal equivalence check over the original vocabulary."""
    tkb = translate(kb, semantics)
    gp = ground(completed_kb)
    classical_side = GroundTheory(gp.atoms, gp.formulas)
    judge = _semantic_judge(tkb, semantics)
    for atom in declared_atoms(kb):
        for query in (atom, Not(atom)):
            left = judge(query)
            right = entails(classical_side, query)
            if left != right:
                raise AnalysisError(
                    f"completion certificate failed on {format_formula(query)}: "
                    f"{semantics} says {left}, completed KB says {right}"
                )


def _semantic_judge(tkb: KnowledgeBase, semantics: str):
    if semantics == CIRCUMSCRIPTION:
        gp = ground(tkb)
        theory = GroundTheory(gp.atoms, gp.formulas)
        return lambda q: circ.theory_circ_entails(theory, q)
    if semantics == DEFAULT:
        exts = dl.extensions(dl.DefaultTheory.from_kb(tkb))
        return lambda q: all(w.member(q) for w in exts)
    if semantics == AUTOEPISTEMIC:
        exps = ael.stable_expansions(tkb)
        return lambda q: all(w.member(q) for w in exps)
    raise AnalysisError(f"no preferred-structure judge for {semantics!r}")


NO_CONFLICT = "no-conflict"
COUNTER_EXAMPLE = "counter-example"
ERROR = "error"
EXCEPTION = "exception"


def classify_discrepancy(
    gen: Generalisation,
    instance_fact: Formula,
    gen_trusted: bool = True,
    fact_trusted: bool = True,
) -> str:
    """Classify the tension between a universal generalisation and an instance.

    No conflict when the generalisation's instances and the fact are
    jointly consistent.  Otherwise the trust flags decide: a trusted fact
    against an untrusted generalisation is a counter-example, a trusted
    generalisation against an untrusted fact marks the instance as an
    error, and when both are held true the individual is an exception (and
    the generalisation is a candidate for demotion to defeasible mode).
    """
    if gen.mode != UNIVERSAL:
        raise AnalysisError("discrepancies are classified against a universal generalisation")
    consts = sorted({t.name for a in atoms_of(instance_fact) for t in a.args if t.kind == "const"})
    schema = Implies(gen.antecedent, gen.consequent)
    instances = [simplify(substitute(schema, {gen.variable: mk_const(c)})) for c in consts]
    theory = GroundTheory((), tuple(instances) + (simplify(instance_fact),))
    if consistent(theory):
        return NO_CONFLICT
    if gen_trusted and fact_trusted:
        return EXCEPTION
    if fact_trusted:
        return COUNTER_EXAMPLE
    if gen_trusted:
        return ERROR
    raise ValueError("cannot classify: neither the generalisation nor the instance is trusted")


@dataclass
class ComparisonReport:
    axes: dict[str, dict[str, str]]
    queries: tuple[str, ...]
    matrix: dict[str, dict[str, str]]  # query text -> semantics -> yes | no | n/a
    exceptions: dict[str, dict[str, tuple[str, ...]]]
    warnings: list[str]


def compare(kb: KnowledgeBase, queries: list[Formula]) -> ComparisonReport:
    """Evaluate the queries under all five semantics and assemble the report.

    Default and autoepistemic cells use skeptical mode.  Closed-world cells
    are n/a when the KB carries defeasible generalisations (they cannot be
    represented there); belief-laden queries are n/a outside autoepistemic
    logic.  Inconsistent augmentations, zero or multiple preferred
    structures, and degenerate expansions surface as warnings.
    """
    warnings: list[str] = []
    has_defeasible = any(g.mode == DEFEASIBLE for g in kb.generalisations)
    query_texts = tuple(format_formula(q) for q in queries)
    matrix: dict[str, dict[str, str]] = {t: {} for t in query_texts}

    def record(sem: str, text: str, verdict: str) -> None:
        matrix[text][sem] = verdict

    # closed world, with and without domain closure
    for sem in (CWA, CWA_DC):
        if has_defeasible:
            warnings.append(
                f"{sem}: defeasible generalisations cannot be represented; cells are n/a"
            )
            for t in query_texts:
                record(sem, t, "n/a")
            continue
        base_kb = translate(kb, sem)
        if sem == CWA_DC:
            base_kb = with_flags(base_kb, domain_closure=True)
        aug = cwa.cwa_augment(base_kb)
        if not aug.consistent:
            warnings.append(
                f"{sem}: closed-world augmentation is inconsistent; every query is entailed"
            )
        theory = aug.theory()
        for q, t in zip(queries, query_texts):
            if not is_objective(q):
                record(sem, t, "n/a")
                continue
            verdict = entails(theory, cwa.prepare_query(base_kb, q))
            record(sem, t, "yes" if verdict else "no")

    # circumscription
    tkb = translate(kb, CIRCUMSCRIPTION)
    gp = ground(tkb)
    theory = GroundTheory(gp.atoms, gp.formulas)
    for q, t in zip(queries, query_texts):
        if not is_objective(q):
            record(CIRCUMSCRIPTION, t, "n/a")
            continue
        verdict = circ.theory_circ_entails(theory, simplify(q, tkb.unique_names))
        record(CIRCUMSCRIPTION, t, "yes" if verdict else "no")

    # default logic, skeptical
    tkb = translate(kb, DEFAULT)
    exts = dl.extensions(dl.DefaultTheory.from_kb(tkb))
    if len(exts) == 0:
        warnings.append("default: zero extensions; skeptical answers are vacuous")
    elif len(exts) > 1:
        warnings.append(f"default: {len(exts)} extensions; answers are skeptical")
    for q, t in zip(queries, query_texts):
        if not is_objective(q):
            record(DEFAULT, t, "n/a")
            continue
        qq = simplify(q, tkb.unique_names)
        record(DEFAULT, t, "yes" if all(w.member(qq) for w in exts) else "no")

    # autoepistemic logic, skeptical; belief queries are legal here
    tkb = translate(kb, AUTOEPISTEMIC)
    exps = ael.stable_expansions(tkb)
    if len(exps) == 0:
        warnings.append("autoepistemic: zero stable expansions; skeptical answers are vacuous")
    elif len(exps) > 1:
        warnings.append(f"autoepistemic: {len(exps)} stable expansions; answers are skeptical")
    if any(w.degenerate for w in exps):
        warnings.append("autoepistemic: degenerate (inconsistent-kernel) expansion present")
    for q, t in zip(queries, query_texts):
        qq = simplify(q, tkb.unique_names)
        record(AUTOEPISTEMIC, t, "yes" if all(w.member(qq) for w in exps) else "no")

    exception_sets: dict[str, dict[str, tuple[str, ...]]] = {}
    for g in kb.generalisations:
        if g.mode != DEFEASIBLE:
            continue
        per_sem: dict[str, tuple[str, ...]] = {}
        for sem in (CIRCUMSCRIPTION, DEFAULT, AUTOEPISTEMIC):
            exc = exceptions(kb, g.id, sem)
            per_sem[sem] = exc.members
            for note in exc.notes:
                warnings.append(f"exceptions[{g.id}, {sem}]: {note}")
        exception_sets[g.id] = per_sem

    return ComparisonReport(
        axes={sem: dict(TABLE_AXES[sem]) for sem in SEMANTICS},
        queries=query_texts,
        matrix=matrix,
        exceptions=exception_sets,
        warnings=warnings,
    )
