"""Knowledge-base data model, validation, grounding, and printing.

A KnowledgeBase holds declared constants and predicate signatures, ground
facts, universal and defeasible generalisations, default rules, belief-laden
formulas, and two flags.  All values are immutable after construction and
are normalised (sorted, deduplicated) so that structurally equal KBs compare
equal.

Grounding instantiates every schema once per constant (once per constant
tuple for multi-variable schemas) and folds equalities: a ground equality
between identical constants is true, and under the unique-names flag one
between distinct constants is false.  The unique-names flag additionally
expands into explicit disequality facts, matching the convention of writing
``a != b`` into the knowledge base.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from .errors import KbValidationError
from .syntax import (
    EQ,
    TRUE,
    Atom,
    Formula,
    Implies,
    Not,
    atoms_of,
    const,
    equality,
    format_formula,
    free_vars,
    is_objective,
    simplify,
    substitute,
)

UNIVERSAL = "all"
DEFEASIBLE = "def"


@dataclass(frozen=True, order=True)
class PredicateDecl:
    name: str
    arity: int
    abnormality: bool = False


@dataclass(frozen=True)
class Generalisation:
    id: str
    mode: str  # UNIVERSAL | DEFEASIBLE
    antecedent: Formula
    consequent: Formula
    annotation: str | None = None  # inert metadata, no semantics

    @property
    def variable(self) -> str:
        (v,) = free_vars(self.antecedent) & free_vars(self.consequent)
        return v


@dataclass(frozen=True)
class DefaultRule:
    id: str
    prerequisite: Formula
    justification: Formula
    conclusion: Formula


@dataclass(frozen=True)
class AelFormula:
    id: str
    formula: Formula


@dataclass(frozen=True)
class KnowledgeBase:
    constants: tuple[str, ...] = ()
    predicates: tuple[PredicateDecl, ...] = ()
    facts: tuple[Formula, ...] = ()
    generalisations: tuple[Generalisation, ...] = ()
    defaults: tuple[DefaultRule, ...] = ()
    ael_formulas: tuple[AelFormula, ...] = ()
    unique_names: bool = False
    domain_closure: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "constants", tuple(sorted(set(self.constants))))
        preds = sorted(set(self.predicates))
        names = [p.name for p in preds]
        if len(set(names)) != len(names):
            raise KbValidationError("conflicting predicate declarations")
        object.__setattr__(self, "predicates", tuple(preds))
        facts = list(self.facts)
        if self.unique_names:
            for a, b in itertools.combinations(self.constants, 2):
                facts.append(Not(equality(const(a), const(b))))
        facts = _dedup_sorted(facts)
        object.__setattr__(self, "facts", tuple(facts))
        object.__setattr__(
            self, "generalisations", tuple(sorted(set(self.generalisations), key=lambda g: g.id))
        )
        object.__setattr__(self, "defaults", tuple(sorted(set(self.defaults), key=lambda d: d.id)))
        object.__setattr__(
            self, "ael_formulas", tuple(sorted(set(self.ael_formulas), key=lambda a: a.id))
        )
        self._validate()

    def _validate(self) -> None:
        sig = {p.name: p for p in self.predicates}
        consts = set(self.constants)
        ids: list[str] = []

        def check_formula(f: Formula, where: str, schema: bool) -> None:
            for atom in atoms_of(f):
                if atom.predicate == EQ:
                    pass
                elif atom.predicate not in sig:
                    raise KbValidationError(f"undeclared predicate {atom.predicate!r} in {where}")
                else:
                    decl = sig[atom.predicate]
                    if decl.arity != len(atom.args):
                        raise KbValidationError(f"arity mismatch for {atom.predicate!r} in {where}")
                    if decl.abnormality != atom.abnormality:
                        raise KbValidationError(
                            f"abnormality marker of {atom.predicate!r} disagrees with its declaration in {where}"
                        )
                for t in atom.args:
                    if t.kind == "const" and t.name not in consts:
                        raise KbValidationError(f"undeclared constant {t.name!r} in {where}")
                    if t.kind == "var" and not schema:
                        raise KbValidationError(f"{where} must be ground (variable {t.name!r})")

        for f in self.facts:
            check_formula(f, "fact", schema=False)
            if not is_objective(f):
                raise KbValidationError("facts must be objective; use an ael statement for beliefs")
        for g in self.generalisations:
            ids.append(g.id)
            if g.mode not in (UNIVERSAL, DEFEASIBLE):
                raise KbValidationError(f"bad generalisation mode {g.mode!r}")
            check_formula(g.antecedent, f"generalisation {g.id!r}", schema=True)
            check_formula(g.consequent, f"generalisation {g.id!r}", schema=True)
            if not (is_objective(g.antecedent) and is_objective(g.consequent)):
                raise KbValidationError(f"generalisation {g.id!r} must be objective")
            shared = free_vars(g.antecedent) & free_vars(g.consequent)
            total = free_vars(g.antecedent) | free_vars(g.consequent)
            if len(shared) != 1 or len(total) != 1:
                raise KbValidationError(
                    f"generalisation {g.id!r} must use exactly one shared variable"
                )
        for d in self.defaults:
            ids.append(d.id)
            for part, f in (("prerequisite", d.prerequisite), ("justification", d.justification), ("conclusion", d.conclusion)):
                check_formula(f, f"default {d.id!r} {part}", schema=True)
                if not is_objective(f):
                    raise KbValidationError(f"default {d.id!r} must be objective")
            if (free_vars(d.justification) | free_vars(d.conclusion)) - free_vars(d.prerequisite):
                raise KbValidationError(f"variable escapes the prerequisite of default {d.id!r}")
        for a in self.ael_formulas:
            ids.append(a.id)
            check_formula(a.formula, f"ael formula {a.id!r}", schema=True)
            if is_objective(a.formula):
                raise KbValidationError(f"ael formula {a.id!r} must contain a belief operator")
        if len(set(ids)) != len(ids):
            raise KbValidationError("duplicate statement ids")
        has_schema = bool(self.generalisations or self.defaults or self.ael_formulas)
        if has_schema and not self.constants:
            raise KbValidationError("a KB with schemas must declare at least one constant")

    def predicate(self, name: str) -> PredicateDecl | None:
        for p in self.predicates:
            if p.name == name:
                return p
        return None

    def generalisation(self, gen_id: str) -> Generalisation | None:
        for g in self.generalisations:
            if g.id == gen_id:
                return g
        return None


@dataclass(frozen=True)
class GroundDefault:
    id: str
    prerequisite: Formula
    justification: Formula
    conclusion: Formula


@dataclass(frozen=True)
class GroundProgram:
    """The grounding of a KB over its declared constants."""

    atoms: tuple[Atom, ...]
    formulas: tuple[Formula, ...]  # objective: facts plus universal-generalisation instances
    belief_formulas: tuple[tuple[str, Formula], ...]
    defaults: tuple[GroundDefault, ...]


def atom_key(atom: Atom) -> tuple[str, tuple[str, ...]]:
    return (atom.predicate, tuple(t.name for t in atom.args))


def instantiate(schema: Formula, constants: tuple[str, ...], unique_names: bool) -> list[Formula]:
    """All instances of a schema, one per constant tuple, simplified."""
    vs = sorted(free_vars(schema))
    if not vs:
        return [simplify(schema, unique_names)]
    out = []
    for combo in itertools.product(constants, repeat=len(vs)):
        binding = {v: const(c) for v, c in zip(vs, combo)}
        out.append(simplify(substitute(schema, binding), unique_names))
    return out


def ground(kb: KnowledgeBase) -> GroundProgram:
    """Instantiate every schema over the declared constants.

    Instances that simplify to TRUE carry no information and are dropped;
    FALSE is kept (it records inconsistency).  Defeasible generalisations
    have no classical content and contribute nothing here; translate them
    into a target formalism first (see the analysis module).
    """
    un = kb.unique_names
    formulas = [simplify(f, un) for f in kb.facts]
    for g in kb.generalisations:
        if g.mode != UNIVERSAL:
            continue
        formulas.extend(instantiate(Implies(g.antecedent, g.consequent), kb.constants, un))
    formulas = [f for f in _dedup_sorted(formulas) if f != TRUE]

    beliefs: list[tuple[str, Formula]] = []
    for a in kb.ael_formulas:
        for i, inst in enumerate(instantiate(a.formula, kb.constants, un)):
            if inst == TRUE:
                continue
            beliefs.append((_instance_id(a.id, a.formula, kb.constants, i), inst))

    defaults: list[GroundDefault] = []
    for d in kb.defaults:
        vs = sorted(free_vars(d.prerequisite))
        combos = [()] if not vs else list(itertools.product(kb.constants, repeat=len(vs)))
        for combo in combos:
            binding = {v: const(c) for v, c in zip(vs, combo)}
            gid = d.id if not combo else f"{d.id}[{','.join(combo)}]"
            defaults.append(
                GroundDefault(
                    gid,
                    simplify(substitute(d.prerequisite, binding), un),
                    simplify(substitute(d.justification, binding), un),
                    simplify(substitute(d.conclusion, binding), un),
                )
            )

    universe: set[Atom] = set(declared_atoms(kb))
    for f in formulas:
        universe.update(atoms_of(f))
    for _, f in beliefs:
        universe.update(atoms_of(f))
    for d in defaults:
        for f in (d.prerequisite, d.justification, d.conclusion):
            universe.update(atoms_of(f))

    return GroundProgram(
        atoms=tuple(sorted(universe, key=atom_key)),
        formulas=tuple(formulas),
        belief_formulas=tuple(beliefs),
        defaults=tuple(defaults),
    )


def declared_atoms(kb: KnowledgeBase) -> list[Atom]:
    """The ground Herbrand atoms over declared predicates and constants."""
    out = []
    for p in kb.predicates:
        for combo in itertools.product(kb.constants, repeat=p.arity):
            out.append(Atom(p.name, tuple(const(c) for c in combo), p.abnormality))
    return sorted(out, key=atom_key)


def _instance_id(base: str, schema: Formula, constants: tuple[str, ...], index: int) -> str:
    vs = sorted(free_vars(schema))
    if not vs:
        return base
    combo = list(itertools.product(constants, repeat=len(vs)))[index]
    return f"{base}[{','.join(combo)}]"


def _dedup_sorted(formulas: list[Formula]) -> list[Formula]:
    seen = set()
    out = []
    for f in sorted(formulas, key=format_formula):
        if f not in seen:
            seen.add(f)
            out.append(f)
    return out


def print_kb(kb: KnowledgeBase) -> str:
    """Render a KB back to KB-language source.  parse_kb(print_kb(kb)) == kb."""
    lines = []
    if kb.constants:
        lines.append("const " + ", ".join(kb.constants) + ".")
    plain = [p for p in kb.predicates if not p.abnormality]
    abnormal = [p for p in kb.predicates if p.abnormality]
    if plain:
        lines.append("pred " + ", ".join(f"{p.name}/{p.arity}" for p in plain) + ".")
    if abnormal:
        lines.append("abpred " + ", ".join(f"{p.name}/{p.arity}" for p in abnormal) + ".")
    if kb.unique_names:
        lines.append("flag unique-names.")
    if kb.domain_closure:
        lines.append("flag domain-closure.")
    for f in kb.facts:
        lines.append(f"fact {format_formula(f)}.")
    for g in kb.generalisations:
        tag = f" [{g.annotation}]" if g.annotation else ""
        if g.mode == UNIVERSAL:
            body = format_formula(Implies(g.antecedent, g.consequent))
            lines.append(f"all {g.id}: {body}{tag}.")
        else:
            lines.append(
                f"def {g.id}: {format_formula(g.antecedent)} ~> {format_formula(g.consequent)}{tag}."
            )
    for d in kb.defaults:
        lines.append(
            f"default {d.id}: {format_formula(d.prerequisite)} : "
            f"{format_formula(d.justification)} / {format_formula(d.conclusion)}."
        )
    for a in kb.ael_formulas:
        lines.append(f"ael {a.id}: {format_formula(a.formula)}.")
    return "\n".join(lines) + "\n"


def with_flags(kb: KnowledgeBase, *, unique_names: bool | None = None, domain_closure: bool | None = None) -> KnowledgeBase:
    return replace(
        kb,
        unique_names=kb.unique_names if unique_names is None else unique_names,
        domain_closure=kb.domain_closure if domain_closure is None else domain_closure,
    )
