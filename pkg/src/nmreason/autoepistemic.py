"""Stable expansions by exhaustive search over modal-atom assignments.

The belief operator gets its meaning from stable expansions.  The KB's
ground belief subformulas B(phi) form a finite modal vocabulary; a candidate
assignment of truth values to that vocabulary reduces the KB to an objective
kernel (each belief node replaced by its assigned value, innermost first for
nested beliefs).  The candidate is an expansion exactly when it reproduces
itself: B(phi) was assigned true iff the kernel entails phi's reduction.

A witness represents the infinite, introspectively closed belief set
lazily: an objective sentence belongs to the expansion iff the kernel
entails it, and B(psi) belongs iff psi does.  Inconsistent kernels force
every belief true; such degenerate expansions are kept but flagged.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .classical import GroundTheory, consistent, entails
from .errors import QueryError
from .kb import KnowledgeBase, ground
from .syntax import (
    FALSE,
    TRUE,
    And,
    Atom,
    Belief,
    Bottom,
    Formula,
    Implies,
    Not,
    Or,
    Top,
    belief_bodies,
    belief_depth,
    format_formula,
    is_ground,
    simplify,
)

SKEPTICAL = "skeptical"
CREDULOUS = "credulous"


@dataclass(frozen=True)
class ModalAtom:
    body: Formula

    def __str__(self) -> str:
        return f"B({format_formula(self.body)})"


def modal_atoms(kb: KnowledgeBase) -> tuple[ModalAtom, ...]:
    """Distinct ground belief subformulas of the ground KB, innermost first."""
    gp = ground(kb)
    seen: dict[Formula, None] = {}
    for _, f in gp.belief_formulas:
        for body in belief_bodies(f):
            seen.setdefault(body, None)
    ordered = sorted(seen, key=lambda b: (belief_depth(b), format_formula(b)))
    return tuple(ModalAtom(b) for b in ordered)


@dataclass(frozen=True)
class ExpansionWitness:
    assignment: tuple[tuple[ModalAtom, bool], ...]
    kernel: GroundTheory
    degenerate: bool  # inconsistent kernel: every belief forced true

    def believes(self, body: Formula) -> bool:
        for atom, value in self.assignment:
            if atom.body == body:
                return value
        return entails(self.kernel, self._reduced(body))

    def _reduced(self, f: Formula) -> Formula:
        match f:
            case Atom() | Top() | Bottom():
                return f
            case Not(s):
                return simplify(Not(self._reduced(s)))
            case And(l, r):
                return simplify(And(self._reduced(l), self._reduced(r)))
            case Or(l, r):
                return simplify(Or(self._reduced(l), self._reduced(r)))
            case Implies(l, r):
                return simplify(Implies(self._reduced(l), self._reduced(r)))
            case Belief(b):
                return TRUE if self.believes(b) else FALSE
        raise TypeError(f"not a formula: {f!r}")

    def member(self, query: Formula) -> bool:
        """Membership of a (possibly belief-laden) ground sentence in the expansion."""
        if not is_ground(query):
            raise QueryError("expansion membership needs a ground query")
        return entails(self.kernel, self._reduced(query))


def reduce_beliefs(f: Formula, values: dict[Formula, bool]) -> Formula:
    """Replace every belief node by its assigned truth value and fold constants."""
    match f:
        case Atom() | Top() | Bottom():
            return f
        case Not(s):
            return simplify(Not(reduce_beliefs(s, values)))
        case And(l, r):
            return simplify(And(reduce_beliefs(l, values), reduce_beliefs(r, values)))
        case Or(l, r):
            return simplify(Or(reduce_beliefs(l, values), reduce_beliefs(r, values)))
        case Implies(l, r):
            return simplify(Implies(reduce_beliefs(l, values), reduce_beliefs(r, values)))
        case Belief(b):
            return TRUE if values[b] else FALSE
    raise TypeError(f"not a formula: {f!r}")


def stable_expansions(kb: KnowledgeBase) -> tuple[ExpansionWitness, ...]:
    """All stable expansions, in assignment bit-pattern order.

    Every assignment over the modal vocabulary is tried; a candidate
    survives when each belief's assigned value equals whether the reduced
    kernel entails the belief's (reduced) body.
    """
    gp = ground(kb)
    atoms = modal_atoms(kb)
    objective = GroundTheory(gp.atoms, gp.formulas)
    out: list[ExpansionWitness] = []
    for bits in itertools.product((False, True), repeat=len(atoms)):
        values = {a.body: v for a, v in zip(atoms, bits)}
        reduced = [reduce_beliefs(f, values) for _, f in gp.belief_formulas]
        kernel = objective.extended(*(f for f in reduced if f != TRUE))
        ok = all(
            entails(kernel, reduce_beliefs(a.body, values)) == v
            for a, v in zip(atoms, bits)
        )
        if ok:
            out.append(
                ExpansionWitness(tuple(zip(atoms, bits)), kernel, degenerate=not consistent(kernel))
            )
    return tuple(out)


def ael_entails(kb: KnowledgeBase, query: Formula, mode: str = SKEPTICAL) -> bool:
    """Membership of the query in every (skeptical) or some (credulous) expansion.

    Belief operators are permitted in the query; they are valued against the
    witness assignment, falling back to kernel entailment for bodies outside
    the KB's modal vocabulary.
    """
    query = simplify(query, kb.unique_names)
    exps = stable_expansions(kb)
    if mode == SKEPTICAL:
        return all(w.member(query) for w in exps)
    if mode == CREDULOUS:
        return any(w.member(query) for w in exps)
    raise ValueError(f"unknown mode {mode!r}")


def stable_set_violations(witness: ExpansionWitness, vocabulary: tuple[Formula, ...]) -> list[str]:
    """Check the three stable-set laws on the witness, over a finite vocabulary.

    (1) closure under entailment (spot-checked through pairwise conjunctions),
    (2) positive introspection: member(psi) implies member(B(psi)),
    (3) negative introspection: non-member(psi) implies member(-B(psi)).
    """
    violations = []
    membership = {}
    for psi in vocabulary:
        membership[psi] = witness.member(psi)
    for psi, m in membership.items():
        if m != entails(witness.kernel, witness._reduced(psi)):
            violations.append(f"closure broken on {format_formula(psi)}")
        if m and not witness.member(Belief(psi)):
            violations.append(f"positive introspection broken on {format_formula(psi)}")
        if not m and not witness.member(Not(Belief(psi))):
            violations.append(f"negative introspection broken on {format_formula(psi)}")
    for a, b in itertools.combinations(vocabulary, 2):
        if membership[a] and membership[b] and not witness.member(And(a, b)):
            violations.append(
                f"closure broken on {format_formula(a)} & {format_formula(b)}"
            )
    return violations
