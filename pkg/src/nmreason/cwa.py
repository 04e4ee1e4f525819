"""Closed-world entailment and its domain-closure variant.

The closed-world augmentation adds the negation of every ground atom the
base theory does not entail; entailment is then classical entailment from
the augmented theory.  The augmentation can be inconsistent (for instance a
bare disjunction, or a base that is itself inconsistent); that is a legal,
flagged outcome, and an inconsistent augmentation entails everything.

The atom universe for the "unmentioned" test is all ground atoms over the
declared predicates and constants, not just atoms textually present.
Equality is built in rather than declared, so equalities are never assumed
false.

Domain closure is realised by substitution: schemas and quantified queries
range over exactly the declared constants.  A query with a free variable is
read universally and is accepted only when domain closure is in force.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .classical import GroundTheory, consistent, entails
from .errors import QueryError
from .kb import KnowledgeBase, ground, with_flags
from .syntax import EQ, Formula, Not, conj, const, free_vars, simplify, substitute


@dataclass(frozen=True)
class CwaAugmentation:
    base: GroundTheory
    assumed_negations: tuple[Formula, ...]
    consistent: bool

    def theory(self) -> GroundTheory:
        return GroundTheory(self.base.atoms, self.base.formulas + self.assumed_negations)


def cwa_augment(kb: KnowledgeBase) -> CwaAugmentation:
    """The closed-world augmentation of a KB's objective ground theory."""
    gp = ground(kb)
    base = GroundTheory(gp.atoms, gp.formulas)
    assumed = tuple(
        Not(a) for a in base.atoms if a.predicate != EQ and not entails(base, a)
    )
    augmented = GroundTheory(base.atoms, base.formulas + assumed)
    return CwaAugmentation(base, assumed, consistent(augmented))


def cwa_entails(kb: KnowledgeBase, query: Formula) -> bool:
    query = prepare_query(kb, query)
    return entails(cwa_augment(kb).theory(), query)


def cwad_entails(kb: KnowledgeBase, query: Formula) -> bool:
    """Closed-world entailment with domain closure forced during grounding."""
    return cwa_entails(with_flags(kb, domain_closure=True), query)


def prepare_query(kb: KnowledgeBase, query: Formula) -> Formula:
    """Normalise a query under the KB's flags.

    Free variables are read universally (a conjunction over the declared
    constants), which is only sound when the domain-closure flag restricts
    the domain to the named individuals.
    """
    vs = sorted(free_vars(query))
    if vs:
        if not kb.domain_closure:
            raise QueryError(
                f"query has free variable {vs[0]!r}; universal queries need the domain-closure flag"
            )
        instances = [
            substitute(query, {v: const(c) for v, c in zip(vs, combo)})
            for combo in itertools.product(kb.constants, repeat=len(vs))
        ]
        query = conj(instances)
    return simplify(query, kb.unique_names)
