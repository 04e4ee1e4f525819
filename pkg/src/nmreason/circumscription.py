"""Minimal-model entailment over abnormality predicates.

Interpretations are ordered by their abnormality extensions alone: i1 <= i2
iff for every abnormality predicate the set of individuals i1 makes abnormal
is a subset of i2's.  Non-abnormality predicates vary freely; the ordering
imposes no agreement condition on them.  Entailment holds when every
subset-minimal model of the theory satisfies the query, which over finite
model sets coincides with the "for every model, either it satisfies the
query or a strictly smaller model exists" formulation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classical import GroundTheory, Interpretation, models, require_objective_ground
from .kb import KnowledgeBase, ground
from .syntax import Atom, Formula, atoms_of, simplify


def ab_extension(interp: Interpretation) -> dict[str, frozenset[Atom]]:
    """True abnormality atoms, grouped per abnormality predicate."""
    out: dict[str, frozenset[Atom]] = {}
    preds = {a.predicate for a in interp.atoms if a.abnormality}
    for p in preds:
        out[p] = frozenset(
            a
            for a, v in zip(interp.atoms, interp.values)
            if v and a.abnormality and a.predicate == p
        )
    return out


def ab_leq(i1: Interpretation, i2: Interpretation) -> bool:
    """i1 <= i2 iff every abnormality predicate's true-set in i1 is a subset of i2's."""
    if i1.atoms != i2.atoms:
        raise ValueError("interpretations range over different atom sets")
    e1, e2 = ab_extension(i1), ab_extension(i2)
    return all(e1[p] <= e2[p] for p in e1)


@dataclass(frozen=True)
class AbOrderedModelSet:
    all_models: tuple[Interpretation, ...]
    minimal_models: tuple[Interpretation, ...]
    ab_extensions: tuple[frozenset[Atom], ...]  # aligned with all_models


def ordered_models(theory: GroundTheory) -> AbOrderedModelSet:
    ms = models(theory)
    exts = tuple(frozenset(a for a in m.true_atoms() if a.abnormality) for m in ms)
    distinct = set(exts)
    minimal_exts = {e for e in distinct if not any(o < e for o in distinct)}
    minimal = tuple(m for m, e in zip(ms, exts) if e in minimal_exts)
    return AbOrderedModelSet(ms, minimal, exts)


@lru_cache(maxsize=128)
def _ordered_cached(theory: GroundTheory) -> AbOrderedModelSet:
    return ordered_models(theory)


def minimal_models(theory: GroundTheory) -> tuple[Interpretation, ...]:
    """The models with no strictly smaller abnormality extension.

    Empty exactly when the theory is unsatisfiable; several incomparable
    minima are possible.
    """
    return _ordered_cached(theory).minimal_models


def theory_circ_entails(theory: GroundTheory, query: Formula) -> bool:
    require_objective_ground(query)
    extra = tuple(a for a in atoms_of(query) if a not in set(theory.atoms))
    if extra:
        theory = theory.extended(extra_atoms=extra)
    return all(m.satisfies(query) for m in minimal_models(theory))


def circ_entails(kb: KnowledgeBase, query: Formula) -> bool:
    """True iff every minimal model of the KB's ground theory satisfies the query."""
    query = simplify(query, kb.unique_names)
    gp = ground(kb)
    return theory_circ_entails(GroundTheory(gp.atoms, gp.formulas), query)
