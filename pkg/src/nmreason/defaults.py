"""Default-logic extensions via the fixpoint test over rule subsets.

An extension of a ground default theory (F, D) is represented finitely by
its generating defaults: the candidate subset S is accepted when the rules
applicable against kernel(S) = F + conclusions(S) are exactly S.  A rule
<prerequisite : justification / conclusion> is applicable against a kernel
when the kernel entails the prerequisite and is consistent with the
justification.  Candidates are enumerated exhaustively, which is exact for
finite ground rule sets and doubles as its own certificate.

This literal fixpoint can admit self-supporting extensions (a rule whose
conclusion is the only support for its own prerequisite) that an iterated
construction from F would exclude; is_grounded reports, per witness,
whether the generating set is reachable by iterated rule application.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classical import GroundTheory, consistent, entails
from .kb import GroundDefault, KnowledgeBase, ground
from .syntax import Formula, conj

SKEPTICAL = "skeptical"
CREDULOUS = "credulous"


@dataclass(frozen=True)
class DefaultTheory:
    facts: GroundTheory
    defaults: tuple[GroundDefault, ...]

    @classmethod
    def from_kb(cls, kb: KnowledgeBase) -> "DefaultTheory":
        gp = ground(kb)
        return cls(GroundTheory(gp.atoms, gp.formulas), gp.defaults)


@dataclass(frozen=True)
class ExtensionWitness:
    generating: tuple[GroundDefault, ...]
    kernel: GroundTheory

    def member(self, query: Formula) -> bool:
        return entails(self.kernel, query)

    def generating_ids(self) -> tuple[str, ...]:
        return tuple(d.id for d in self.generating)


def kernel_of(theory: DefaultTheory, rules: tuple[GroundDefault, ...]) -> GroundTheory:
    return theory.facts.extended(*(r.conclusion for r in rules))


def applicable(theory: DefaultTheory, kernel: GroundTheory) -> tuple[GroundDefault, ...]:
    """The rules whose prerequisite the kernel entails and whose justification it tolerates."""
    return tuple(
        r
        for r in theory.defaults
        if entails(kernel, r.prerequisite) and consistent(kernel.extended(r.justification))
    )


def extensions(theory: DefaultTheory) -> tuple[ExtensionWitness, ...]:
    """All extensions, one witness per extension, in generating-set order.

    Distinct fixpoints with classically equivalent kernels would stand for
    the same extension and are merged (the applicability set is a function
    of the kernel's closure, so this cannot actually fire, but the merge
    keeps the witness set honest by construction).
    """
    witnesses: list[ExtensionWitness] = []
    n = len(theory.defaults)
    for mask in range(2**n):
        subset = tuple(theory.defaults[i] for i in range(n) if mask >> i & 1)
        kernel = kernel_of(theory, subset)
        if applicable(theory, kernel) == subset:
            witnesses.append(ExtensionWitness(subset, kernel))
    merged: list[ExtensionWitness] = []
    for w in witnesses:
        if not any(_equivalent(w.kernel, m.kernel) for m in merged):
            merged.append(w)
    return tuple(merged)


def _equivalent(a: GroundTheory, b: GroundTheory) -> bool:
    return entails(a, conj(list(b.formulas))) and entails(b, conj(list(a.formulas)))


def default_entails(theory: DefaultTheory, query: Formula, mode: str = SKEPTICAL) -> bool:
    """Membership of the query in every (skeptical) or some (credulous) extension.

    With zero extensions, skeptical is vacuously true and credulous false;
    report layers flag that case.
    """
    exts = extensions(theory)
    if mode == SKEPTICAL:
        return all(w.member(query) for w in exts)
    if mode == CREDULOUS:
        return any(w.member(query) for w in exts)
    raise ValueError(f"unknown mode {mode!r}")


def is_grounded(theory: DefaultTheory, witness: ExtensionWitness) -> bool:
    """Whether the witness's generating set is reachable by iterated application from F.

    Rules fire one round at a time: a generating rule joins the reachable
    set as soon as the conclusions gathered so far entail its prerequisite.
    Justifications were already checked against the final kernel by the
    fixpoint test.
    """
    reached: set[GroundDefault] = set()
    while True:
        kernel = theory.facts.extended(*(r.conclusion for r in reached))
        new = {
            r
            for r in witness.generating
            if r not in reached and entails(kernel, r.prerequisite)
        }
        if not new:
            return reached == set(witness.generating)
        reached |= new


def fixpoint_violations(theory: DefaultTheory, witness: ExtensionWitness) -> list[str]:
    """Re-derive the applicability set from the witness's own kernel; [] when sound."""
    derived = applicable(theory, witness.kernel)
    if derived == witness.generating:
        return []
    return [
        f"generating set {witness.generating_ids()} re-derives to {tuple(d.id for d in derived)}"
    ]
