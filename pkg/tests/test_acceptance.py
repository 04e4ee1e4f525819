"""Acceptance criteria, one test per criterion, one pass/fail line each.

Run standalone with:  pytest tests/test_acceptance.py -v -s
"""

import random
import time
from contextlib import contextmanager

from conftest import (
    APPENDIX_INCONSISTENT,
    PRIMES,
    TWEETY_AEL,
    TWEETY_CIRC,
    TWEETY_CWA,
    TWEETY_DEF,
    TWEETY_DEFAULT,
    q,
)
from nmreason.analysis import (
    AUTOEPISTEMIC,
    CIRCUMSCRIPTION,
    DEFAULT,
    TABLE_AXES,
    compare,
    complete_generalisation,
    exceptions,
    translate,
)
from nmreason.autoepistemic import modal_atoms, stable_expansions, stable_set_violations
from nmreason.circumscription import circ_entails, minimal_models
from nmreason.classical import GroundTheory, entails
from nmreason.cwa import cwa_augment, cwa_entails
from nmreason.defaults import (
    CREDULOUS,
    SKEPTICAL,
    DefaultTheory,
    default_entails,
    extensions,
    fixpoint_violations,
)
from nmreason.kb import declared_atoms, ground
from nmreason.parser import parse_kb
from nmreason.syntax import Atom, Implies, Not, const, format_formula
from oracles import (
    brute_force_expansions,
    brute_force_extensions,
    cwa_oracle_negations,
    dominance_minimal,
    random_kb,
    tt_models,
    tt_satisfiable,
)


@contextmanager
def criterion(number, label):
    try:
        yield
    except Exception:
        print(f"ACCEPTANCE {number} ({label}): FAIL")
        raise
    print(f"ACCEPTANCE {number} ({label}): PASS")


def test_acceptance_1_cwa_nonmonotonicity():
    with criterion(1, "closed-world Chilly fixture"):
        start = time.monotonic()
        kb = parse_kb(TWEETY_CWA)
        assert cwa_entails(kb, q("-Flies(chilly)", kb))
        kb2 = parse_kb(TWEETY_CWA + "fact Flies(chilly).\n")
        assert not cwa_entails(kb2, q("-Flies(chilly)", kb2))
        assert time.monotonic() - start < 1.0


def test_acceptance_2_cwa_inconsistent_augmentation():
    with criterion(2, "inconsistent closed-world augmentation"):
        kb = parse_kb(APPENDIX_INCONSISTENT)
        aug = cwa_augment(kb)
        assert not aug.consistent
        # Happy is declared but never mentioned in any fact or rule
        assert cwa_entails(kb, q("Happy(tweety)", kb))
        assert cwa_entails(kb, q("-Happy(tweety)", kb))


def test_acceptance_3_circumscription_tweety():
    with criterion(3, "circumscription Tweety fixture"):
        kb = parse_kb(TWEETY_CIRC)
        assert circ_entails(kb, q("Flies(tweety)", kb))
        assert circ_entails(kb, q("Ab(chilly)", kb))
        assert not circ_entails(kb, q("Ab(tweety)", kb))
        gp = ground(kb)
        mm = minimal_models(GroundTheory(gp.atoms, gp.formulas))
        expected = {Atom("Ab", (const("chilly"),), abnormality=True)}
        assert mm
        for m in mm:
            assert {a for a in m.true_atoms() if a.abnormality} == expected


def test_acceptance_4_default_tweety():
    with criterion(4, "default-logic Tweety fixture"):
        kb = parse_kb(TWEETY_DEFAULT)
        dt = DefaultTheory.from_kb(kb)
        assert len(extensions(dt)) == 1
        assert default_entails(dt, q("Flies(tweety)", kb), SKEPTICAL)
        assert not default_entails(dt, q("Flies(chilly)", kb), CREDULOUS)


def test_acceptance_5_autoepistemic_tweety():
    with criterion(5, "autoepistemic Tweety fixture"):
        kb = parse_kb(TWEETY_AEL)
        exps = stable_expansions(kb)
        assert len(exps) == 1
        (w,) = exps
        assigned = {str(a): v for a, v in w.assignment}
        assert assigned == {"B(-Flies(chilly))": True, "B(-Flies(tweety))": False}
        assert w.member(q("Flies(tweety)", kb))
        assert not w.member(q("Flies(chilly)", kb))


def test_acceptance_6_prime_completion():
    with criterion(6, "prime-number completion with certificate"):
        kb = parse_kb(PRIMES)
        for semantics in (CIRCUMSCRIPTION, DEFAULT, AUTOEPISTEMIC):
            # complete_generalisation certifies entailment equivalence for
            # every ground literal of the original vocabulary before returning
            completed, exc = complete_generalisation(kb, "g", semantics)
            assert exc.members == ("2",)
            rendered = format_formula(Implies(completed.antecedent, completed.consequent))
            assert rendered == "(Prime(x) & x != 2) -> Odd(x)"


def test_acceptance_7_axes_table():
    with criterion(7, "four-axis comparison table"):
        kb = parse_kb(TWEETY_DEF)
        report = compare(kb, [])
        expected = {
            "cwa": ("syntactic", "epistemic", "/", "/"),
            "circumscription": ("semantic", "ontological", "explicit", "logical"),
            "default": ("syntactic", "epistemic", "implicit", "meta-logical"),
            "autoepistemic": ("syntactic", "epistemic", "implicit", "logical"),
        }
        cells = 0
        for system, values in expected.items():
            row = report.axes[system]
            for axis, value in zip(("mechanism", "level", "exceptions", "generalisations"), values):
                assert row[axis] == value
                cells += 1
        assert cells == 16
        assert report.axes == TABLE_AXES


def test_acceptance_8_oracle_equivalence():
    with criterion(8, "engine/oracle agreement on random KBs"):
        start = time.monotonic()
        total = 0

        rng = random.Random(240810)
        for _ in range(140):  # closed world vs per-atom classical oracle
            kb = random_kb(rng)
            aug = cwa_augment(kb)
            base = aug.base
            assert [f.sub for f in aug.assumed_negations] == cwa_oracle_negations(
                base.formulas, base.atoms
            )
            full = base.formulas + aug.assumed_negations
            assert aug.consistent == tt_satisfiable(full, base.atoms)
            total += 1

        for _ in range(140):  # circumscription vs pairwise-dominance oracle
            kb = translate(random_kb(rng, n_def_gens=rng.randint(1, 2)), CIRCUMSCRIPTION)
            gp = ground(kb)
            theory = GroundTheory(gp.atoms, gp.formulas)
            engine = {m.values for m in minimal_models(theory)}
            oracle = {
                tuple(m[a] for a in theory.atoms)
                for m in dominance_minimal(tt_models(theory.formulas, theory.atoms))
            }
            assert engine == oracle
            total += 1

        for _ in range(120):  # default logic vs exhaustive subset enumeration
            kb = translate(
                random_kb(rng, n_def_gens=rng.randint(0, 2), n_defaults=rng.randint(0, 2)),
                DEFAULT,
            )
            dt = DefaultTheory.from_kb(kb)
            if len(dt.defaults) > 8:
                continue
            engine = sorted(tuple(sorted(w.generating_ids())) for w in extensions(dt))
            assert engine == brute_force_extensions(dt.facts.formulas, dt.facts.atoms, dt.defaults)
            total += 1

        for _ in range(120):  # autoepistemic vs exhaustive assignment enumeration
            kb = translate(random_kb(rng, n_def_gens=1), AUTOEPISTEMIC)
            atoms = modal_atoms(kb)
            if len(atoms) > 3:
                continue
            gp = ground(kb)
            engine = sorted(tuple(v for _, v in w.assignment) for w in stable_expansions(kb))
            oracle = sorted(
                brute_force_expansions(
                    gp.formulas,
                    gp.atoms,
                    tuple(f for _, f in gp.belief_formulas),
                    tuple(m.body for m in atoms),
                )
            )
            assert engine == oracle
            total += 1

        elapsed = time.monotonic() - start
        assert total >= 500
        assert elapsed < 300
        print(f"  ({total} random KBs in {elapsed:.1f}s)")


def test_acceptance_9_invariant_suites():
    with criterion(9, "standalone invariant suites"):
        rng = random.Random(90909)

        # supraclassicality of minimal-model entailment
        for source in (TWEETY_CIRC, TWEETY_DEF, PRIMES):
            kb = translate(parse_kb(source), CIRCUMSCRIPTION)
            gp = ground(kb)
            theory = GroundTheory(gp.atoms, gp.formulas)
            for atom in theory.atoms:
                for query in (atom, Not(atom)):
                    if entails(theory, query):
                        assert circ_entails(kb, query)

        # closed-world atom completeness on consistent augmentations
        for kb in [parse_kb(TWEETY_CWA)] + [random_kb(rng) for _ in range(15)]:
            aug = cwa_augment(kb)
            if not aug.consistent:
                continue
            theory = aug.theory()
            for atom in declared_atoms(kb):
                assert entails(theory, atom) != entails(theory, Not(atom))

        # stable-set laws on every returned expansion
        for source in (TWEETY_AEL, TWEETY_DEF):
            kb = translate(parse_kb(source), AUTOEPISTEMIC)
            vocab = tuple(m.body for m in modal_atoms(kb)) + tuple(declared_atoms(kb)[:4])
            for witness in stable_expansions(kb):
                assert stable_set_violations(witness, vocab) == []

        # fixpoint re-derivation on every returned extension
        for source in (TWEETY_DEFAULT, TWEETY_DEF):
            kb = translate(parse_kb(source), DEFAULT)
            dt = DefaultTheory.from_kb(kb)
            for witness in extensions(dt):
                assert fixpoint_violations(dt, witness) == []
