import random

import pytest

from conftest import APPENDIX_INCONSISTENT, TWEETY_CWA, q
from nmreason.classical import entails
from nmreason.cwa import cwa_augment, cwa_entails, cwad_entails
from nmreason.errors import QueryError
from nmreason.parser import parse_kb
from nmreason.syntax import Not, format_formula
from oracles import cwa_oracle_negations, random_kb, random_query, tt_satisfiable


def test_chilly_assumed_not_to_fly(tweety_cwa):
    aug = cwa_augment(tweety_cwa)
    assert [format_formula(f) for f in aug.assumed_negations] == ["-Flies(chilly)"]
    assert aug.consistent
    assert cwa_entails(tweety_cwa, q("-Flies(chilly)", tweety_cwa))


def test_nonmonotonicity_witness(tweety_cwa):
    kb2 = parse_kb(TWEETY_CWA + "fact Flies(chilly).\n")
    assert cwa_entails(tweety_cwa, q("-Flies(chilly)", tweety_cwa))
    assert not cwa_entails(kb2, q("-Flies(chilly)", kb2))


def test_kb_entailing_every_atom_assumes_nothing():
    kb = parse_kb("const a.\npred P/1, Q/1.\nfact P(a). fact Q(a).\n")
    assert cwa_augment(kb).assumed_negations == ()


def test_appendix_inconsistency_flagged():
    kb = parse_kb(APPENDIX_INCONSISTENT)
    aug = cwa_augment(kb)
    assert aug.assumed_negations == ()  # the base already entails every atom
    assert not aug.consistent
    # an inconsistent augmentation entails an arbitrary fresh atom
    assert cwa_entails(kb, q("Happy(tweety)", kb))
    assert cwa_entails(kb, q("-Happy(tweety)", kb))


def test_disjunction_makes_augmentation_inconsistent():
    kb = parse_kb("const a.\npred P/1, Q/1.\nfact P(a) | Q(a).\n")
    aug = cwa_augment(kb)
    assert not aug.consistent


def test_empty_kb_assumes_unmentioned_atoms_false():
    kb = parse_kb("const a.\npred P/1.\n")
    assert cwa_entails(kb, q("-P(a)", kb))


def test_supports_positive_entailment(tweety_cwa):
    assert cwa_entails(tweety_cwa, q("Flies(tweety)", tweety_cwa))


def test_atom_completeness_on_consistent_augmentation(tweety_cwa):
    from nmreason.kb import declared_atoms

    aug = cwa_augment(tweety_cwa)
    assert aug.consistent
    theory = aug.theory()
    for atom in declared_atoms(tweety_cwa):
        pos = entails(theory, atom)
        from nmreason.syntax import Not

        neg = entails(theory, Not(atom))
        assert pos != neg


def test_cwad_single_constant_domain():
    kb = parse_kb("const t.\npred Bird/1.\nfact Bird(t).\n")
    assert cwad_entails(kb, q("x = t", kb, allow_vars=True))


def test_cwad_two_constant_domain():
    kb = parse_kb("const tweety, chilly.\npred Bird/1.\n")
    query = q("x = tweety | x = chilly", kb, allow_vars=True)
    assert cwad_entails(kb, query)


def test_cwad_equals_cwa_when_flag_already_set():
    kb = parse_kb("const a, b.\npred P/1.\nflag domain-closure.\nfact P(a).\n")
    for text in ("P(a)", "-P(b)", "P(x) | -P(x)"):
        query = q(text, kb, allow_vars=True)
        assert cwad_entails(kb, query) == cwa_entails(kb, query)


def test_open_query_needs_domain_closure(tweety_cwa):
    query = q("Bird(x)", tweety_cwa, allow_vars=True)
    with pytest.raises(QueryError, match="domain-closure"):
        cwa_entails(tweety_cwa, query)
    assert cwad_entails(tweety_cwa, query)  # both birds are declared


def test_belief_query_rejected(tweety_cwa):
    with pytest.raises(QueryError, match="belief"):
        cwa_entails(tweety_cwa, q("B(Flies(tweety))", tweety_cwa))


def test_random_kbs_match_per_atom_oracle():
    rng = random.Random(90125)
    for _ in range(40):
        kb = random_kb(rng)
        aug = cwa_augment(kb)
        base = aug.base
        oracle_negated = cwa_oracle_negations(base.formulas, base.atoms)
        assert [f.sub for f in aug.assumed_negations] == oracle_negated
        full = base.formulas + aug.assumed_negations
        assert aug.consistent == tt_satisfiable(full, base.atoms)
        for _ in range(3):
            query = random_query(rng, base.atoms)
            assert cwa_entails(kb, query) == (
                not tt_satisfiable(full + (Not(query),), base.atoms)
            )
