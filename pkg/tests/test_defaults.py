import random

import pytest

from conftest import NIXON_DEFAULTS, q
from nmreason.classical import consistent, entails
from nmreason.defaults import (
    CREDULOUS,
    SKEPTICAL,
    DefaultTheory,
    default_entails,
    extensions,
    fixpoint_violations,
    is_grounded,
)
from nmreason.parser import parse_kb
from oracles import brute_force_extensions, random_kb, random_query


def test_tweety_has_one_extension(tweety_default):
    dt = DefaultTheory.from_kb(tweety_default)
    exts = extensions(dt)
    assert len(exts) == 1
    (w,) = exts
    assert w.generating_ids() == ("d1[tweety]",)
    assert w.member(q("Flies(tweety)", tweety_default))
    assert not w.member(q("Flies(chilly)", tweety_default))


def test_tweety_entailment_modes(tweety_default):
    dt = DefaultTheory.from_kb(tweety_default)
    assert default_entails(dt, q("Flies(tweety)", tweety_default), SKEPTICAL)
    assert not default_entails(dt, q("Flies(chilly)", tweety_default), CREDULOUS)


def test_no_defaults_single_extension():
    kb = parse_kb("const a.\npred P/1.\nfact P(a).\n")
    dt = DefaultTheory.from_kb(kb)
    exts = extensions(dt)
    assert len(exts) == 1
    assert exts[0].generating == ()
    for query in (q("P(a)", kb), q("-P(a)", kb)):
        assert default_entails(dt, query) == entails(dt.facts, query)


def test_nixon_diamond_two_extensions():
    kb = parse_kb(NIXON_DEFAULTS)
    dt = DefaultTheory.from_kb(kb)
    exts = extensions(dt)
    assert sorted(w.generating_ids() for w in exts) == [("d1[nixon]",), ("d2[nixon]",)]
    pacifist = q("Pacifist(nixon)", kb)
    dove = q("-Pacifist(nixon)", kb)
    assert default_entails(dt, pacifist, CREDULOUS)
    assert default_entails(dt, dove, CREDULOUS)
    assert not default_entails(dt, pacifist, SKEPTICAL)
    assert not default_entails(dt, dove, SKEPTICAL)


def test_zero_extensions_possible():
    kb = parse_kb("const a.\npred p/0.\ndefault d1: p | -p : p / -p.\n")
    dt = DefaultTheory.from_kb(kb)
    assert extensions(dt) == ()
    assert default_entails(dt, q("p", kb), SKEPTICAL)  # vacuously
    assert not default_entails(dt, q("p", kb), CREDULOUS)


def test_self_justifying_extension_reported_ungrounded():
    kb = parse_kb("const a.\npred p/0.\ndefault d1: p : p / p.\n")
    dt = DefaultTheory.from_kb(kb)
    exts = extensions(dt)
    assert sorted(w.generating_ids() for w in exts) == [(), ("d1",)]
    by_gen = {w.generating_ids(): w for w in exts}
    assert is_grounded(dt, by_gen[()])
    assert not is_grounded(dt, by_gen[("d1",)])


def test_fixpoint_rederivation_clean(tweety_default):
    dt = DefaultTheory.from_kb(tweety_default)
    for w in extensions(dt):
        assert fixpoint_violations(dt, w) == []


def test_extension_consistent_iff_facts_consistent(tweety_default):
    dt = DefaultTheory.from_kb(tweety_default)
    assert consistent(dt.facts)
    for w in extensions(dt):
        assert consistent(w.kernel)


def test_random_kbs_match_subset_oracle():
    from nmreason.analysis import DEFAULT, translate

    rng = random.Random(31337)
    for _ in range(30):
        kb = translate(
            random_kb(rng, n_def_gens=rng.randint(0, 2), n_defaults=rng.randint(0, 2)),
            DEFAULT,
        )
        dt = DefaultTheory.from_kb(kb)
        if len(dt.defaults) > 8:
            continue
        engine = sorted(tuple(sorted(w.generating_ids())) for w in extensions(dt))
        oracle = brute_force_extensions(dt.facts.formulas, dt.facts.atoms, dt.defaults)
        assert engine == oracle
        exts = extensions(dt)
        for _ in range(2):
            query = random_query(rng, dt.facts.atoms)
            assert default_entails(dt, query, SKEPTICAL) == all(w.member(query) for w in exts)
            assert default_entails(dt, query, CREDULOUS) == any(w.member(query) for w in exts)


def test_bad_mode_rejected(tweety_default):
    dt = DefaultTheory.from_kb(tweety_default)
    with pytest.raises(ValueError):
        default_entails(dt, q("Flies(tweety)", tweety_default), "clairvoyant")
