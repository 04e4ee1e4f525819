from nmreason.syntax import (
    FALSE,
    TRUE,
    And,
    Atom,
    Belief,
    Implies,
    Not,
    Or,
    belief_bodies,
    belief_depth,
    const,
    equality,
    format_formula,
    free_vars,
    is_objective,
    simplify,
    substitute,
    var,
)

P_A = Atom("P", (const("a"),))
Q_A = Atom("Q", (const("a"),))


def test_format_precedence():
    assert format_formula(Implies(And(P_A, Q_A), P_A)) == "(P(a) & Q(a)) -> P(a)"
    assert format_formula(Or(And(P_A, Q_A), P_A)) == "P(a) & Q(a) | P(a)"
    assert format_formula(Not(And(P_A, Q_A))) == "-(P(a) & Q(a))"
    assert format_formula(And(P_A, And(Q_A, P_A))) == "P(a) & (Q(a) & P(a))"
    assert format_formula(Belief(Not(P_A))) == "B(-P(a))"


def test_equality_normalised_and_printed():
    e = equality(const("b"), const("a"))
    assert e.args[0].name == "a"
    assert format_formula(e) == "a = b"
    assert format_formula(Not(e)) == "a != b"
    assert format_formula(Not(Not(e))) == "-(a != b)"


def test_simplify_equalities():
    assert simplify(equality(const("a"), const("a"))) == TRUE
    assert simplify(equality(const("a"), const("b"))) == equality(const("a"), const("b"))
    assert simplify(equality(const("a"), const("b")), unique_names=True) == FALSE
    assert simplify(Not(equality(const("a"), const("a")))) == FALSE


def test_simplify_connectives():
    assert simplify(And(TRUE, P_A)) == P_A
    assert simplify(Or(P_A, TRUE)) == TRUE
    assert simplify(Implies(FALSE, P_A)) == TRUE
    assert simplify(Implies(P_A, FALSE)) == Not(P_A)
    assert simplify(Not(Not(P_A))) == P_A
    f = Implies(And(P_A, Not(Not(Q_A))), TRUE)
    assert simplify(simplify(f)) == simplify(f)


def test_substitute_and_free_vars():
    schema = Implies(Atom("P", (var("x"),)), Atom("Q", (var("x"),)))
    assert free_vars(schema) == {"x"}
    inst = substitute(schema, {"x": const("a")})
    assert inst == Implies(P_A, Q_A)
    assert free_vars(inst) == frozenset()


def test_belief_helpers():
    f = Implies(Belief(Belief(P_A)), Q_A)
    assert not is_objective(f)
    assert belief_depth(f) == 2
    assert list(belief_bodies(f)) == [P_A, Belief(P_A)]
