"""Terms, formula trees, and the pretty printer.

Formulas are immutable trees over atoms, the usual connectives, and a unary
belief operator ``B``.  A formula is *objective* when it contains no belief
node and *ground* when it contains no variable.  Equality is a built-in
binary predicate spelled ``=``; ground equalities between identical
constants are always true, and under the unique-names assumption ground
equalities between distinct constants are false.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

CONST = "const"
VAR = "var"

EQ = "="


@dataclass(frozen=True)
class Term:
    kind: str
    name: str

    def __post_init__(self) -> None:
        if self.kind not in (CONST, VAR):
            raise ValueError(f"bad term kind {self.kind!r}")
        if not self.name:
            raise ValueError("empty term name")


def const(name: str) -> Term:
    return Term(CONST, name)


def var(name: str) -> Term:
    return Term(VAR, name)


class Formula:
    """Base class for sentence trees."""

    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    predicate: str
    args: tuple[Term, ...] = ()
    abnormality: bool = False


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


TRUE = Top()
FALSE = Bottom()


@dataclass(frozen=True)
class Not(Formula):
    sub: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Belief(Formula):
    body: Formula


def equality(left: Term, right: Term) -> Atom:
    # ground equalities are argument-order normalised so that a = b and
    # b = a denote the same propositional atom
    if left.kind == CONST and right.kind == CONST and right.name < left.name:
        left, right = right, left
    return Atom(EQ, (left, right))


def conj(parts: list[Formula]) -> Formula:
    """Left-associated conjunction; TRUE for the empty list."""
    if not parts:
        return TRUE
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def free_vars(f: Formula) -> frozenset[str]:
    match f:
        case Atom(_, args, _):
            return frozenset(t.name for t in args if t.kind == VAR)
        case Top() | Bottom():
            return frozenset()
        case Not(sub):
            return free_vars(sub)
        case And(l, r) | Or(l, r) | Implies(l, r):
            return free_vars(l) | free_vars(r)
        case Belief(body):
            return free_vars(body)
    raise TypeError(f"not a formula: {f!r}")


def is_ground(f: Formula) -> bool:
    return not free_vars(f)


def is_objective(f: Formula) -> bool:
    match f:
        case Atom() | Top() | Bottom():
            return True
        case Not(sub):
            return is_objective(sub)
        case And(l, r) | Or(l, r) | Implies(l, r):
            return is_objective(l) and is_objective(r)
        case Belief():
            return False
    raise TypeError(f"not a formula: {f!r}")


def substitute(f: Formula, binding: Mapping[str, Term]) -> Formula:
    """Replace free variables by the given terms."""

    def sub_term(t: Term) -> Term:
        return binding.get(t.name, t) if t.kind == VAR else t

    match f:
        case Atom(p, args, ab):
            if p == EQ:
                return equality(sub_term(args[0]), sub_term(args[1]))
            return Atom(p, tuple(sub_term(t) for t in args), ab)
        case Top() | Bottom():
            return f
        case Not(s):
            return Not(substitute(s, binding))
        case And(l, r):
            return And(substitute(l, binding), substitute(r, binding))
        case Or(l, r):
            return Or(substitute(l, binding), substitute(r, binding))
        case Implies(l, r):
            return Implies(substitute(l, binding), substitute(r, binding))
        case Belief(b):
            return Belief(substitute(b, binding))
    raise TypeError(f"not a formula: {f!r}")


def simplify(f: Formula, unique_names: bool = False) -> Formula:
    """Bottom-up constant folding.

    Evaluates ground equalities (reflexive ones are always true; between
    distinct constants only when ``unique_names``), propagates TRUE/FALSE
    through connectives, and removes double negations.  Idempotent.
    """
    match f:
        case Atom(p, args, _):
            if p == EQ and all(t.kind == CONST for t in args):
                if args[0] == args[1]:
                    return TRUE
                if unique_names:
                    return FALSE
            return f
        case Top() | Bottom():
            return f
        case Not(s):
            s = simplify(s, unique_names)
            match s:
                case Top():
                    return FALSE
                case Bottom():
                    return TRUE
                case Not(inner):
                    return inner
            return Not(s)
        case And(l, r):
            l, r = simplify(l, unique_names), simplify(r, unique_names)
            if isinstance(l, Bottom) or isinstance(r, Bottom):
                return FALSE
            if isinstance(l, Top):
                return r
            if isinstance(r, Top):
                return l
            return And(l, r)
        case Or(l, r):
            l, r = simplify(l, unique_names), simplify(r, unique_names)
            if isinstance(l, Top) or isinstance(r, Top):
                return TRUE
            if isinstance(l, Bottom):
                return r
            if isinstance(r, Bottom):
                return l
            return Or(l, r)
        case Implies(l, r):
            l, r = simplify(l, unique_names), simplify(r, unique_names)
            if isinstance(l, Bottom) or isinstance(r, Top):
                return TRUE
            if isinstance(l, Top):
                return r
            if isinstance(r, Bottom):
                return simplify(Not(l), unique_names)
            return Implies(l, r)
        case Belief(b):
            return Belief(simplify(b, unique_names))
    raise TypeError(f"not a formula: {f!r}")


def atoms_of(f: Formula) -> Iterator[Atom]:
    """All atoms, including those inside belief bodies."""
    match f:
        case Atom():
            yield f
        case Top() | Bottom():
            return
        case Not(s):
            yield from atoms_of(s)
        case And(l, r) | Or(l, r) | Implies(l, r):
            yield from atoms_of(l)
            yield from atoms_of(r)
        case Belief(b):
            yield from atoms_of(b)


def belief_depth(f: Formula) -> int:
    match f:
        case Atom() | Top() | Bottom():
            return 0
        case Not(s):
            return belief_depth(s)
        case And(l, r) | Or(l, r) | Implies(l, r):
            return max(belief_depth(l), belief_depth(r))
        case Belief(b):
            return 1 + belief_depth(b)
    raise TypeError(f"not a formula: {f!r}")


def belief_bodies(f: Formula) -> Iterator[Formula]:
    """Bodies of all belief nodes, innermost before the node containing them."""
    match f:
        case Atom() | Top() | Bottom():
            return
        case Not(s):
            yield from belief_bodies(s)
        case And(l, r) | Or(l, r) | Implies(l, r):
            yield from belief_bodies(l)
            yield from belief_bodies(r)
        case Belief(b):
            yield from belief_bodies(b)
            yield b


# printer precedence: -> binds loosest, then |, &, -, and atoms
_PREC_IMPL = 1
_PREC_OR = 2
_PREC_AND = 3
_PREC_NOT = 4
_PREC_ATOM = 5


def format_term(t: Term) -> str:
    return t.name


def format_formula(f: Formula) -> str:
    return _fmt(f, 0)


def _fmt(f: Formula, parent: int) -> str:
    match f:
        case Atom(p, args, _):
            if p == EQ:
                s = f"{args[0].name} = {args[1].name}"
                return f"({s})" if parent >= _PREC_NOT else s
            if not args:
                return p
            return f"{p}({','.join(t.name for t in args)})"
        case Top():
            return "true"
        case Bottom():
            return "false"
        case Not(Atom(p, args, _)) if p == EQ:
            s = f"{args[0].name} != {args[1].name}"
            return f"({s})" if parent >= _PREC_NOT else s
        case Not(s):
            return "-" + _fmt(s, _PREC_NOT)
        case And(l, r):
            s = f"{_fmt(l, _PREC_AND - 1)} & {_fmt(r, _PREC_AND)}"
            return f"({s})" if parent >= _PREC_AND else s
        case Or(l, r):
            s = f"{_fmt(l, _PREC_OR - 1)} | {_fmt(r, _PREC_OR)}"
            return f"({s})" if parent >= _PREC_OR else s
        case Implies(l, r):
            # binary antecedents are parenthesised for readability even
            # though -> binds loosest
            s = f"{_fmt(l, _PREC_AND)} -> {_fmt(r, _PREC_IMPL - 1)}"
            return f"({s})" if parent >= _PREC_IMPL else s
        case Belief(b):
            return f"B({_fmt(b, 0)})"
    raise TypeError(f"not a formula: {f!r}")
