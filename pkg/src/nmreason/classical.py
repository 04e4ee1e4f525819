"""Classical propositional reasoning over ground theories.

This is the substrate every semantics engine sits on: model enumeration by
exhaustive assignment search with three-valued pruning, consistency, and
entailment by refutation.  Domains are desk scale, so the search is complete
and doubles as its own certificate.  The NMR_MAX_ATOMS environment variable
(default 24) caps the number of ground atoms a single enumeration may range
over.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .errors import AtomLimitError, QueryError
from .kb import atom_key
from .syntax import (
    And,
    Atom,
    Belief,
    Bottom,
    Formula,
    Implies,
    Not,
    Or,
    Top,
    atoms_of,
    format_formula,
    is_ground,
    is_objective,
)

DEFAULT_MAX_ATOMS = 24


def max_atoms() -> int:
    return int(os.environ.get("NMR_MAX_ATOMS", DEFAULT_MAX_ATOMS))


@dataclass(frozen=True)
class GroundTheory:
    """A set of ground objective formulas over a fixed atom universe.

    The universe always covers every atom occurring in the formulas; extra
    atoms are legal (they vary freely in models).
    """

    atoms: tuple[Atom, ...]
    formulas: tuple[Formula, ...]

    def __post_init__(self) -> None:
        universe = set(self.atoms)
        for f in self.formulas:
            if not is_ground(f):
                raise QueryError(f"theory formula is not ground: {format_formula(f)}")
            if not is_objective(f):
                raise QueryError(f"theory formula contains a belief operator: {format_formula(f)}")
            universe.update(atoms_of(f))
        object.__setattr__(self, "atoms", tuple(sorted(universe, key=atom_key)))
        object.__setattr__(self, "formulas", tuple(self.formulas))

    def extended(self, *formulas: Formula, extra_atoms: tuple[Atom, ...] = ()) -> "GroundTheory":
        return GroundTheory(self.atoms + tuple(extra_atoms), self.formulas + formulas)


@dataclass(frozen=True)
class Interpretation:
    """A total truth assignment over a theory's atom universe."""

    atoms: tuple[Atom, ...]
    values: tuple[bool, ...]

    def value(self, atom: Atom) -> bool:
        return self.values[self.atoms.index(atom)]

    def as_dict(self) -> dict[Atom, bool]:
        return dict(zip(self.atoms, self.values))

    def true_atoms(self) -> frozenset[Atom]:
        return frozenset(a for a, v in zip(self.atoms, self.values) if v)

    def satisfies(self, f: Formula) -> bool:
        v = eval_formula(f, self.as_dict())
        if v is None:
            raise QueryError(f"formula mentions atoms outside the interpretation: {format_formula(f)}")
        return v

    def literals(self) -> str:
        return " ".join(
            ("" if v else "-") + format_formula(a) for a, v in zip(self.atoms, self.values)
        )


def eval_formula(f: Formula, assignment: dict[Atom, bool]) -> bool | None:
    """Three-valued evaluation: None when the partial assignment cannot decide."""
    match f:
        case Atom():
            return assignment.get(f)
        case Top():
            return True
        case Bottom():
            return False
        case Not(s):
            v = eval_formula(s, assignment)
            return None if v is None else not v
        case And(l, r):
            a, b = eval_formula(l, assignment), eval_formula(r, assignment)
            if a is False or b is False:
                return False
            if a is True and b is True:
                return True
            return None
        case Or(l, r):
            a, b = eval_formula(l, assignment), eval_formula(r, assignment)
            if a is True or b is True:
                return True
            if a is False and b is False:
                return False
            return None
        case Implies(l, r):
            a, b = eval_formula(l, assignment), eval_formula(r, assignment)
            if a is False or b is True:
                return True
            if a is True and b is False:
                return False
            return None
        case Belief():
            raise QueryError("belief operator in an objective context")
    raise TypeError(f"not a formula: {f!r}")


def _check_budget(n: int) -> None:
    cap = max_atoms()
    if n > cap:
        raise AtomLimitError(f"{n} ground atoms exceeds NMR_MAX_ATOMS={cap}")


def models(theory: GroundTheory) -> tuple[Interpretation, ...]:
    """Every satisfying assignment over the theory's atom universe, once each.

    Deterministic: atoms are assigned in the global atom order, False before
    True, so the model stream is reproducible.
    """
    _check_budget(len(theory.atoms))
    atoms = theory.atoms
    n = len(atoms)
    out: list[Interpretation] = []
    vals: list[bool] = [False] * n
    assignment: dict[Atom, bool] = {}

    def search(i: int, remaining: list[Formula]) -> None:
        live = []
        for f in remaining:
            v = eval_formula(f, assignment)
            if v is False:
                return
            if v is None:
                live.append(f)
        if not live:
            free = n - i
            for combo in itertools.product((False, True), repeat=free):
                out.append(Interpretation(atoms, tuple(vals[:i]) + combo))
            return
        if i == n:
            return
        for v in (False, True):
            assignment[atoms[i]] = v
            vals[i] = v
            search(i + 1, live)
        del assignment[atoms[i]]

    search(0, list(theory.formulas))
    return tuple(out)


def satisfiable(theory: GroundTheory) -> bool:
    _check_budget(len(theory.atoms))
    atoms = theory.atoms
    assignment: dict[Atom, bool] = {}

    def search(i: int, remaining: list[Formula]) -> bool:
        live = []
        for f in remaining:
            v = eval_formula(f, assignment)
            if v is False:
                return False
            if v is None:
                live.append(f)
        if not live:
            return True
        if i == len(atoms):
            return False
        for v in (False, True):
            assignment[atoms[i]] = v
            if search(i + 1, live):
                return True
        del assignment[atoms[i]]
        return False

    return search(0, list(theory.formulas))


def consistent(theory: GroundTheory) -> bool:
    return satisfiable(theory)


def require_objective_ground(query: Formula) -> None:
    if not is_objective(query):
        raise QueryError(f"belief operator in query: {format_formula(query)}")
    if not is_ground(query):
        v = sorted(set(t.name for a in atoms_of(query) for t in a.args if t.kind == "var"))[0]
        raise QueryError(f"query must be ground (free variable {v!r})")


def entails(theory: GroundTheory, query: Formula) -> bool:
    """Classical entailment by refutation: T |= q iff T + {-q} is unsatisfiable.

    An inconsistent theory entails everything.  Atoms occurring only in the
    query extend the search universe ad hoc.
    """
    require_objective_ground(query)
    refutation = theory.extended(Not(query), extra_atoms=tuple(atoms_of(query)))
    return not satisfiable(refutation)
