"""Entailment under four non-monotonic semantics, with exception analysis.

A finite ground knowledge base can be queried under the closed-world
assumption (with or without domain closure), circumscription over
abnormality predicates, default logic, and autoepistemic logic.  The
analysis layer translates defeasible generalisations into each formalism,
extracts their exceptions, completes them into universal generalisations,
and emits a four-axis comparison report.
"""

from .analysis import (
    AUTOEPISTEMIC,
    CIRCUMSCRIPTION,
    CWA,
    CWA_DC,
    DEFAULT,
    SEMANTICS,
    TABLE_AXES,
    ComparisonReport,
    ExceptionSet,
    classify_discrepancy,
    compare,
    complete_generalisation,
    exceptions,
    translate,
)
from .autoepistemic import (
    ExpansionWitness,
    ModalAtom,
    ael_entails,
    modal_atoms,
    stable_expansions,
)
from .circumscription import ab_leq, circ_entails, minimal_models, ordered_models
from .classical import GroundTheory, Interpretation, consistent, entails, models
from .cwa import CwaAugmentation, cwa_augment, cwa_entails, cwad_entails
from .defaults import (
    DefaultTheory,
    ExtensionWitness,
    default_entails,
    extensions,
    is_grounded,
)
from .errors import (
    AnalysisError,
    AtomLimitError,
    CompletionRefused,
    KbSyntaxError,
    KbValidationError,
    NmrError,
    QueryError,
)
from .kb import (
    AelFormula,
    DefaultRule,
    Generalisation,
    GroundProgram,
    KnowledgeBase,
    PredicateDecl,
    ground,
    print_kb,
)
from .parser import parse_formula, parse_kb
from .syntax import Atom, Formula, Term, format_formula

__version__ = "0.1.0"
