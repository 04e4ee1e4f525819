"""Exception types shared across the package."""

from __future__ import annotations


class NmrError(Exception):
    """Base class for all package errors."""


class KbSyntaxError(NmrError):
    """Malformed KB source or query text."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", column {col}" if col is not None else "")
        super().__init__(message + where)


class KbValidationError(NmrError):
    """A structurally invalid knowledge base."""


class QueryError(NmrError):
    """A query outside the engine's contract (non-ground, belief operator, ...)."""


class AtomLimitError(NmrError):
    """Ground atom count exceeds the NMR_MAX_ATOMS enumeration budget."""


class AnalysisError(NmrError):
    """A misuse of the analysis layer (unknown generalisation, bad semantics, ...)."""


class CompletionRefused(NmrError):
    """Completion rejected because the preferred structure is not unique.

    ``alternatives`` lists the candidate exception sets, one per preferred
    structure, as sorted tuples of constant names.
    """

    def __init__(self, message: str, alternatives: list[tuple[str, ...]]):
        self.alternatives = alternatives
        super().__init__(message)
