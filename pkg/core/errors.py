"""
Error hierarchy for pidom
"""

from typing import Optional


class PidomError(Exception):
    """Base class for every error the toolkit raises on purpose"""

    exit_code = 1


class InvalidInputError(PidomError):
    """Malformed flags, spec text, graphs or labelings"""

    exit_code = 1


class GraphError(InvalidInputError):
    """A graph would break the simple-graph invariants"""


class EdgeListParseError(GraphError):
    """Edge-list text could not be parsed"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class LabelingError(InvalidInputError):
    """Labeling does not fit the graph or the variant codomain"""


class UnsupportedError(PidomError):
    """Input is well-formed but outside what the toolkit can answer"""

    exit_code = 2


class NoClosedFormError(UnsupportedError):
    """No closed form is known for this family shape; use the solver"""


class UnsupportedPairError(UnsupportedError):
    """No realization construction exists for the requested (a, b)"""


class SizeGuardError(PidomError):
    """Graph is larger than the solver's vertex guard"""

    exit_code = 3

    def __init__(self, vertices: int, limit: int):
        self.vertices = vertices
        self.limit = limit
        super().__init__(
            f"graph has {vertices} vertices, above the solver guard of {limit}; "
            f"pass --force or raise --max-vertices to search anyway"
        )


class CheckFailedError(PidomError):
    """A computed certificate did not pass its own verification"""

    exit_code = 4
