"""Exception hierarchy shared by every proofgrade module."""

from __future__ import annotations


class ProofGradeError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(ProofGradeError, ValueError):
    """A problem or submission violates its structural invariants."""


class DuplicateBlockId(ValidationError):
    pass


class SolutionNodeNotABlock(ValidationError):
    pass


class EdgeEndpointNotInSolutionNodes(ValidationError):
    pass


class EmptySolution(ValidationError):
    pass


class CycleDetected(ValidationError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("dependency graph has a cycle: " + " -> ".join(self.cycle + self.cycle[:1]))


class DuplicateBlockInSubmission(ValidationError):
    pass


class UnknownBlockId(ValidationError):
    pass


class CapExceeded(ProofGradeError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"more than {cap} topological orderings")


class TooLarge(ProofGradeError):
    pass


class OutOfBounds(ProofGradeError, IndexError):
    pass


class DuplicateBlockIntroduced(ProofGradeError):
    pass


class NotACover(ProofGradeError, AssertionError):
    pass


class SubmissionTooTangled(ProofGradeError):
    pass


class ParseError(ProofGradeError):
    def __init__(self, message: str, *, path=None, line: int | None = None, field: str | None = None):
        self.path = path
        self.line = line
        self.field = field
        where = []
        if path is not None:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class NoData(ProofGradeError):
    pass
