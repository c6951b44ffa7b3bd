"""Partial-credit grading for Proof Blocks problems.

A submission's grade is driven by the minimum number of block insertions and
deletions needed to turn it into any topological ordering of the problem's
dependency DAG. Two graders compute it: an enumeration baseline and a reduction
to minimum vertex cover on the submission's "problematic graph".
"""

from .core import (
    GradeReport,
    ProofBlocksProblem,
    Submission,
    format_score,
    score,
    validate_problem,
    validate_submission,
)
from .editdist import EditOp, EditScript, apply_edit_script, edit_distance, lcs_length
from .grader import (
    build_problematic_graph,
    construct_edit_script,
    first_unsupported_line,
    grade_baseline,
    grade_mvc,
)

__all__ = [
    "EditOp",
    "EditScript",
    "GradeReport",
    "ProofBlocksProblem",
    "Submission",
    "apply_edit_script",
    "build_problematic_graph",
    "construct_edit_script",
    "edit_distance",
    "first_unsupported_line",
    "format_score",
    "grade_baseline",
    "grade_mvc",
    "lcs_length",
    "score",
    "validate_problem",
    "validate_submission",
]
