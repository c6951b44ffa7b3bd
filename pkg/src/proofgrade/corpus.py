"""Reading and writing problems, submissions, and grade reports.

Problem files are single JSON documents::

    {"blocks": ["1", {"id": "2", "text": "Let n be even."}, ...],
     "solution_nodes": ["1", "2", ...],
     "edges": [["1", "2"], ...]}

Submission and grade files are JSON Lines, one record per line. All files are
UTF-8.
"""

from __future__ import annotations

import json
import os
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path

from .core import GradeReport, ProofBlocksProblem, validate_problem
from .errors import ParseError

PathLike = str | os.PathLike


@dataclass(frozen=True)
class SubmissionRecord:
    submission_id: str
    sequence: tuple = ()


@dataclass
class SubmissionBatch:
    """Records from a submissions file plus one ParseError per rejected line."""

    records: list[SubmissionRecord] = field(default_factory=list)
    diagnostics: list[ParseError] = field(default_factory=list)

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)


def problem_to_dict(p: ProofBlocksProblem) -> dict:
    blocks = [{"id": b, "text": p.text[b]} if b in p.text else b for b in p.blocks]
    return {
        "blocks": blocks,
        "solution_nodes": sorted(p.solution_nodes),
        "edges": [list(e) for e in sorted(p.edges)],
    }


def write_problem(p: ProofBlocksProblem, path: PathLike) -> None:
    Path(path).write_text(json.dumps(problem_to_dict(p), indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


def load_problem(path: PathLike) -> ProofBlocksProblem:
    text = Path(path).read_text(encoding="utf-8")
    if not text.strip():
        raise ParseError("empty problem file", path=path)
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, path=path, line=exc.lineno) from None
    if not isinstance(raw, dict):
        raise ParseError("top level must be an object", path=path)
    for key in ("blocks", "solution_nodes", "edges"):
        if key not in raw:
            raise ParseError("missing required key", path=path, field=key)
        if not isinstance(raw[key], list):
            raise ParseError("must be a list", path=path, field=key)
    return validate_problem(raw)


def parse_submission_line(line: str, *, path=None, lineno: int | None = None) -> SubmissionRecord:
    try:
        raw = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, path=path, line=lineno) from None
    if not isinstance(raw, dict):
        raise ParseError("record must be an object", path=path, line=lineno)
    sid = raw.get("submission_id")
    if isinstance(sid, bool) or not isinstance(sid, (str, int)):
        raise ParseError("missing or non-string id", path=path, line=lineno, field="submission_id")
    seq = raw.get("sequence")
    if not isinstance(seq, list):
        raise ParseError("must be a list of block ids", path=path, line=lineno, field="sequence")
    return SubmissionRecord(str(sid), tuple(seq))


def load_submissions(path: PathLike) -> SubmissionBatch:
    batch = SubmissionBatch()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                batch.records.append(parse_submission_line(line, path=path, lineno=lineno))
            except ParseError as exc:
                batch.diagnostics.append(exc)
    return batch


def write_submissions(records: Iterable[SubmissionRecord], path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in records:
            fh.write(json.dumps({"submission_id": r.submission_id, "sequence": list(r.sequence)}, ensure_ascii=False))
            fh.write("\n")


def grade_record(record: SubmissionRecord, report: GradeReport) -> dict:
    return {
        "submission_id": record.submission_id,
        "d_star": report.d_star,
        "deletions": report.deletions,
        "insertions": report.insertions,
        "score": report.score_text,
        "edits": report.edit_script.to_list() if report.edit_script is not None else None,
    }


def write_grade_reports(
    records: Sequence[SubmissionRecord], reports: Sequence[GradeReport], path: PathLike
) -> None:
    if len(records) != len(reports):
        raise ValueError("records and reports must be aligned")
    with open(path, "w", encoding="utf-8") as fh:
        for record, report in zip(records, reports):
            fh.write(json.dumps(grade_record(record, report), ensure_ascii=False))
            fh.write("\n")
