"""LCS edit distance (insertions and deletions only) and edit scripts."""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum

from . import kernels
from .errors import DuplicateBlockIntroduced, OutOfBounds


class OpKind(str, Enum):
    DELETE = "delete"
    INSERT = "insert"


@dataclass(frozen=True)
class EditOp:
    """One edit against the sequence as it stands when the op is applied.

    A delete removes the element at ``position``; an insert places ``block`` so
    that it ends up at ``position``.
    """

    kind: OpKind
    block: str
    position: int

    @classmethod
    def delete(cls, block: str, position: int) -> EditOp:
        return cls(OpKind.DELETE, block, position)

    @classmethod
    def insert(cls, block: str, position: int) -> EditOp:
        return cls(OpKind.INSERT, block, position)

    def to_dict(self) -> dict:
        return {"op": self.kind.value, "block": self.block, "position": self.position}


@dataclass(frozen=True)
class EditScript:
    ops: tuple[EditOp, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))
        seen_insert = False
        for op in self.ops:
            if op.kind is OpKind.INSERT:
                seen_insert = True
            elif seen_insert:
                raise ValueError("deletions must precede insertions")

    def __len__(self) -> int:
        return len(self.ops)

    def __iter__(self) -> Iterator[EditOp]:
        return iter(self.ops)

    @property
    def deletions(self) -> tuple[EditOp, ...]:
        return tuple(op for op in self.ops if op.kind is OpKind.DELETE)

    @property
    def insertions(self) -> tuple[EditOp, ...]:
        return tuple(op for op in self.ops if op.kind is OpKind.INSERT)

    @property
    def moved_blocks(self) -> frozenset[str]:
        """Blocks deleted and later reinserted elsewhere: the lines to move."""
        inserted = {op.block for op in self.insertions}
        return frozenset(op.block for op in self.deletions if op.block in inserted)

    def to_list(self) -> list[dict]:
        return [op.to_dict() for op in self.ops]


def _encode(a: Sequence[Hashable], b: Sequence[Hashable]) -> tuple[list[int], list[int]]:
    codes: dict[Hashable, int] = {}
    ea = [codes.setdefault(x, len(codes)) for x in a]
    eb = [codes.setdefault(x, len(codes)) for x in b]
    return ea, eb


def lcs_length(a: Sequence[Hashable], b: Sequence[Hashable]) -> int:
    return kernels.lcs_length(*_encode(a, b))


def edit_distance(a: Sequence[Hashable], b: Sequence[Hashable]) -> int:
    return len(a) + len(b) - 2 * lcs_length(a, b)


def apply_edit_script(s: Iterable[str], script: EditScript | Iterable[EditOp]) -> list[str]:
    out = list(s)
    present = set(out)
    for op in script:
        if op.kind is OpKind.DELETE:
            if not 0 <= op.position < len(out):
                raise OutOfBounds(f"delete at {op.position} in a sequence of length {len(out)}")
            if out[op.position] != op.block:
                raise ValueError(f"delete of {op.block!r} at {op.position} finds {out[op.position]!r}")
            present.discard(out.pop(op.position))
        else:
            if not 0 <= op.position <= len(out):
                raise OutOfBounds(f"insert at {op.position} in a sequence of length {len(out)}")
            if op.block in present:
                raise DuplicateBlockIntroduced(f"block {op.block!r} is already present")
            out.insert(op.position, op.block)
            present.add(op.block)
    return out
