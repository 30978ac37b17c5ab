"""Edit operations on 231-avoiding permutations.

Deleting letter ``k`` contracts edge ``k`` of the coded tree.  The three
insertions at a complete factor ``f`` (the code of a subtree) add a vertex
above ``f``, a leaf just right of ``f``, or a leaf just left of ``f``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .factors import FactorSpan, check_span, complete_factors, is_complete
from .perms import Permutation, require_stack_sortable

INNER = "inner"
LEFT = "left"
RIGHT = "right"
INSERT_KINDS = (INNER, LEFT, RIGHT)


@dataclass(frozen=True)
class EditOp:
    """One edit step.

    ``kind`` is ``"delete"``, one of :data:`INSERT_KINDS`, or ``"empty"``
    (turn the empty word into ``1``).  ``pos`` is set for deletions and
    ``span`` for factor insertions.
    """

    kind: str
    pos: int | None = None
    span: FactorSpan | None = None

    def apply(self, p: Permutation) -> Permutation:
        if self.kind == "delete":
            assert self.pos is not None
            return delete_at(p, self.pos)
        if self.kind == "empty":
            if p:
                raise ValueError("insert_empty applies only to the empty permutation")
            return insert_empty()
        assert self.span is not None
        return insert(p, self.span, self.kind)

    def __str__(self) -> str:
        if self.kind == "delete":
            return f"delete@{self.pos}"
        if self.kind == "empty":
            return "insert-empty"
        return f"insert-{self.kind}@{self.span}"


def shift_bar(word: Iterable[int], a: int) -> Permutation:
    """Bump every value ``>= a`` up by one."""
    return tuple(v if v < a else v + 1 for v in word)


def delete_at(p: Sequence[int], pos: int) -> Permutation:
    if not 1 <= pos <= len(p):
        raise ValueError(f"position {pos} out of range for a word of length {len(p)}")
    gone = p[pos - 1]
    return tuple(v if v < gone else v - 1 for i, v in enumerate(p, 1) if i != pos)


def delete_value(p: Sequence[int], value: int) -> Permutation:
    try:
        pos = list(p).index(value) + 1
    except ValueError:
        raise ValueError(f"value {value} not in {tuple(p)}") from None
    return delete_at(p, pos)


def _split(p: Sequence[int], f: FactorSpan) -> tuple[Permutation, Permutation, Permutation]:
    check_span(p, f)
    if not is_complete(p, f):
        raise ValueError(f"span {f} of {tuple(p)} is not a complete factor")
    p = tuple(p)
    return p[: f.start - 1], p[f.start - 1 : f.end], p[f.end :]


def insert_inner(p: Sequence[int], f: FactorSpan) -> Permutation:
    u, mid, v = _split(p, f)
    a = max(mid) + 1
    return shift_bar(u, a) + (a,) + mid + shift_bar(v, a)


def insert_right(p: Sequence[int], f: FactorSpan) -> Permutation:
    u, mid, v = _split(p, f)
    a = max(mid) + 1
    return shift_bar(u, a) + mid + (a,) + shift_bar(v, a)


def insert_left(p: Sequence[int], f: FactorSpan) -> Permutation:
    u, mid, v = _split(p, f)
    a = min(mid)
    return shift_bar(u, a) + (a,) + shift_bar(mid, a) + shift_bar(v, a)


def insert_empty() -> Permutation:
    return (1,)


_INSERTERS = {INNER: insert_inner, LEFT: insert_left, RIGHT: insert_right}


def insert(p: Sequence[int], f: FactorSpan, kind: str) -> Permutation:
    try:
        op = _INSERTERS[kind]
    except KeyError:
        raise ValueError(f"unknown insertion kind {kind!r}") from None
    return op(p, f)


def inserted_position(f: FactorSpan, kind: str) -> int:
    """Where the new letter lands in the result of ``insert(p, f, kind)``."""
    return f.end + 1 if kind == RIGHT else f.start


def all_ops(p: Sequence[int]) -> list[EditOp]:
    """Every applicable single edit, deletions first."""
    if not p:
        return [EditOp("empty")]
    ops = [EditOp("delete", pos=k) for k in range(1, len(p) + 1)]
    for f in complete_factors(p):
        ops.extend(EditOp(kind, span=f) for kind in INSERT_KINDS)
    return ops


def deletion_results(p: Sequence[int]) -> set[Permutation]:
    return {delete_at(p, k) for k in range(1, len(p) + 1)}


def insertion_results(p: Sequence[int]) -> set[Permutation]:
    if not p:
        return {insert_empty()}
    return {insert(p, f, kind) for f in complete_factors(p) for kind in INSERT_KINDS}


def neighbors(p: Sequence[int]) -> list[Permutation]:
    """Distinct results of one deletion or insertion, sorted."""
    p = tuple(p)
    require_stack_sortable(p)
    return sorted(deletion_results(p) | insertion_results(p))
