"""Token alignment between an original and a corrected sentence.

``align`` runs a Damerau-Levenshtein style dynamic programme over tokens.
Costs: match 0; insertion and deletion 1; substitution 1 when the two
tokens are equal lowercased or share a lemma, else 2; transposition of an
adjacent pair 1.  Ties are resolved with a fixed preference order
(match, substitution, transposition, deletion, insertion), which together
with the left-to-right sweep makes the output deterministic.

``merge`` collapses every maximal run of non-match operations into a single
:class:`Edit`, so edits are never adjacent and applying them left to right
reproduces the corrected sentence exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .m2 import EditSpan

MATCH = "match"
SUBSTITUTE = "substitute"
INSERT = "insert"
DELETE = "delete"
TRANSPOSE = "transpose"

# tie-break preference, best first
_PREFERENCE = {MATCH: 0, SUBSTITUTE: 1, TRANSPOSE: 2, DELETE: 3, INSERT: 4}


@dataclass(frozen=True)
class AlignmentOp:
    kind: str
    src_start: int
    src_end: int
    trg_start: int
    trg_end: int


@dataclass(frozen=True)
class Edit:
    """A contiguous rewrite of the source, with its landing site in the target."""

    span: EditSpan
    src_tokens: tuple[str, ...]
    cor_start: int

    @property
    def cor_end(self) -> int:
        return self.cor_start + len(self.span.correction)


def align(
    src: Sequence[str],
    trg: Sequence[str],
    src_lemmas: Sequence[str] | None = None,
    trg_lemmas: Sequence[str] | None = None,
) -> list[AlignmentOp]:
    """Align two token sequences, returning operations in source order.

    The concatenated source ranges of the result cover the source exactly
    and in order, and likewise for the target ranges.  Lemma sequences,
    when given, must parallel the token sequences; they lower the
    substitution cost for same-lemma pairs.
    """
    n, m = len(src), len(trg)
    if src_lemmas is not None and len(src_lemmas) != n:
        raise ValueError("src_lemmas does not parallel src")
    if trg_lemmas is not None and len(trg_lemmas) != m:
        raise ValueError("trg_lemmas does not parallel trg")

    src_lower = [t.lower() for t in src]
    trg_lower = [t.lower() for t in trg]

    # cost[i][j]: best cost aligning src[:i] with trg[:j]; choice records the op.
    cost = [[0] * (m + 1) for _ in range(n + 1)]
    choice = [[MATCH] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        cost[i][0] = i
        choice[i][0] = DELETE
    for j in range(1, m + 1):
        cost[0][j] = j
        choice[0][j] = INSERT

    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if src[i - 1] == trg[j - 1]:
                best = cost[i - 1][j - 1]
                op = MATCH
            else:
                if src_lower[i - 1] == trg_lower[j - 1] or (
                    src_lemmas is not None
                    and trg_lemmas is not None
                    and src_lemmas[i - 1] == trg_lemmas[j - 1]
                ):
                    best = cost[i - 1][j - 1] + 1
                else:
                    best = cost[i - 1][j - 1] + 2
                op = SUBSTITUTE
            if (
                i >= 2
                and j >= 2
                and src_lower[i - 2] == trg_lower[j - 1]
                and src_lower[i - 1] == trg_lower[j - 2]
            ):
                transpose = cost[i - 2][j - 2] + 1
                if transpose < best or (transpose == best and _PREFERENCE[op] > _PREFERENCE[TRANSPOSE]):
                    best, op = transpose, TRANSPOSE
            delete = cost[i - 1][j] + 1
            if delete < best:
                best, op = delete, DELETE
            insert = cost[i][j - 1] + 1
            if insert < best:
                best, op = insert, INSERT
            cost[i][j] = best
            choice[i][j] = op

    ops: list[AlignmentOp] = []
    i, j = n, m
    while i > 0 or j > 0:
        op = choice[i][j]
        if op in (MATCH, SUBSTITUTE):
            ops.append(AlignmentOp(op, i - 1, i, j - 1, j))
            i, j = i - 1, j - 1
        elif op == TRANSPOSE:
            ops.append(AlignmentOp(op, i - 2, i, j - 2, j))
            i, j = i - 2, j - 2
        elif op == DELETE:
            ops.append(AlignmentOp(op, i - 1, i, j, j))
            i -= 1
        else:
            ops.append(AlignmentOp(op, i, i, j - 1, j))
            j -= 1
    ops.reverse()
    return ops


def op_cost(
    op: AlignmentOp,
    src: Sequence[str],
    trg: Sequence[str],
    src_lemmas: Sequence[str] | None = None,
    trg_lemmas: Sequence[str] | None = None,
) -> int:
    """Cost of a single alignment operation under the align() cost model."""
    if op.kind == MATCH:
        return 0
    if op.kind in (DELETE, INSERT, TRANSPOSE):
        return 1
    s, t = src[op.src_start], trg[op.trg_start]
    if s.lower() == t.lower():
        return 1
    if (
        src_lemmas is not None
        and trg_lemmas is not None
        and src_lemmas[op.src_start] == trg_lemmas[op.trg_start]
    ):
        return 1
    return 2


def merge(ops: Sequence[AlignmentOp], src: Sequence[str], trg: Sequence[str]) -> list[Edit]:
    """Collapse maximal non-match runs into edits.

    Returned edits are ordered, non-overlapping, never adjacent (a match
    always separates two edits), and never empty on both sides.
    """
    edits: list[Edit] = []
    run: list[AlignmentOp] = []

    def close() -> None:
        if run:
            src_start, src_end = run[0].src_start, run[-1].src_end
            trg_start, trg_end = run[0].trg_start, run[-1].trg_end
            span = EditSpan(src_start, src_end, tuple(trg[trg_start:trg_end]))
            edits.append(Edit(span, tuple(src[src_start:src_end]), trg_start))
            run.clear()

    for op in ops:
        if op.kind == MATCH:
            close()
        else:
            run.append(op)
    close()
    return edits
