"""Type distribution summaries over M2 records."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .m2 import M2Record, NOOP_TYPE

FORMAT_TSV = "tsv"
FORMAT_JSON = "json"
REPORT_FORMATS = (FORMAT_TSV, FORMAT_JSON)

_TSV_HEADER = "type\tcount\tfraction"


@dataclass(frozen=True)
class TypeDistribution:
    counts: dict[str, int] = field(default_factory=dict)
    total: int = 0


def type_distribution(
    records: Sequence[M2Record], annotator_filter: int | None = None
) -> TypeDistribution:
    """Count type labels over all non-noop edits, optionally per annotator."""
    counts: dict[str, int] = {}
    total = 0
    for record in records:
        for edit in record.edits:
            if edit.span.is_noop or edit.type_label == NOOP_TYPE:
                continue
            if annotator_filter is not None and edit.annotator_id != annotator_filter:
                continue
            counts[edit.type_label] = counts.get(edit.type_label, 0) + 1
            total += 1
    return TypeDistribution(counts, total)


def emit_report(distribution: TypeDistribution, format: str = FORMAT_TSV) -> str:
    """Render a distribution; rows sort by count descending, then label."""
    if format not in REPORT_FORMATS:
        raise ValueError(f"unknown report format {format!r}")
    ordered = sorted(distribution.counts.items(), key=lambda item: (-item[1], item[0]))
    if format == FORMAT_TSV:
        lines = [_TSV_HEADER]
        for label, count in ordered:
            lines.append(f"{label}\t{count}\t{count / distribution.total:.4f}")
        return "\n".join(lines) + "\n"
    payload = {
        "total": distribution.total,
        "counts": {label: count for label, count in ordered},
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
