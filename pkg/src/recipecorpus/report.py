"""Rendering of frequency and association results.

Three formats are supported. ``text`` is the human display: columns
separated by two spaces, widths sized to the data rows, percentages shown
to 1 decimal and lift/PMI to 2 decimals (ties resolve half-even on the
stored double). ``csv`` and ``json`` are lossless machine formats carrying
numbers at full precision, so parsing the output reconstructs the input
rows exactly. Rendering is deterministic byte for byte.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Sequence
from dataclasses import dataclass

from .model import AssociationRecord, ItemsetCounts
from .stats import (
    FrequencyRow,
    ItemsetFrequencyRow,
    ThresholdConfig,
    rank_associations,
    top_frequencies,
    top_itemset_frequencies,
)

FORMATS = ("text", "csv", "json")

ITEMSET_JOIN = " & "


def _check_format(fmt: str) -> None:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _text_table(
    headers: Sequence[str],
    rows: Sequence[Sequence[str]],
    aligns: Sequence[str],
    meta: Sequence[str] = (),
) -> str:
    """Join cells with two spaces, padding columns to the widest data cell.

    Header cells wider than their column are left unpadded, so single-row
    tables render rows at their natural width.
    """
    widths = [
        max((len(row[i]) for row in rows), default=0) for i in range(len(headers))
    ]
    lines = list(meta)

    def render_row(cells: Sequence[str], row_aligns: Sequence[str]) -> str:
        padded = []
        for cell, width, align in zip(cells, widths, row_aligns):
            if align == ">":
                padded.append(cell.rjust(width))
            else:
                padded.append(cell.ljust(width))
        return "  ".join(padded).rstrip()

    lines.append(render_row(headers, ["<"] * len(headers)))
    lines.extend(render_row(row, aligns) for row in rows)
    return "\n".join(lines) + "\n"


def _csv_document(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buffer.getvalue()


def _json_document(rows: list[dict]) -> str:
    return json.dumps(rows, ensure_ascii=False, indent=2) + "\n"


def render_frequency_table(rows: Sequence[FrequencyRow], fmt: str = "text") -> str:
    """Render ranked ingredient frequencies (columns name, count, pct)."""
    _check_format(fmt)
    if fmt == "text":
        cells = [[r.name, str(r.count), f"{r.pct:.1f}"] for r in rows]
        return _text_table(["name", "count", "pct"], cells, ["<", ">", ">"])
    if fmt == "csv":
        return _csv_document(
            ["name", "count", "pct"], [[r.name, r.count, repr(r.pct)] for r in rows]
        )
    return _json_document(
        [{"name": r.name, "count": r.count, "pct": r.pct} for r in rows]
    )


def render_itemset_frequency_table(
    rows: Sequence[ItemsetFrequencyRow], fmt: str = "text"
) -> str:
    """Render ranked pair/triplet frequencies (columns itemset, count, pct)."""
    _check_format(fmt)
    if fmt == "text":
        cells = [
            [ITEMSET_JOIN.join(r.itemset), str(r.count), f"{r.pct:.1f}"] for r in rows
        ]
        return _text_table(["itemset", "count", "pct"], cells, ["<", ">", ">"])
    if fmt == "csv":
        return _csv_document(
            ["itemset", "count", "pct"],
            [[ITEMSET_JOIN.join(r.itemset), r.count, repr(r.pct)] for r in rows],
        )
    return _json_document(
        [{"itemset": list(r.itemset), "count": r.count, "pct": r.pct} for r in rows]
    )


def render_association_table(
    records: Sequence[AssociationRecord],
    fmt: str = "text",
    min_count: int | None = None,
) -> str:
    """Render a lift ranking (columns itemset, count, lift, pmi).

    In text format the header records the threshold in use as a
    "minimum occurrence: N" line. The machine formats add the support
    column so records round-trip losslessly.
    """
    _check_format(fmt)
    if fmt == "text":
        meta = [] if min_count is None else [f"minimum occurrence: {min_count}"]
        cells = [
            [
                ITEMSET_JOIN.join(r.itemset),
                str(r.count),
                f"{r.lift:.2f}",
                f"{r.pmi:.2f}",
            ]
            for r in records
        ]
        return _text_table(
            ["itemset", "count", "lift", "pmi"], cells, ["<", ">", ">", ">"], meta
        )
    if fmt == "csv":
        return _csv_document(
            ["itemset", "count", "support", "lift", "pmi"],
            [
                [
                    ITEMSET_JOIN.join(r.itemset),
                    r.count,
                    repr(r.support),
                    repr(r.lift),
                    repr(r.pmi),
                ]
                for r in records
            ],
        )
    return _json_document(
        [
            {
                "itemset": list(r.itemset),
                "count": r.count,
                "support": r.support,
                "lift": r.lift,
                "pmi": r.pmi,
            }
            for r in records
        ]
    )


@dataclass(frozen=True, slots=True)
class ComparativeReport:
    """Side-by-side statistics for two corpora.

    Both sides use the same top_n; thresholds are per side and are
    recorded in the report header. ``overlap`` lists the canonical names
    present in both top-N single-ingredient lists.
    """

    left_label: str
    right_label: str
    top_n: int
    left_thresholds: ThresholdConfig
    right_thresholds: ThresholdConfig
    left_frequencies: tuple[FrequencyRow, ...]
    right_frequencies: tuple[FrequencyRow, ...]
    left_pairs: tuple[ItemsetFrequencyRow, ...]
    right_pairs: tuple[ItemsetFrequencyRow, ...]
    left_triplets: tuple[ItemsetFrequencyRow, ...]
    right_triplets: tuple[ItemsetFrequencyRow, ...]
    left_pair_associations: tuple[AssociationRecord, ...]
    right_pair_associations: tuple[AssociationRecord, ...]
    left_triplet_associations: tuple[AssociationRecord, ...]
    right_triplet_associations: tuple[AssociationRecord, ...]
    overlap: tuple[str, ...]


def compare_corpora(
    left: ItemsetCounts,
    right: ItemsetCounts,
    top_n: int = 20,
    left_thresholds: ThresholdConfig | None = None,
    right_thresholds: ThresholdConfig | None = None,
    left_label: str = "left",
    right_label: str = "right",
) -> ComparativeReport:
    """Build the comparative report for two counted corpora."""
    left_thresholds = left_thresholds if left_thresholds is not None else ThresholdConfig()
    right_thresholds = (
        right_thresholds if right_thresholds is not None else ThresholdConfig()
    )
    left_freq = top_frequencies(left, top_n)
    right_freq = top_frequencies(right, top_n)
    overlap = sorted(
        {row.name for row in left_freq} & {row.name for row in right_freq}
    )
    return ComparativeReport(
        left_label=left_label,
        right_label=right_label,
        top_n=top_n,
        left_thresholds=left_thresholds,
        right_thresholds=right_thresholds,
        left_frequencies=tuple(left_freq),
        right_frequencies=tuple(right_freq),
        left_pairs=tuple(top_itemset_frequencies(left, 2, top_n)),
        right_pairs=tuple(top_itemset_frequencies(right, 2, top_n)),
        left_triplets=tuple(top_itemset_frequencies(left, 3, top_n)),
        right_triplets=tuple(top_itemset_frequencies(right, 3, top_n)),
        left_pair_associations=tuple(
            rank_associations(left, 2, left_thresholds, top_n)
        ),
        right_pair_associations=tuple(
            rank_associations(right, 2, right_thresholds, top_n)
        ),
        left_triplet_associations=tuple(
            rank_associations(left, 3, left_thresholds, top_n)
        ),
        right_triplet_associations=tuple(
            rank_associations(right, 3, right_thresholds, top_n)
        ),
        overlap=tuple(overlap),
    )


def render_comparative_report(report: ComparativeReport, fmt: str = "text") -> str:
    """Render a comparative report as text or json (csv is not supported)."""
    if fmt == "text":
        parts = [
            f"corpus comparison: {report.left_label} vs {report.right_label}",
            f"top_n: {report.top_n}",
            f"{report.left_label} thresholds: min pair count "
            f"{report.left_thresholds.min_pair_count}, min triplet count "
            f"{report.left_thresholds.min_triplet_count}",
            f"{report.right_label} thresholds: min pair count "
            f"{report.right_thresholds.min_pair_count}, min triplet count "
            f"{report.right_thresholds.min_triplet_count}",
            "",
        ]
        sections = [
            ("top ingredients", render_frequency_table,
             report.left_frequencies, report.right_frequencies, None, None),
            ("top pairs", render_itemset_frequency_table,
             report.left_pairs, report.right_pairs, None, None),
            ("top triplets", render_itemset_frequency_table,
             report.left_triplets, report.right_triplets, None, None),
            ("pairs by lift", render_association_table,
             report.left_pair_associations, report.right_pair_associations,
             report.left_thresholds.min_pair_count,
             report.right_thresholds.min_pair_count),
            ("triplets by lift", render_association_table,
             report.left_triplet_associations, report.right_triplet_associations,
             report.left_thresholds.min_triplet_count,
             report.right_thresholds.min_triplet_count),
        ]
        for title, renderer, left_rows, right_rows, left_min, right_min in sections:
            for label, rows, min_count in (
                (report.left_label, left_rows, left_min),
                (report.right_label, right_rows, right_min),
            ):
                parts.append(f"[{label}] {title}")
                if renderer is render_association_table:
                    parts.append(renderer(rows, "text", min_count))
                else:
                    parts.append(renderer(rows, "text"))
        parts.append("shared top ingredients")
        parts.append("\n".join(report.overlap) + "\n" if report.overlap else "(none)\n")
        return "\n".join(parts)
    if fmt == "json":
        def freq(rows):
            return [{"name": r.name, "count": r.count, "pct": r.pct} for r in rows]

        def ifreq(rows):
            return [
                {"itemset": list(r.itemset), "count": r.count, "pct": r.pct}
                for r in rows
            ]

        def assoc(rows):
            return [
                {
                    "itemset": list(r.itemset),
                    "count": r.count,
                    "support": r.support,
                    "lift": r.lift,
                    "pmi": r.pmi,
                }
                for r in rows
            ]

        doc = {
            "left_label": report.left_label,
            "right_label": report.right_label,
            "top_n": report.top_n,
            "left_thresholds": {
                "min_pair_count": report.left_thresholds.min_pair_count,
                "min_triplet_count": report.left_thresholds.min_triplet_count,
            },
            "right_thresholds": {
                "min_pair_count": report.right_thresholds.min_pair_count,
                "min_triplet_count": report.right_thresholds.min_triplet_count,
            },
            "left": {
                "frequencies": freq(report.left_frequencies),
                "pairs": ifreq(report.left_pairs),
                "triplets": ifreq(report.left_triplets),
                "pair_associations": assoc(report.left_pair_associations),
                "triplet_associations": assoc(report.left_triplet_associations),
            },
            "right": {
                "frequencies": freq(report.right_frequencies),
                "pairs": ifreq(report.right_pairs),
                "triplets": ifreq(report.right_triplets),
                "pair_associations": assoc(report.right_pair_associations),
                "triplet_associations": assoc(report.right_triplet_associations),
            },
            "overlap": list(report.overlap),
        }
        return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"
    raise ValueError(f"comparative reports support text or json, not {fmt!r}")
