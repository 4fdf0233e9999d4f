"""Command-line pipeline: parse, stats, compare, summarize.

Stages are separated so intermediate parsed corpora are inspectable
artifacts: ``parse`` turns a raw corpus into a parsed corpus, ``stats``
mines a parsed corpus, ``compare`` mines two and reports side by side,
``summarize`` prints corpus summary statistics.

Exit codes are a stable contract: 0 success, 1 data error, 2 I/O error,
64 usage error. Nothing here is randomized; identical runs produce
identical bytes.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .ingest import (
    EncodingError,
    SchemaViolation,
    read_corpus,
    read_parsed_corpus,
    summarize_corpus,
    write_corpus,
)
from .model import CorpusError, InvalidRecordError, ItemsetCounts
from .parse import ConfigError, load_unit_dictionary, parse_recipe
from .report import (
    compare_corpora,
    render_association_table,
    render_comparative_report,
    render_frequency_table,
    render_itemset_frequency_table,
)
from .stats import (
    ThresholdConfig,
    count_frequencies_sharded,
    rank_associations,
    top_frequencies,
    top_itemset_frequencies,
)

EXIT_OK = 0
EXIT_DATA = 1
EXIT_IO = 2
EXIT_USAGE = 64


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_threshold_flags(sub):
    sub.add_argument(
        "--min-pair-count", type=int, default=30,
        help="minimum recipe count for a pair to be scored (default 30)",
    )
    sub.add_argument(
        "--min-triplet-count", type=int, default=30,
        help="minimum recipe count for a triplet to be scored (default 30)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="recipecorpus",
        description="Parse recipe corpora and mine ingredient co-occurrence statistics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_parse = sub.add_parser("parse", help="parse a raw corpus into a parsed corpus")
    p_parse.add_argument("input", help="raw corpus (.jsonl)")
    p_parse.add_argument("output", help="parsed corpus to write (.jsonl)")
    p_parse.add_argument("--units", help="unit dictionary config file")
    p_parse.add_argument(
        "--strict", action="store_true",
        help="abort on the first malformed input line",
    )
    p_parse.add_argument(
        "--shards", type=int, default=1,
        help="worker shard count (outputs are order-stabilized either way)",
    )
    p_parse.set_defaults(func=cmd_parse)

    p_stats = sub.add_parser("stats", help="frequency and association tables")
    p_stats.add_argument("input", help="parsed corpus (.jsonl)")
    _add_threshold_flags(p_stats)
    p_stats.add_argument("--top-n", type=int, default=20)
    p_stats.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_stats.add_argument(
        "--output",
        help="directory for csv/json table files (default current directory)",
    )
    p_stats.add_argument("--shards", type=int, default=1)
    p_stats.set_defaults(func=cmd_stats)

    p_cmp = sub.add_parser("compare", help="two-corpus comparative report")
    p_cmp.add_argument("left", help="parsed corpus (.jsonl)")
    p_cmp.add_argument("right", help="parsed corpus (.jsonl)")
    _add_threshold_flags(p_cmp)
    p_cmp.add_argument(
        "--right-min-pair-count", type=int, default=None,
        help="override pair threshold for the right corpus",
    )
    p_cmp.add_argument(
        "--right-min-triplet-count", type=int, default=None,
        help="override triplet threshold for the right corpus",
    )
    p_cmp.add_argument("--top-n", type=int, default=20)
    p_cmp.add_argument("--format", choices=("text", "json"), default="text")
    p_cmp.add_argument("--output", help="directory for the json report file")
    p_cmp.add_argument("--shards", type=int, default=1)
    p_cmp.set_defaults(func=cmd_compare)

    p_sum = sub.add_parser("summarize", help="corpus summary statistics")
    p_sum.add_argument("input", help="parsed corpus (.jsonl)")
    p_sum.set_defaults(func=cmd_summarize)

    return parser


def cmd_parse(args) -> int:
    unit_dict = load_unit_dictionary(args.units)
    rejections: list[str] = []
    totals = {"recipes": 0, "ingredients": 0, "q_and_u": 0, "q_only": 0,
              "u_only": 0, "neither": 0, "empty": 0}

    def parsed_records():
        for raw in read_corpus(args.input, strict=args.strict, rejection_log=rejections):
            parsed = parse_recipe(raw, unit_dict)
            totals["recipes"] += 1
            totals["ingredients"] += len(parsed.ingredients)
            totals["empty"] += len(raw.ingredients) - len(parsed.ingredients)
            for ing in parsed.ingredients:
                if ing.quantity is not None and ing.unit is not None:
                    totals["q_and_u"] += 1
                elif ing.quantity is not None:
                    totals["q_only"] += 1
                elif ing.unit is not None:
                    totals["u_only"] += 1
                else:
                    totals["neither"] += 1
            yield parsed

    tmp_path = Path(str(args.output) + ".tmp")
    try:
        write_corpus(parsed_records(), tmp_path)
        os.replace(tmp_path, args.output)
    except BaseException:
        tmp_path.unlink(missing_ok=True)
        raise
    for line in rejections:
        print(line, file=sys.stderr)
    print(f"recipes processed: {totals['recipes']}")
    print(f"recipes rejected: {len(rejections)}")
    print(f"ingredients parsed: {totals['ingredients']}")
    print(f"  with quantity and unit: {totals['q_and_u']}")
    print(f"  with quantity only: {totals['q_only']}")
    print(f"  with unit only: {totals['u_only']}")
    print(f"  with neither: {totals['neither']}")
    print(f"empty ingredient lines rejected: {totals['empty']}")
    return EXIT_OK


def _count_corpus(path: str, shards: int) -> ItemsetCounts:
    records = list(read_parsed_corpus(path, strict=True))
    counts = count_frequencies_sharded(records, max(shards, 1))
    counts.validate()
    return counts


def cmd_stats(args) -> int:
    thresholds = ThresholdConfig(args.min_pair_count, args.min_triplet_count)
    counts = _count_corpus(args.input, args.shards)
    sections = [
        ("top_ingredients", "top ingredients", render_frequency_table,
         top_frequencies(counts, args.top_n), None),
        ("top_pairs", "top pairs", render_itemset_frequency_table,
         top_itemset_frequencies(counts, 2, args.top_n), None),
        ("top_triplets", "top triplets", render_itemset_frequency_table,
         top_itemset_frequencies(counts, 3, args.top_n), None),
        ("pair_associations", "pairs by lift", render_association_table,
         rank_associations(counts, 2, thresholds, args.top_n),
         thresholds.min_pair_count),
        ("triplet_associations", "triplets by lift", render_association_table,
         rank_associations(counts, 3, thresholds, args.top_n),
         thresholds.min_triplet_count),
    ]
    if args.format == "text":
        blocks = []
        for _, title, renderer, rows, min_count in sections:
            if renderer is render_association_table:
                body = renderer(rows, "text", min_count)
            else:
                body = renderer(rows, "text")
            blocks.append(f"== {title} ==\n{body}")
        print("\n".join(blocks), end="")
        return EXIT_OK
    out_dir = Path(args.output) if args.output else Path(".")
    out_dir.mkdir(parents=True, exist_ok=True)
    for stem, _, renderer, rows, min_count in sections:
        if renderer is render_association_table:
            document = renderer(rows, args.format, min_count)
        else:
            document = renderer(rows, args.format)
        target = out_dir / f"{stem}.{args.format}"
        target.write_text(document, encoding="utf-8")
        print(f"wrote {target}")
    return EXIT_OK


def cmd_compare(args) -> int:
    left_thresholds = ThresholdConfig(args.min_pair_count, args.min_triplet_count)
    right_thresholds = ThresholdConfig(
        args.right_min_pair_count
        if args.right_min_pair_count is not None
        else args.min_pair_count,
        args.right_min_triplet_count
        if args.right_min_triplet_count is not None
        else args.min_triplet_count,
    )
    left_counts = _count_corpus(args.left, args.shards)
    right_counts = _count_corpus(args.right, args.shards)
    report = compare_corpora(
        left_counts,
        right_counts,
        top_n=args.top_n,
        left_thresholds=left_thresholds,
        right_thresholds=right_thresholds,
        left_label=Path(args.left).stem,
        right_label=Path(args.right).stem,
    )
    document = render_comparative_report(report, args.format)
    if args.format == "text":
        print(document, end="")
    else:
        out_dir = Path(args.output) if args.output else Path(".")
        out_dir.mkdir(parents=True, exist_ok=True)
        target = out_dir / "comparison.json"
        target.write_text(document, encoding="utf-8")
        print(f"wrote {target}")
    return EXIT_OK


def _fmt_mean(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.1f}"


def cmd_summarize(args) -> int:
    summary = summarize_corpus(read_parsed_corpus(args.input, strict=True))
    print(f"Total recipes collected: {summary.total_recipes:,}")
    print(f"Unique ingredients: {summary.unique_ingredients:,}")
    print(f"Average ingredients per recipe: {_fmt_mean(summary.mean_ingredients)}")
    print(f"Total instructions: {summary.total_instructions:,}")
    print(f"Average instructions per recipe: {_fmt_mean(summary.mean_instructions)}")
    print(f"Recipes with images: {summary.recipes_with_images:,}")
    print(f"Recipes with tags: {summary.recipes_with_tags:,}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SchemaViolation, EncodingError, InvalidRecordError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except CorpusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        # Invalid configuration values (thresholds, shard counts, formats).
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
