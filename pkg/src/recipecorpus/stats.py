"""Frequency, co-occurrence and association statistics over parsed corpora.

Counting uses set semantics per recipe: a recipe listing an ingredient
twice contributes one to that ingredient's count, so counts read as
"number of recipes containing the itemset". Probabilities are recipe-level
relative frequencies (count / n_recipes) with no smoothing; minimum
occurrence thresholds are the sparsity control.

Counting can be sharded: each worker produces a private ItemsetCounts and
the shards combine with ``merge_counts``, which is associative and
commutative with ``ItemsetCounts.empty()`` as identity.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from .model import (
    AssociationRecord,
    CorpusError,
    ItemsetCounts,
    ParsedRecipe,
    canonical_name,
)


class DomainError(CorpusError):
    """PMI/Lift asked for with a zero count, where they are undefined."""


@dataclass(frozen=True, slots=True)
class FrequencyRow:
    """One frequency-table row: name, count, percent of recipes."""

    name: str
    count: int
    pct: float


@dataclass(frozen=True, slots=True)
class ItemsetFrequencyRow:
    """One pair/triplet frequency row: itemset, count, percent of recipes."""

    itemset: tuple[str, ...]
    count: int
    pct: float


@dataclass(frozen=True, slots=True)
class ThresholdConfig:
    """Minimum joint counts an itemset needs before it is scored.

    Defaults to 30; 50 is the documented setting for corpora in the
    100k-recipe range. Thresholding keeps sparse itemsets from producing
    extreme Lift values.
    """

    min_pair_count: int = 30
    min_triplet_count: int = 30

    def __post_init__(self):
        if self.min_pair_count < 1 or self.min_triplet_count < 1:
            raise ValueError("minimum occurrence thresholds must be >= 1")


def _recipe_names(recipe: ParsedRecipe) -> list[str]:
    names = {canonical_name(i.name) for i in recipe.ingredients}
    names.discard("")
    return sorted(names)


def count_frequencies(
    corpus: Iterable[ParsedRecipe],
    prune_singles_below: int | None = None,
) -> ItemsetCounts:
    """Count singles, pairs and triplets across a corpus.

    Per recipe, the set of distinct canonical ingredient names is formed;
    every member, 2-subset and 3-subset of that set is counted once.
    n_recipes counts every recipe, including those contributing no names.

    By default the triplet map is complete. ``prune_singles_below``
    enables a two-pass mode (materializing the stream) that restricts the
    triplet map to ingredients whose corpus-wide single count reaches the
    given value; by anti-monotonicity this never drops a triplet at or
    above that occurrence threshold, and it avoids the cubic key blowup on
    large vocabularies.
    """
    if prune_singles_below is None:
        return _count(corpus, allowed=None)
    recipes = corpus if isinstance(corpus, (list, tuple)) else list(corpus)
    pre: dict[str, int] = {}
    for recipe in recipes:
        for name in _recipe_names(recipe):
            pre[name] = pre.get(name, 0) + 1
    allowed = {name for name, count in pre.items() if count >= prune_singles_below}
    return _count(recipes, allowed=allowed)


def _count(corpus: Iterable[ParsedRecipe], allowed: set[str] | None) -> ItemsetCounts:
    n = 0
    singles: dict[str, int] = {}
    pairs: dict[tuple[str, str], int] = {}
    triplets: dict[tuple[str, str, str], int] = {}
    for recipe in corpus:
        n += 1
        names = _recipe_names(recipe)
        for name in names:
            singles[name] = singles.get(name, 0) + 1
        for pair in combinations(names, 2):
            pairs[pair] = pairs.get(pair, 0) + 1
        triple_names = (
            names if allowed is None else [x for x in names if x in allowed]
        )
        for triplet in combinations(triple_names, 3):
            triplets[triplet] = triplets.get(triplet, 0) + 1
    return ItemsetCounts(n_recipes=n, singles=singles, pairs=pairs, triplets=triplets)


def merge_counts(a: ItemsetCounts, b: ItemsetCounts) -> ItemsetCounts:
    """Pointwise sum of two counting results."""

    def merged(left: dict, right: dict) -> dict:
        out = dict(left)
        for key, count in right.items():
            out[key] = out.get(key, 0) + count
        return out

    return ItemsetCounts(
        n_recipes=a.n_recipes + b.n_recipes,
        singles=merged(a.singles, b.singles),
        pairs=merged(a.pairs, b.pairs),
        triplets=merged(a.triplets, b.triplets),
    )


def count_frequencies_sharded(
    corpus: Iterable[ParsedRecipe], shards: int
) -> ItemsetCounts:
    """Count a corpus in round-robin shards and merge the partial counts.

    Equals the single-pass result field for field; sharding only changes
    how the work is partitioned.
    """
    if shards < 1:
        raise ValueError("shards must be >= 1")
    recipes = corpus if isinstance(corpus, (list, tuple)) else list(corpus)
    if shards == 1:
        return count_frequencies(recipes)
    parts = [count_frequencies(recipes[i::shards]) for i in range(shards)]
    total = ItemsetCounts.empty()
    for part in parts:
        total = merge_counts(total, part)
    return total


def lift(
    pair_or_triplet_count: int, member_counts: Sequence[int], n: int
) -> float:
    """Ratio of observed joint probability to the independence product.

    Values above 1 indicate positive association. Raises DomainError when
    any count is zero (the measure is undefined there; thresholding should
    prevent it).
    """
    if len(member_counts) not in (2, 3):
        raise DomainError(f"expected 2 or 3 member counts, got {len(member_counts)}")
    if n < 1 or pair_or_triplet_count < 1 or any(c < 1 for c in member_counts):
        raise DomainError("PMI/Lift undefined for zero counts")
    expected = 1.0
    for count in member_counts:
        expected *= count / n
    return (pair_or_triplet_count / n) / expected


def pmi(pair_or_triplet_count: int, member_counts: Sequence[int], n: int) -> float:
    """Base-2 log of ``lift``: 0 under independence, positive when the
    itemset co-occurs more than its members' frequencies predict."""
    return math.log2(lift(pair_or_triplet_count, member_counts, n))


def rank_associations(
    counts: ItemsetCounts,
    k: int,
    thresholds: ThresholdConfig | None = None,
    top_n: int = 10,
    candidate_pool: int | None = None,
) -> list[AssociationRecord]:
    """Score and rank itemsets of size k by Lift.

    Itemsets at or above the applicable minimum occurrence threshold are
    scored; the ranking sorts by lift descending, ties broken by count
    descending, then lexicographic itemset, and truncates to ``top_n``.
    ``candidate_pool`` optionally restricts scoring to the N most frequent
    qualifying itemsets before ranking (frequency-limited candidate set);
    the default is pure threshold-then-rank.
    """
    thresholds = thresholds if thresholds is not None else ThresholdConfig()
    if k == 2:
        table: dict = counts.pairs
        min_count = thresholds.min_pair_count
    elif k == 3:
        table = counts.triplets
        min_count = thresholds.min_triplet_count
    else:
        raise ValueError(f"k must be 2 or 3, got {k}")
    candidates = [(itemset, c) for itemset, c in table.items() if c >= min_count]
    if candidate_pool is not None:
        candidates.sort(key=lambda item: (-item[1], item[0]))
        candidates = candidates[:candidate_pool]
    n = counts.n_recipes
    records = []
    for itemset, joint in candidates:
        member_counts = [counts.singles[name] for name in itemset]
        lift_value = lift(joint, member_counts, n)
        records.append(
            AssociationRecord(
                itemset=itemset,
                count=joint,
                support=joint / n,
                pmi=math.log2(lift_value),
                lift=lift_value,
            )
        )
    records.sort(key=lambda r: (-r.lift, -r.count, r.itemset))
    return records[: max(top_n, 0)]


def top_frequencies(counts: ItemsetCounts, top_n: int = 20) -> list[FrequencyRow]:
    """Most frequent single ingredients, count descending, ties lexicographic."""
    ranked = sorted(counts.singles.items(), key=lambda item: (-item[1], item[0]))
    n = counts.n_recipes
    return [
        FrequencyRow(name=name, count=count, pct=100.0 * count / n)
        for name, count in ranked[: max(top_n, 0)]
    ]


def top_itemset_frequencies(
    counts: ItemsetCounts, k: int, top_n: int = 10
) -> list[ItemsetFrequencyRow]:
    """Most frequent pairs (k=2) or triplets (k=3) by count."""
    if k == 2:
        table: dict = counts.pairs
    elif k == 3:
        table = counts.triplets
    else:
        raise ValueError(f"k must be 2 or 3, got {k}")
    ranked = sorted(table.items(), key=lambda item: (-item[1], item[0]))
    n = counts.n_recipes
    return [
        ItemsetFrequencyRow(itemset=itemset, count=count, pct=100.0 * count / n)
        for itemset, count in ranked[: max(top_n, 0)]
    ]
