"""Shared data types and canonicalization rules for recipe corpora.

Every type here is an immutable value object: construction validates the
type's invariants, and a successfully built instance is safe to share
between threads or worker processes without coordination.
"""

from __future__ import annotations

import math
import re
import unicodedata
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from urllib.parse import urlparse


class CorpusError(Exception):
    """Base class for all recipe-corpus errors."""


class InvalidRecordError(CorpusError):
    """A record field violates one of its invariants."""

    def __init__(self, field_name: str, reason: str):
        super().__init__(f"{field_name}: {reason}")
        self.field_name = field_name
        self.reason = reason


class ArityError(CorpusError):
    """An itemset was not a pair or a triplet."""


class DuplicateMemberError(CorpusError):
    """An itemset contained the same member more than once."""


class DuplicateSurfaceFormError(CorpusError):
    """Two unit entries share a surface form after canonicalization."""


class InvariantViolation(CorpusError):
    """A counting structure failed its validation pass."""


_WS_RUN = re.compile(r"\s+")

# Cleaned instruction lines must not start with "1. ", "12) ", "3 " etc.
_ORDINAL_PREFIX = re.compile(r"\d+[.)]?\s")


def canonical_name(raw_name: str) -> str:
    """Return the canonical form of an ingredient name.

    Applies NFC normalization and full case folding (NFC is re-applied
    because folding can emit decomposed sequences), collapses whitespace
    runs to single ASCII spaces and trims. Idempotent; empty input gives
    empty output, which callers are expected to reject themselves.
    """
    s = unicodedata.normalize("NFC", raw_name).casefold()
    s = unicodedata.normalize("NFC", s)
    return _WS_RUN.sub(" ", s).strip()


def canonical_itemset(names: Iterable[str]) -> tuple[str, ...]:
    """Sort 2 or 3 distinct canonical names into a stable itemset key.

    Sorting is by code point, so any permutation of the same member set
    produces an identical tuple.
    """
    members = tuple(names)
    if len(members) not in (2, 3):
        raise ArityError(f"itemset needs 2 or 3 members, got {len(members)}")
    if len(set(members)) != len(members):
        raise DuplicateMemberError(f"duplicate member in {members!r}")
    return tuple(sorted(members))


def _require_absolute_url(url: str) -> None:
    parts = urlparse(url)
    if not parts.scheme or not parts.netloc:
        raise InvalidRecordError("source_url", f"not an absolute URL: {url!r}")


def _require_text_items(field_name: str, items: Sequence[object]) -> None:
    for item in items:
        if not isinstance(item, str):
            raise InvalidRecordError(field_name, f"non-text entry: {item!r}")


@dataclass(frozen=True, slots=True)
class RawRecipe:
    """A recipe as captured from a source page, before any parsing.

    Ingredient and instruction lines are kept verbatim; cleaning them is
    the normalization stage's job.
    """

    title: str
    source_url: str
    ingredients: tuple[str, ...]
    instructions: tuple[str, ...] = ()
    tags: tuple[str, ...] = ()
    image_url: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "ingredients", tuple(self.ingredients))
        object.__setattr__(self, "instructions", tuple(self.instructions))
        object.__setattr__(self, "tags", tuple(self.tags))
        if not isinstance(self.title, str) or not self.title.strip():
            raise InvalidRecordError("title", "empty after trimming")
        if not isinstance(self.source_url, str):
            raise InvalidRecordError("source_url", "not text")
        _require_absolute_url(self.source_url)
        if not self.ingredients:
            raise InvalidRecordError("ingredients", "empty list")
        _require_text_items("ingredients", self.ingredients)
        _require_text_items("instructions", self.instructions)
        _require_text_items("tags", self.tags)
        if self.image_url is not None and not isinstance(self.image_url, str):
            raise InvalidRecordError("image_url", "not text")


@dataclass(frozen=True, slots=True)
class ParsedIngredient:
    """One ingredient line as a structured (quantity, unit, name) triple.

    ``raw`` preserves the input line byte-for-byte. ``quantity`` is absent
    (never silently zero) when no leading quantity could be recognized.
    ``modifiers`` holds fragments stripped from the name, such as
    parenthetical clarifications, trailing comma clauses and range
    annotations, in the order they occurred.
    """

    name: str
    raw: str
    quantity: float | None = None
    unit: str | None = None
    modifiers: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "modifiers", tuple(self.modifiers))
        if not isinstance(self.name, str) or not self.name:
            raise InvalidRecordError("name", "empty")
        if self.name != self.name.strip():
            raise InvalidRecordError("name", "leading or trailing whitespace")
        if "(" in self.name or ")" in self.name:
            raise InvalidRecordError("name", f"parenthetical content in {self.name!r}")
        if not isinstance(self.raw, str):
            raise InvalidRecordError("raw", "not text")
        if self.quantity is not None:
            if isinstance(self.quantity, bool) or not isinstance(self.quantity, (int, float)):
                raise InvalidRecordError("quantity", f"not a number: {self.quantity!r}")
            if not math.isfinite(self.quantity) or self.quantity < 0:
                raise InvalidRecordError("quantity", f"not finite and >= 0: {self.quantity!r}")
        if self.unit is not None and (not isinstance(self.unit, str) or not self.unit):
            raise InvalidRecordError("unit", "empty or not text")
        _require_text_items("modifiers", self.modifiers)


@dataclass(frozen=True, slots=True)
class ParsedRecipe:
    """A fully processed recipe: parsed ingredients plus cleaned metadata."""

    title: str
    source_url: str
    ingredients: tuple[ParsedIngredient, ...]
    instructions: tuple[str, ...] = ()
    tags: tuple[str, ...] = ()
    image_url: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "ingredients", tuple(self.ingredients))
        object.__setattr__(self, "instructions", tuple(self.instructions))
        object.__setattr__(self, "tags", tuple(self.tags))
        if not isinstance(self.title, str) or not self.title.strip():
            raise InvalidRecordError("title", "empty after trimming")
        _require_absolute_url(self.source_url)
        for ing in self.ingredients:
            if not isinstance(ing, ParsedIngredient):
                raise InvalidRecordError("ingredients", f"not a ParsedIngredient: {ing!r}")
        _require_text_items("instructions", self.instructions)
        for line in self.instructions:
            if _ORDINAL_PREFIX.match(line):
                raise InvalidRecordError(
                    "instructions", f"leading ordinal numbering not stripped: {line!r}"
                )
        _require_text_items("tags", self.tags)
        if self.image_url is not None and not isinstance(self.image_url, str):
            raise InvalidRecordError("image_url", "not text")


UNIT_KINDS = frozenset({"mass", "volume", "count-like", "traditional"})


@dataclass(frozen=True, slots=True)
class UnitEntry:
    surface: str  # casefolded, NFC-normalized surface form
    canonical: str  # canonical unit name (lowercase NFC)
    kind: str  # one of UNIT_KINDS


@dataclass(frozen=True, slots=True)
class UnitDictionary:
    """Measurement-unit surface forms, iterated longest-first.

    Entries are sorted by descending surface length (ties broken
    lexicographically) so compound units are always tried before any of
    their substrings. Surface forms are unique after case folding and NFC
    normalization.
    """

    entries: tuple[UnitEntry, ...]

    @classmethod
    def from_entries(cls, raw_entries: Iterable[tuple[str, str, str]]) -> "UnitDictionary":
        seen: set[str] = set()
        prepared: list[UnitEntry] = []
        for surface, canonical_form, kind in raw_entries:
            key = canonical_name(surface)
            if not key:
                raise ValueError(f"empty surface form: {surface!r}")
            if kind not in UNIT_KINDS:
                raise ValueError(f"unknown unit kind {kind!r} for {surface!r}")
            if key in seen:
                raise DuplicateSurfaceFormError(key)
            seen.add(key)
            prepared.append(UnitEntry(key, canonical_name(canonical_form), kind))
        prepared.sort(key=lambda e: (-len(e.surface), e.surface))
        return cls(tuple(prepared))

    def __iter__(self) -> Iterator[UnitEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def surfaces(self) -> tuple[str, ...]:
        return tuple(e.surface for e in self.entries)


@dataclass(frozen=True, slots=True)
class ItemsetCounts:
    """Recipe count plus occurrence counts for 1/2/3-itemsets.

    Keys of ``pairs`` and ``triplets`` are canonical itemsets: sorted,
    duplicate-free name tuples. Counting uses set semantics per recipe, so
    no itemset can be counted more than once for the same recipe.
    """

    n_recipes: int
    singles: dict[str, int]
    pairs: dict[tuple[str, str], int]
    triplets: dict[tuple[str, str, str], int]

    @classmethod
    def empty(cls) -> "ItemsetCounts":
        return cls(0, {}, {}, {})

    def validate(self) -> None:
        """Check all counting invariants; raises InvariantViolation."""
        if self.n_recipes < 0:
            raise InvariantViolation("negative n_recipes")
        for name, count in self.singles.items():
            if not 1 <= count <= self.n_recipes:
                raise InvariantViolation(f"single count out of range: {name!r}={count}")
        for size, table in ((2, self.pairs), (3, self.triplets)):
            for itemset, count in table.items():
                if len(itemset) != size or len(set(itemset)) != size:
                    raise InvariantViolation(f"malformed itemset key: {itemset!r}")
                if tuple(sorted(itemset)) != tuple(itemset):
                    raise InvariantViolation(f"itemset key not sorted: {itemset!r}")
                if not 1 <= count <= self.n_recipes:
                    raise InvariantViolation(f"count out of range: {itemset!r}={count}")
                for member in itemset:
                    if count > self.singles.get(member, 0):
                        raise InvariantViolation(
                            f"count({itemset!r})={count} exceeds count({member!r})"
                        )


@dataclass(frozen=True, slots=True)
class AssociationRecord:
    """One ranked association row: itemset, count, support, PMI and Lift.

    PMI is the base-2 logarithm of Lift, so the two fields must agree to
    within 1e-9.
    """

    itemset: tuple[str, ...]
    count: int
    support: float
    pmi: float
    lift: float

    def __post_init__(self):
        object.__setattr__(self, "itemset", tuple(self.itemset))
        if len(self.itemset) not in (2, 3):
            raise ArityError(f"itemset needs 2 or 3 members, got {len(self.itemset)}")
        if not 0.0 <= self.support <= 1.0:
            raise InvalidRecordError("support", f"outside [0, 1]: {self.support!r}")
        if not self.lift > 0:
            raise InvalidRecordError("lift", f"not positive: {self.lift!r}")
        if abs(self.pmi - math.log2(self.lift)) > 1e-9:
            raise InvalidRecordError("pmi", "pmi does not equal log2(lift)")
