"""Ingredient line parsing: quantity, unit and name extraction.

A line is parsed in fixed stages: whitespace collapse, decoration
stripping, modifier extraction, range consumption, quantity extraction,
longest-match unit lookup, then name cleanup. ``parse_ingredient`` is
exactly the composition of those stage functions, so the stages can be run
and inspected individually.

Parser state (unit dictionary, count-word table) is immutable after load;
parsing itself is a pure function over it.
"""

from __future__ import annotations

import re
import unicodedata
from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .model import (
    CorpusError,
    ParsedIngredient,
    ParsedRecipe,
    RawRecipe,
    UnitDictionary,
    canonical_name,
)
from .normalize import (
    normalize_whitespace,
    strip_decorations,
    strip_instruction_numbering,
    strip_modifiers,
)


class EmptyIngredientError(CorpusError):
    """Nothing remained of an ingredient line after stripping."""

    def __init__(self, raw: str):
        super().__init__(f"no ingredient name left in {raw!r}")
        self.raw = raw


class ConfigError(CorpusError):
    """A unit-dictionary config line could not be parsed."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


# Spelled-out quantities recognized at the start of an ingredient line.
DEFAULT_COUNT_WORDS: dict[str, float] = {
    "една": 1.0,
    "еден": 1.0,
    "едно": 1.0,
    "две": 2.0,
    "два": 2.0,
    "три": 3.0,
    "четири": 4.0,
    "пет": 5.0,
    "пола": 0.5,
    "половина": 0.5,
}

_VULGAR_FRACTION_CHARS = "½⅓¼¾⅔⅛⅜⅝⅞⅕⅖⅗⅘⅙⅚"
VULGAR_FRACTIONS: dict[str, float] = {
    c: unicodedata.numeric(c) for c in _VULGAR_FRACTION_CHARS
}

_NUMBER = r"\d+(?:[.,]\d+)?"
# "1-2", "1,5 - 2": ranges are not extractable quantities; they are kept
# as textual annotations instead.
_RANGE = re.compile(rf"({_NUMBER})\s*[-–—]\s*({_NUMBER})")
_MIXED_VULGAR = re.compile(rf"(\d+)\s*([{_VULGAR_FRACTION_CHARS}])")
_MIXED_ASCII = re.compile(r"(\d+)\s+(\d+)/(\d+)")
_ASCII_FRACTION = re.compile(r"(\d+)/(\d+)")
_DECIMAL_DOT = re.compile(r"(\d+)\.(\d+)")
_DECIMAL_COMMA = re.compile(r"(\d+),(\d+)")
_INTEGER = re.compile(r"(\d+)")
_VULGAR_ALONE = re.compile(rf"([{_VULGAR_FRACTION_CHARS}])")
_FIRST_TOKEN = re.compile(r"(\S+)")


@dataclass(frozen=True, slots=True)
class QuantityToken:
    """A recognized leading quantity and the span it consumed."""

    value: float
    source: str  # count_word | integer | decimal | fraction | vulgar_fraction
    consumed_span: tuple[int, int]


@dataclass(frozen=True, slots=True)
class CountWordTable:
    """Spelled-out quantity words mapped to their numeric values."""

    words: Mapping[str, float]

    def __post_init__(self):
        folded = {}
        for word, value in self.words.items():
            key = canonical_name(word)
            if not key:
                raise ValueError(f"empty count word: {word!r}")
            if value <= 0:
                raise ValueError(f"count word value must be positive: {word!r}={value}")
            folded[key] = float(value)
        object.__setattr__(self, "words", folded)

    @classmethod
    def default(cls) -> "CountWordTable":
        return cls(DEFAULT_COUNT_WORDS)

    def lookup(self, token: str) -> float | None:
        return self.words.get(canonical_name(token))


def _fold(s: str) -> str:
    s = unicodedata.normalize("NFC", s).casefold()
    return unicodedata.normalize("NFC", s)


def consume_range(s: str) -> tuple[str | None, str]:
    """Consume a leading numeric range like "1-2".

    Returns an annotation of the form "range:1-2" (whitespace removed)
    plus the remainder, or (None, s) when the line does not start with a
    range.
    """
    m = _RANGE.match(s)
    if m is None:
        return None, s
    annotation = "range:" + re.sub(r"\s+", "", m.group())
    return annotation, s[m.end():].lstrip()


def extract_quantity(
    s: str, table: CountWordTable | None = None
) -> tuple[QuantityToken | None, str]:
    """Recognize a quantity at the start of a normalized ingredient line.

    Handles integers, decimals with "." or a digit-comma-digit ",", ASCII
    fractions, Unicode vulgar fractions, mixed numbers ("1 ½" sums to 1.5)
    and spelled-out count words. Returns the token plus the unconsumed
    remainder; absence of a quantity is a valid outcome and leaves the
    input untouched. Leading ranges ("1-2") are never treated as a
    quantity.
    """
    table = table if table is not None else CountWordTable.default()
    if _RANGE.match(s) is not None:
        return None, s

    m = _MIXED_VULGAR.match(s)
    if m is not None:
        value = float(m.group(1)) + VULGAR_FRACTIONS[m.group(2)]
        return QuantityToken(value, "fraction", (0, m.end())), s[m.end():].lstrip()
    m = _MIXED_ASCII.match(s)
    if m is not None and int(m.group(3)) != 0:
        value = float(m.group(1)) + int(m.group(2)) / int(m.group(3))
        return QuantityToken(value, "fraction", (0, m.end())), s[m.end():].lstrip()
    m = _ASCII_FRACTION.match(s)
    if m is not None and int(m.group(2)) != 0:
        value = int(m.group(1)) / int(m.group(2))
        return QuantityToken(value, "fraction", (0, m.end())), s[m.end():].lstrip()
    m = _DECIMAL_DOT.match(s)
    if m is not None:
        value = float(m.group())
        return QuantityToken(value, "decimal", (0, m.end())), s[m.end():].lstrip()
    m = _DECIMAL_COMMA.match(s)
    if m is not None:
        value = float(m.group().replace(",", "."))
        return QuantityToken(value, "decimal", (0, m.end())), s[m.end():].lstrip()
    m = _INTEGER.match(s)
    if m is not None:
        return QuantityToken(float(m.group()), "integer", (0, m.end())), s[m.end():].lstrip()
    m = _VULGAR_ALONE.match(s)
    if m is not None:
        value = VULGAR_FRACTIONS[m.group(1)]
        return QuantityToken(value, "vulgar_fraction", (0, m.end())), s[m.end():].lstrip()

    m = _FIRST_TOKEN.match(s)
    if m is not None:
        value = table.lookup(m.group(1))
        if value is not None:
            return QuantityToken(value, "count_word", (0, m.end())), s[m.end():].lstrip()
    return None, s


def match_unit(s: str, unit_dict: UnitDictionary | None = None) -> tuple[str | None, str]:
    """Match the longest unit surface form at the start of a line.

    Surface forms are compared case-insensitively on NFC text and must end
    at a token boundary (end of string or a non-alphanumeric character),
    so "г" matches in "г месо" but never inside "гриз". With no match the
    input is returned untouched.
    """
    unit_dict = unit_dict if unit_dict is not None else default_unit_dictionary()
    for entry in unit_dict.entries:
        length = len(entry.surface)
        if len(s) < length:
            continue
        if _fold(s[:length]) != entry.surface:
            continue
        if length < len(s) and s[length].isalnum():
            continue
        return entry.canonical, s[length:].lstrip()
    return None, s


def clean_name(s: str) -> str:
    """Final name cleanup: strip edge punctuation/symbols and canonicalize."""
    i, j = 0, len(s)
    while i < j and unicodedata.category(s[i])[0] in "PS":
        i += 1
    while j > i and unicodedata.category(s[j - 1])[0] in "PS":
        j -= 1
    return canonical_name(s[i:j])


def parse_ingredient(
    raw: str,
    unit_dict: UnitDictionary | None = None,
    count_words: CountWordTable | None = None,
) -> ParsedIngredient:
    """Parse one raw ingredient line into a structured triple.

    The raw line is preserved verbatim. Modifiers stripped from the name
    come first in textual order, followed by any range annotation. Raises
    EmptyIngredientError when nothing remains after stripping (for
    example, a line of pure decoration).
    """
    text = normalize_whitespace(raw)
    text = strip_decorations(text)
    core, modifiers = strip_modifiers(text)

    annotations: list[str] = []
    quantity: float | None = None
    annotation, working = consume_range(core)
    if annotation is not None:
        annotations.append(annotation)
    else:
        token, working = extract_quantity(working, count_words)
        if token is not None:
            quantity = token.value
    unit, working = match_unit(working, unit_dict)
    name = clean_name(working)
    if not name:
        raise EmptyIngredientError(raw)
    return ParsedIngredient(
        name=name,
        raw=raw,
        quantity=quantity,
        unit=unit,
        modifiers=tuple(modifiers) + tuple(annotations),
    )


def parse_recipe(
    raw: RawRecipe,
    unit_dict: UnitDictionary | None = None,
    count_words: CountWordTable | None = None,
) -> ParsedRecipe:
    """Parse a whole recipe: ingredients, cleaned instructions, metadata.

    Ingredient lines that are empty after stripping are dropped, so the
    parsed ingredient list is the raw list minus rejected lines.
    Instruction lines are whitespace-normalized and lose their leading
    ordinals; lines empty after cleaning are dropped.
    """
    ingredients = []
    for line in raw.ingredients:
        try:
            ingredients.append(parse_ingredient(line, unit_dict, count_words))
        except EmptyIngredientError:
            continue
    instructions = []
    for line in raw.instructions:
        cleaned = strip_instruction_numbering(normalize_whitespace(line))
        if cleaned:
            instructions.append(cleaned)
    tags = [normalize_whitespace(t) for t in raw.tags]
    return ParsedRecipe(
        title=normalize_whitespace(raw.title),
        source_url=raw.source_url,
        ingredients=tuple(ingredients),
        instructions=tuple(instructions),
        tags=tuple(t for t in tags if t),
        image_url=raw.image_url,
    )


# Metric units plus the traditional cooking measures every corpus uses.
_CORE_UNITS: list[tuple[str, str, str]] = [
    ("г", "г", "mass"),
    ("кг", "кг", "mass"),
    ("мл", "мл", "volume"),
    ("шолја", "шолја", "traditional"),
    ("лажичка", "лажичка", "traditional"),
    ("кафена лажичка", "кафена лажичка", "traditional"),
]

# Additional common measures; trim or extend through a units config file.
_EXTRA_UNITS: list[tuple[str, str, str]] = [
    ("л", "л", "volume"),
    ("дл", "дл", "volume"),
    ("лажица", "лажица", "traditional"),
    ("голема лажица", "голема лажица", "traditional"),
    ("чаша", "чаша", "traditional"),
    ("парче", "парче", "count-like"),
    ("кесичка", "кесичка", "count-like"),
]

SEED_UNITS: tuple[tuple[str, str, str], ...] = tuple(_CORE_UNITS + _EXTRA_UNITS)


@lru_cache(maxsize=1)
def default_unit_dictionary() -> UnitDictionary:
    return UnitDictionary.from_entries(SEED_UNITS)


def load_unit_dictionary(path: str | Path | None = None) -> UnitDictionary:
    """Build the unit dictionary, extending the seed from a config file.

    The config format is UTF-8 text, one entry per line:
    surface<TAB>canonical<TAB>kind, with "#" comments and blank lines
    allowed. A missing path yields the built-in seed dictionary. Entries
    whose surface duplicates the seed (or another config line) raise
    DuplicateSurfaceFormError; malformed lines raise ConfigError.
    """
    entries = list(SEED_UNITS)
    if path is not None:
        path = Path(path)
        if path.exists():
            for lineno, line in enumerate(
                path.read_text(encoding="utf-8").splitlines(), 1
            ):
                stripped = line.strip()
                if not stripped or stripped.startswith("#"):
                    continue
                parts = stripped.split("\t")
                if len(parts) != 3:
                    raise ConfigError(
                        lineno, "expected surface<TAB>canonical<TAB>kind"
                    )
                surface, canonical_form, kind = (p.strip() for p in parts)
                if not surface or not canonical_form:
                    raise ConfigError(lineno, "empty surface or canonical form")
                if kind not in {"mass", "volume", "count-like", "traditional"}:
                    raise ConfigError(lineno, f"unknown kind {kind!r}")
                entries.append((surface, canonical_form, kind))
    return UnitDictionary.from_entries(entries)
