"""Reading, writing and validating line-delimited recipe corpora.

The corpus file format is UTF-8 JSON lines: one self-delimited record
object per LF-terminated line, no BOM. Field order is fixed (title,
source_url, image_url, ingredients, instructions, tags, plus
parsed_ingredients for parsed records) and optional fields are omitted
rather than null-valued, so every record has one canonical byte
representation and write/read round-trips are exact.

Live crawling is out of scope; extraction adapters consume saved HTML
page fixtures only.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from html.parser import HTMLParser
from pathlib import Path
from typing import Protocol, runtime_checkable

from .model import (
    CorpusError,
    InvalidRecordError,
    ParsedIngredient,
    ParsedRecipe,
    RawRecipe,
    canonical_name,
)


class SchemaViolation(CorpusError):
    """A corpus line failed schema validation (strict mode)."""

    def __init__(self, line: int, field: str, reason: str):
        super().__init__(f"line {line}: {field}: {reason}")
        self.line = line
        self.field = field
        self.reason = reason


class EncodingError(CorpusError):
    """A corpus line contained bytes that are not valid UTF-8."""


class ExtractionError(CorpusError):
    """An adapter could not locate a required field in a page."""

    def __init__(self, site_id: str, missing_field: str):
        super().__init__(f"{site_id}: could not extract {missing_field}")
        self.site_id = site_id
        self.missing_field = missing_field


@dataclass(frozen=True, slots=True)
class CorpusHandle:
    """Where a corpus was written and how many lines it holds."""

    path: Path
    record_count: int
    rejected_count: int


@runtime_checkable
class SiteAdapter(Protocol):
    """Turns one saved HTML page into a RawRecipe.

    Extraction must be deterministic: identical HTML yields an identical
    record.
    """

    site_id: str

    def extract(self, html: str) -> RawRecipe: ...


def _reject(lineno: int, reason: str, rejection_log: list[str] | None) -> None:
    if rejection_log is not None:
        rejection_log.append(f"LINE {lineno}: {reason}")


def _get_text(obj: dict, key: str, required: bool = True) -> str | None:
    if key not in obj:
        if required:
            raise InvalidRecordError(key, "missing")
        return None
    value = obj[key]
    if not isinstance(value, str):
        raise InvalidRecordError(key, f"not text: {value!r}")
    return value


def _get_text_list(obj: dict, key: str, required: bool = True) -> list[str]:
    if key not in obj:
        if required:
            raise InvalidRecordError(key, "missing")
        return []
    value = obj[key]
    if not isinstance(value, list) or any(not isinstance(v, str) for v in value):
        raise InvalidRecordError(key, "not a list of text")
    return value


def _raw_from_obj(obj: object) -> RawRecipe:
    if not isinstance(obj, dict):
        raise InvalidRecordError("record", "not an object")
    return RawRecipe(
        title=_get_text(obj, "title"),
        source_url=_get_text(obj, "source_url"),
        ingredients=tuple(_get_text_list(obj, "ingredients")),
        instructions=tuple(_get_text_list(obj, "instructions", required=False)),
        tags=tuple(_get_text_list(obj, "tags", required=False)),
        image_url=_get_text(obj, "image_url", required=False),
    )


def _ingredient_from_obj(obj: object) -> ParsedIngredient:
    if not isinstance(obj, dict):
        raise InvalidRecordError("parsed_ingredients", "entry is not an object")
    quantity = obj.get("quantity")
    if quantity is not None and (
        isinstance(quantity, bool) or not isinstance(quantity, (int, float))
    ):
        raise InvalidRecordError("quantity", f"not a number: {quantity!r}")
    return ParsedIngredient(
        name=_get_text(obj, "name"),
        raw=_get_text(obj, "raw"),
        quantity=quantity,
        unit=_get_text(obj, "unit", required=False),
        modifiers=tuple(_get_text_list(obj, "modifiers", required=False)),
    )


def _parsed_from_obj(obj: object) -> ParsedRecipe:
    if not isinstance(obj, dict):
        raise InvalidRecordError("record", "not an object")
    if "parsed_ingredients" not in obj:
        raise InvalidRecordError("parsed_ingredients", "missing")
    entries = obj["parsed_ingredients"]
    if not isinstance(entries, list):
        raise InvalidRecordError("parsed_ingredients", "not a list")
    ingredients = tuple(_ingredient_from_obj(e) for e in entries)
    if "ingredients" in obj:
        raws = _get_text_list(obj, "ingredients")
        if raws != [i.raw for i in ingredients]:
            raise InvalidRecordError(
                "ingredients", "does not match parsed_ingredients raw lines"
            )
    return ParsedRecipe(
        title=_get_text(obj, "title"),
        source_url=_get_text(obj, "source_url"),
        ingredients=ingredients,
        instructions=tuple(_get_text_list(obj, "instructions", required=False)),
        tags=tuple(_get_text_list(obj, "tags", required=False)),
        image_url=_get_text(obj, "image_url", required=False),
    )


def _read_lines(path, strict, rejection_log, from_obj):
    with open(path, "rb") as fh:
        for lineno, raw_line in enumerate(fh, 1):
            line = raw_line.rstrip(b"\r\n")
            try:
                text = line.decode("utf-8")
            except UnicodeDecodeError as exc:
                if strict:
                    raise EncodingError(f"line {lineno}: {exc}") from exc
                _reject(lineno, "invalid UTF-8", rejection_log)
                continue
            try:
                obj = json.loads(text)
            except json.JSONDecodeError as exc:
                if strict:
                    raise SchemaViolation(lineno, "json", str(exc)) from exc
                _reject(lineno, f"json: {exc}", rejection_log)
                continue
            try:
                yield from_obj(obj)
            except InvalidRecordError as exc:
                if strict:
                    raise SchemaViolation(lineno, exc.field_name, exc.reason) from exc
                _reject(lineno, f"{exc.field_name}: {exc.reason}", rejection_log)


def read_corpus(
    path: str | Path,
    *,
    strict: bool = False,
    rejection_log: list[str] | None = None,
) -> Iterator[RawRecipe]:
    """Yield one validated RawRecipe per well-formed corpus line.

    In lenient mode (the default) malformed lines are appended to
    ``rejection_log`` as "LINE <n>: <reason>" and skipped; in strict mode
    the first malformed line raises SchemaViolation (or EncodingError for
    undecodable bytes). A record that reaches the caller never violates
    the RawRecipe invariants.
    """
    return _read_lines(path, strict, rejection_log, _raw_from_obj)


def read_parsed_corpus(
    path: str | Path,
    *,
    strict: bool = False,
    rejection_log: list[str] | None = None,
) -> Iterator[ParsedRecipe]:
    """Yield one validated ParsedRecipe per well-formed corpus line."""
    return _read_lines(path, strict, rejection_log, _parsed_from_obj)


def _ingredient_to_obj(ing: ParsedIngredient) -> dict:
    obj: dict = {}
    if ing.quantity is not None:
        obj["quantity"] = ing.quantity
    if ing.unit is not None:
        obj["unit"] = ing.unit
    obj["name"] = ing.name
    obj["raw"] = ing.raw
    obj["modifiers"] = list(ing.modifiers)
    return obj


def record_to_obj(record: RawRecipe | ParsedRecipe) -> dict:
    """Serialize a record with the documented fixed key order."""
    obj: dict = {"title": record.title, "source_url": record.source_url}
    if record.image_url is not None:
        obj["image_url"] = record.image_url
    if isinstance(record, ParsedRecipe):
        obj["ingredients"] = [i.raw for i in record.ingredients]
    else:
        obj["ingredients"] = list(record.ingredients)
    obj["instructions"] = list(record.instructions)
    obj["tags"] = list(record.tags)
    if isinstance(record, ParsedRecipe):
        obj["parsed_ingredients"] = [_ingredient_to_obj(i) for i in record.ingredients]
    return obj


def write_corpus(
    records: Iterable[RawRecipe | ParsedRecipe], path: str | Path
) -> CorpusHandle:
    """Write records as UTF-8 JSON lines, one per LF-terminated line."""
    path = Path(path)
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for record in records:
            fh.write(json.dumps(record_to_obj(record), ensure_ascii=False))
            fh.write("\n")
            count += 1
    return CorpusHandle(path=path, record_count=count, rejected_count=0)


def extract_recipe(html: str, adapter: SiteAdapter) -> RawRecipe:
    """Run an adapter over a saved page and validate the result."""
    try:
        return adapter.extract(html)
    except InvalidRecordError as exc:
        raise ExtractionError(adapter.site_id, exc.field_name) from exc


class _RecipePageParser(HTMLParser):
    """Collects recipe fields from class-annotated markup.

    Understands the common fixture layout: an <h1> title, a canonical
    <link> (or og:url meta) for the source URL, list items inside
    containers whose class includes "ingredients" or "instructions",
    elements with class "tag", and an og:image meta or plain <img> for the
    picture. List-item text is kept verbatim apart from edge whitespace;
    cleaning decorations is the normalize stage's job.
    """

    _VOID_TAGS = frozenset(
        {"area", "base", "br", "col", "embed", "hr", "img", "input",
         "link", "meta", "param", "source", "track", "wbr"}
    )

    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.title_parts: list[str] = []
        self.source_url: str | None = None
        self.image_url: str | None = None
        self.ingredients: list[str] = []
        self.instructions: list[str] = []
        self.tags: list[str] = []
        self._in_h1 = False
        self._container: str | None = None
        self._container_depth = 0
        self._li_parts: list[str] | None = None
        self._tag_parts: list[str] | None = None
        self._tag_element: str | None = None

    @staticmethod
    def _classes(attrs) -> set[str]:
        for key, value in attrs:
            if key == "class" and value:
                return set(value.split())
        return set()

    def handle_starttag(self, tag, attrs):
        classes = self._classes(attrs)
        attr_map = dict(attrs)
        if tag == "h1" and not self.title_parts:
            self._in_h1 = True
        elif tag == "link" and attr_map.get("rel") == "canonical":
            self.source_url = self.source_url or attr_map.get("href")
        elif tag == "meta":
            prop = attr_map.get("property")
            if prop == "og:url" and self.source_url is None:
                self.source_url = attr_map.get("content")
            elif prop == "og:image" and self.image_url is None:
                self.image_url = attr_map.get("content")
        elif tag == "img" and self.image_url is None:
            self.image_url = attr_map.get("src")
        if tag in self._VOID_TAGS:
            return
        if self._container is not None:
            self._container_depth += 1
            if tag == "li":
                self._li_parts = []
        elif "ingredients" in classes:
            self._container = "ingredients"
            self._container_depth = 0
        elif "instructions" in classes:
            self._container = "instructions"
            self._container_depth = 0
        if "tag" in classes and self._tag_parts is None:
            self._tag_parts = []
            self._tag_element = tag

    def handle_endtag(self, tag):
        if tag == "h1":
            self._in_h1 = False
        if tag in self._VOID_TAGS:
            return
        if self._tag_parts is not None and tag == self._tag_element:
            text = "".join(self._tag_parts).strip()
            if text:
                self.tags.append(text)
            self._tag_parts = None
            self._tag_element = None
        if self._container is not None:
            if tag == "li" and self._li_parts is not None:
                text = "".join(self._li_parts).strip()
                if text:
                    target = (
                        self.ingredients
                        if self._container == "ingredients"
                        else self.instructions
                    )
                    target.append(text)
                self._li_parts = None
            if self._container_depth == 0:
                self._container = None
            else:
                self._container_depth -= 1

    def handle_data(self, data):
        if self._in_h1:
            self.title_parts.append(data)
        if self._li_parts is not None:
            self._li_parts.append(data)
        if self._tag_parts is not None:
            self._tag_parts.append(data)


@dataclass(frozen=True, slots=True)
class ClassMarkupAdapter:
    """Adapter for saved pages that mark fields with CSS classes."""

    site_id: str = "generic"

    def extract(self, html: str) -> RawRecipe:
        parser = _RecipePageParser()
        parser.feed(html)
        parser.close()
        title = " ".join("".join(parser.title_parts).split())
        if not title:
            raise ExtractionError(self.site_id, "title")
        if not parser.ingredients:
            raise ExtractionError(self.site_id, "ingredients")
        if not parser.source_url:
            raise ExtractionError(self.site_id, "source_url")
        return RawRecipe(
            title=title,
            source_url=parser.source_url,
            ingredients=tuple(parser.ingredients),
            instructions=tuple(parser.instructions),
            tags=tuple(parser.tags),
            image_url=parser.image_url,
        )


@dataclass(frozen=True, slots=True)
class CorpusSummary:
    """The summary metric set for a parsed corpus.

    Means are None (reported as absent) for an empty corpus.
    """

    total_recipes: int
    unique_ingredients: int
    mean_ingredients: float | None
    total_instructions: int
    mean_instructions: float | None
    recipes_with_images: int
    recipes_with_tags: int


def summarize_corpus(corpus: Iterable[ParsedRecipe]) -> CorpusSummary:
    """Compute corpus summary statistics in one pass.

    The result depends only on the multiset of records, not their order.
    """
    total = 0
    total_ingredients = 0
    total_instructions = 0
    with_images = 0
    with_tags = 0
    names: set[str] = set()
    for recipe in corpus:
        total += 1
        total_ingredients += len(recipe.ingredients)
        total_instructions += len(recipe.instructions)
        if recipe.image_url is not None:
            with_images += 1
        if recipe.tags:
            with_tags += 1
        for ing in recipe.ingredients:
            name = canonical_name(ing.name)
            if name:
                names.add(name)
    return CorpusSummary(
        total_recipes=total,
        unique_ingredients=len(names),
        mean_ingredients=total_ingredients / total if total else None,
        total_instructions=total_instructions,
        mean_instructions=total_instructions / total if total else None,
        recipes_with_images=with_images,
        recipes_with_tags=with_tags,
    )
