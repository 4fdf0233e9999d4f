from __future__ import annotations

from fractions import Fraction

import pytest

from recipecorpus import (
    ConfigError,
    CountWordTable,
    EmptyIngredientError,
    RawRecipe,
    UnitDictionary,
    consume_range,
    default_unit_dictionary,
    extract_quantity,
    load_unit_dictionary,
    match_unit,
    parse_ingredient,
    parse_recipe,
)
from recipecorpus.model import DuplicateSurfaceFormError
from recipecorpus.parse import clean_name
from recipecorpus.normalize import (
    normalize_whitespace,
    strip_decorations,
    strip_modifiers,
)


class TestExtractQuantity:
    def test_leading_integer_fused_unit(self):
        token, rest = extract_quantity("500г месо")
        assert token.value == 500
        assert token.source == "integer"
        assert rest == "г месо"

    def test_count_word(self):
        token, rest = extract_quantity("пола лажичка сол")
        assert token.value == 0.5
        assert token.source == "count_word"
        assert rest == "лажичка сол"

    def test_no_leading_quantity(self):
        token, rest = extract_quantity("сол по вкус")
        assert token is None
        assert rest == "сол по вкус"

    def test_mixed_number_sums(self):
        # Oracle: decimal arithmetic over exact fractions.
        expected = float(Fraction(1) + Fraction(1, 2))
        token, rest = extract_quantity("1 ½ шолја")
        assert token.value == expected == 1.5
        assert token.source == "fraction"
        assert rest == "шолја"

    def test_mixed_ascii_fraction(self):
        expected = float(Fraction(2) + Fraction(3, 4))
        token, rest = extract_quantity("2 3/4 шолји")
        assert token.value == expected
        assert rest == "шолји"

    def test_ascii_fraction(self):
        token, _ = extract_quantity("1/2 шолја")
        assert token.value == float(Fraction(1, 2))
        assert token.source == "fraction"

    def test_decimal_dot(self):
        token, _ = extract_quantity("0.5 л млеко")
        assert token.value == 0.5
        assert token.source == "decimal"

    def test_decimal_comma(self):
        token, rest = extract_quantity("1,5 кг брашно")
        assert token.value == 1.5
        assert token.source == "decimal"
        assert rest == "кг брашно"

    def test_vulgar_fraction_alone(self):
        token, _ = extract_quantity("½ шолја")
        assert token.value == 0.5
        assert token.source == "vulgar_fraction"

    def test_range_is_not_a_quantity(self):
        token, rest = extract_quantity("1-2 шолји")
        assert token is None
        assert rest == "1-2 шолји"

    def test_count_word_case_insensitive(self):
        table = CountWordTable.default()
        token, _ = extract_quantity("ПОЛА кг", table)
        assert token.value == 0.5

    def test_interior_number_not_extracted(self):
        token, rest = extract_quantity("сол 500", CountWordTable.default())
        assert token is None
        assert rest == "сол 500"

    def test_consumed_span(self):
        token, _ = extract_quantity("500г месо")
        assert token.consumed_span == (0, 3)


class TestConsumeRange:
    def test_simple_range(self):
        annotation, rest = consume_range("1-2 шолји")
        assert annotation == "range:1-2"
        assert rest == "шолји"

    def test_spaced_range_compacted(self):
        annotation, rest = consume_range("1 - 2 кг")
        assert annotation == "range:1-2"
        assert rest == "кг"

    def test_decimal_range(self):
        annotation, _ = consume_range("1,5-2 кг")
        assert annotation == "range:1,5-2"

    def test_no_range(self):
        assert consume_range("500г месо") == (None, "500г месо")


class TestMatchUnit:
    def test_simple_unit(self):
        unit, rest = match_unit("г месо")
        assert unit == "г"
        assert rest == "месо"

    def test_compound_beats_component(self):
        unit, rest = match_unit("кафена лажичка ванила")
        assert unit == "кафена лажичка"
        assert rest == "ванила"

    def test_dictionary_miss(self):
        assert match_unit("месо") == (None, "месо")

    def test_no_match_inside_word(self):
        # "г" must not match as a prefix of a longer word.
        unit, rest = match_unit("гриз со млеко")
        assert unit is None
        assert rest == "гриз со млеко"

    def test_case_insensitive(self):
        unit, _ = match_unit("КГ брашно")
        assert unit == "кг"

    def test_unit_at_end_of_line(self):
        unit, rest = match_unit("кг")
        assert unit == "кг"
        assert rest == ""


class TestLoadUnitDictionary:
    def test_seed_without_config(self):
        d = load_unit_dictionary(None)
        assert len(d) == len(default_unit_dictionary())
        surfaces = d.surfaces()
        for expected in ("г", "кг", "мл", "шолја", "лажичка", "кафена лажичка"):
            assert expected in surfaces

    def test_missing_path_falls_back_to_seed(self, tmp_path):
        d = load_unit_dictionary(tmp_path / "nope.tsv")
        assert d.surfaces() == default_unit_dictionary().surfaces()

    def test_config_extends_seed(self, fixtures_dir):
        d = load_unit_dictionary(fixtures_dir / "units_extra.tsv")
        unit, rest = match_unit("прстофат сол", d)
        assert unit == "прстофат"
        assert rest == "сол"

    def test_duplicate_surface(self, fixtures_dir):
        with pytest.raises(DuplicateSurfaceFormError):
            load_unit_dictionary(fixtures_dir / "units_dup.tsv")

    def test_malformed_line(self, fixtures_dir):
        with pytest.raises(ConfigError) as info:
            load_unit_dictionary(fixtures_dir / "units_bad.tsv")
        assert info.value.line == 1

    def test_unknown_kind(self, tmp_path):
        config = tmp_path / "units.tsv"
        config.write_text("грст\tгрст\tweight\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            load_unit_dictionary(config)


class TestParseIngredient:
    def test_worked_example(self):
        ing = parse_ingredient("500г месо (телешко или свинско)")
        assert ing.quantity == 500
        assert ing.unit == "г"
        assert ing.name == "месо"
        assert ing.modifiers == ("телешко или свинско",)
        assert ing.raw == "500г месо (телешко или свинско)"

    def test_decorated_vulgar_fraction(self):
        ing = parse_ingredient("• ½ шолја млеко")
        assert (ing.quantity, ing.unit, ing.name) == (0.5, "шолја", "млеко")

    def test_pure_decoration_rejected(self):
        with pytest.raises(EmptyIngredientError):
            parse_ingredient("•••")

    def test_quantity_without_unit(self):
        ing = parse_ingredient("2 јајца")
        assert ing.quantity == 2
        assert ing.unit is None
        assert ing.name == "јајца"

    def test_unit_without_quantity(self):
        ing = parse_ingredient("кг брашно")
        assert ing.quantity is None
        assert ing.unit == "кг"
        assert ing.name == "брашно"

    def test_no_quantity_is_absent_not_zero(self):
        ing = parse_ingredient("сол по вкус")
        assert ing.quantity is None
        assert ing.name == "сол по вкус"

    def test_range_becomes_annotation(self):
        ing = parse_ingredient("1-2 кори за пита")
        assert ing.quantity is None
        assert ing.modifiers == ("range:1-2",)
        assert ing.name == "кори за пита"

    def test_range_before_unit(self):
        ing = parse_ingredient("1-2 кг јаболка")
        assert ing.quantity is None
        assert ing.unit == "кг"
        assert ing.name == "јаболка"

    def test_modifiers_then_annotations(self):
        ing = parse_ingredient("1-2 кг јаболка (кисели)")
        assert ing.modifiers == ("кисели", "range:1-2")

    def test_name_is_canonical(self):
        ing = parse_ingredient("500г МЕСО")
        assert ing.name == "месо"

    def test_trailing_punctuation_removed(self):
        ing = parse_ingredient("2 јајца,")
        assert ing.name == "јајца"

    def test_count_word_then_numeric_left_to_name(self):
        # First token wins; the rest is left to the name.
        ing = parse_ingredient("една 1/2 шолја")
        assert ing.quantity == 1
        assert ing.name == "1/2 шолја"

    def test_equals_stage_composition(self):
        lines = [
            "500г месо (телешко или свинско)",
            "• ½ шолја млеко",
            "пола лажичка сол",
            "1-2 кг јаболка",
            "☐ 2 домати, зрели",
            "кафена лажичка ванила",
            "сол по вкус",
        ]
        for raw in lines:
            stage = normalize_whitespace(raw)
            stage = strip_decorations(stage)
            core, modifiers = strip_modifiers(stage)
            annotation, working = consume_range(core)
            quantity = None
            if annotation is None:
                token, working = extract_quantity(working)
                quantity = token.value if token else None
            unit, working = match_unit(working)
            name = clean_name(working)
            ing = parse_ingredient(raw)
            assert ing.quantity == quantity
            assert ing.unit == unit
            assert ing.name == name
            expected_mods = modifiers + ((annotation,) if annotation else ())
            assert ing.modifiers == expected_mods

    def test_name_purity(self):
        for raw in ["500г месо", "2 кг шеќер (бел)", "• 1,5 л млеко, ладно"]:
            ing = parse_ingredient(raw)
            assert "(" not in ing.name and ")" not in ing.name
            assert ing.name == ing.name.strip()
            token, _ = extract_quantity(ing.name)
            assert token is None or token.source == "count_word"
            unit, _ = match_unit(ing.name)
            assert unit is None


class TestParseRecipe:
    def test_fixture_recipe(self):
        raw = RawRecipe(
            title="  Торта  со  чоколадо ",
            source_url="https://x.mk/1",
            ingredients=("500г брашно", "•••", "2 јајца"),
            instructions=("1. Се меша.", "2) Се пече.", "Се лади."),
            tags=(" десерт ", ""),
        )
        parsed = parse_recipe(raw)
        assert parsed.title == "Торта со чоколадо"
        # One line rejected as empty.
        assert len(parsed.ingredients) == len(raw.ingredients) - 1
        assert parsed.instructions == ("Се меша.", "Се пече.", "Се лади.")
        assert parsed.tags == ("десерт",)
