from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recipecorpus import (
    ArityError,
    AssociationRecord,
    DuplicateMemberError,
    InvalidRecordError,
    InvariantViolation,
    ItemsetCounts,
    ParsedIngredient,
    RawRecipe,
    UnitDictionary,
    canonical_itemset,
    canonical_name,
)
from recipecorpus.model import DuplicateSurfaceFormError


class TestCanonicalName:
    def test_trim_and_casefold(self):
        assert canonical_name("  Месо ") == "месо"

    def test_already_canonical_is_fixpoint(self):
        assert canonical_name("брашно") == "брашно"

    def test_cyrillic_casefold_against_character_table(self):
        # Independent oracle: uppercase Cyrillic maps by fixed code-point
        # offsets (+0x20 for А..Я at U+0410..U+042F, +0x50 for Ѐ..Џ at
        # U+0400..U+040F, which covers Ќ).
        def fold_char(c):
            cp = ord(c)
            if 0x0410 <= cp <= 0x042F:
                return chr(cp + 0x20)
            if 0x0400 <= cp <= 0x040F:
                return chr(cp + 0x50)
            return c

        word = "ШЕЌЕР"
        expected = "".join(fold_char(c) for c in word)
        assert expected == "шеќер"
        assert canonical_name(word) == expected

    def test_whitespace_collapse(self):
        assert canonical_name("бело\t\nбрашно") == "бело брашно"

    def test_empty_input(self):
        assert canonical_name("") == ""
        assert canonical_name("   ") == ""

    @given(st.text(max_size=60))
    def test_idempotent(self, s):
        once = canonical_name(s)
        assert canonical_name(once) == once


class TestCanonicalItemset:
    def test_pair_sorted(self):
        assert canonical_itemset(["сол", "брашно"]) == ("брашно", "сол")

    def test_triplet_sorted(self):
        assert canonical_itemset(["c", "a", "b"]) == ("a", "b", "c")

    def test_duplicate_member(self):
        with pytest.raises(DuplicateMemberError):
            canonical_itemset(["a", "a"])

    def test_arity(self):
        with pytest.raises(ArityError):
            canonical_itemset(["a"])
        with pytest.raises(ArityError):
            canonical_itemset(["a", "b", "c", "d"])

    @given(st.lists(st.text(min_size=1, max_size=8), min_size=2, max_size=3, unique=True))
    def test_order_insensitive(self, names):
        expected = canonical_itemset(names)
        assert canonical_itemset(list(reversed(names))) == expected
        assert canonical_itemset(sorted(names)) == expected


class TestRawRecipe:
    def test_minimal_valid(self):
        r = RawRecipe(
            title="Торта",
            source_url="https://x.mk/1",
            ingredients=("500г брашно",),
        )
        assert r.instructions == ()
        assert r.image_url is None

    def test_empty_title_rejected(self):
        with pytest.raises(InvalidRecordError):
            RawRecipe(title="  ", source_url="https://x.mk/1", ingredients=("a",))

    def test_empty_ingredients_rejected(self):
        with pytest.raises(InvalidRecordError):
            RawRecipe(title="Т", source_url="https://x.mk/1", ingredients=())

    def test_relative_url_rejected(self):
        with pytest.raises(InvalidRecordError):
            RawRecipe(title="Т", source_url="/torta", ingredients=("a",))
        with pytest.raises(InvalidRecordError):
            RawRecipe(title="Т", source_url="not a url", ingredients=("a",))


class TestParsedIngredient:
    def test_quantity_must_be_finite_nonnegative(self):
        with pytest.raises(InvalidRecordError):
            ParsedIngredient(name="сол", raw="сол", quantity=-1.0)
        with pytest.raises(InvalidRecordError):
            ParsedIngredient(name="сол", raw="сол", quantity=float("nan"))
        with pytest.raises(InvalidRecordError):
            ParsedIngredient(name="сол", raw="сол", quantity=float("inf"))

    def test_name_purity(self):
        with pytest.raises(InvalidRecordError):
            ParsedIngredient(name=" сол", raw="сол")
        with pytest.raises(InvalidRecordError):
            ParsedIngredient(name="сол (морска)", raw="сол")
        with pytest.raises(InvalidRecordError):
            ParsedIngredient(name="", raw="сол")

    def test_absent_quantity_is_none(self):
        ing = ParsedIngredient(name="сол", raw="сол по вкус")
        assert ing.quantity is None
        assert ing.unit is None


class TestUnitDictionary:
    def test_longest_first_order(self):
        d = UnitDictionary.from_entries(
            [("г", "г", "mass"), ("кафена лажичка", "кафена лажичка", "traditional"),
             ("кг", "кг", "mass")]
        )
        assert d.surfaces() == ("кафена лажичка", "кг", "г")

    def test_duplicate_after_casefold(self):
        with pytest.raises(DuplicateSurfaceFormError):
            UnitDictionary.from_entries([("г", "г", "mass"), ("Г", "грам", "mass")])

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            UnitDictionary.from_entries([("г", "г", "weight")])


class TestItemsetCounts:
    def test_validate_accepts_consistent_counts(self):
        counts = ItemsetCounts(
            n_recipes=3,
            singles={"а": 2, "б": 2},
            pairs={("а", "б"): 2},
            triplets={},
        )
        counts.validate()

    def test_validate_rejects_pair_above_member(self):
        counts = ItemsetCounts(
            n_recipes=5,
            singles={"а": 1, "б": 4},
            pairs={("а", "б"): 2},
            triplets={},
        )
        with pytest.raises(InvariantViolation):
            counts.validate()

    def test_validate_rejects_unsorted_key(self):
        counts = ItemsetCounts(
            n_recipes=5,
            singles={"а": 2, "б": 2},
            pairs={("б", "а"): 1},
            triplets={},
        )
        with pytest.raises(InvariantViolation):
            counts.validate()

    def test_validate_rejects_count_above_n(self):
        counts = ItemsetCounts(n_recipes=1, singles={"а": 2}, pairs={}, triplets={})
        with pytest.raises(InvariantViolation):
            counts.validate()


class TestAssociationRecord:
    def test_pmi_must_match_log2_lift(self):
        AssociationRecord(("а", "б"), 3, 0.3, math.log2(2.0), 2.0)
        with pytest.raises(InvalidRecordError):
            AssociationRecord(("а", "б"), 3, 0.3, 0.5, 2.0)

    def test_support_range(self):
        with pytest.raises(InvalidRecordError):
            AssociationRecord(("а", "б"), 3, 1.5, 1.0, 2.0)
