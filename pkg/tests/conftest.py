from __future__ import annotations

from pathlib import Path

import pytest

from recipecorpus import ParsedIngredient, ParsedRecipe

FIXTURES = Path(__file__).parent / "fixtures"


def make_recipe(names, index=0, **kwargs) -> ParsedRecipe:
    """Build a minimal ParsedRecipe from a collection of ingredient names."""
    ingredients = tuple(
        ParsedIngredient(name=name, raw=name) for name in names
    )
    defaults = dict(
        title=f"рецепт {index}",
        source_url=f"https://example.mk/r/{index}",
        ingredients=ingredients,
        instructions=("Се меша.",),
        tags=(),
    )
    defaults.update(kwargs)
    return ParsedRecipe(**defaults)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
