"""Walk through the ingredient parsing stages on real-looking lines.

Run with: python3 demos/parse_ingredients.py
"""

from recipecorpus import (
    consume_range,
    extract_quantity,
    match_unit,
    normalize_whitespace,
    parse_ingredient,
    strip_decorations,
    strip_modifiers,
)

LINES = [
    "500г месо (телешко или свинско)",
    "• ½ шолја млеко",
    "пола лажичка сол",
    "1 ½ шолја брашно",
    "кафена лажичка ванила",
    "☐ 2 домати, зрели",
    "1-2 кг јаболка (кисели)",
    "сол по вкус",
]

print("Full parses")
print("=" * 60)
for line in LINES:
    ing = parse_ingredient(line)
    print(f"{line!r}")
    print(f"  quantity={ing.quantity}  unit={ing.unit}  name={ing.name!r}")
    if ing.modifiers:
        print(f"  modifiers={list(ing.modifiers)}")

# The same result can be assembled stage by stage; parse_ingredient is
# exactly this composition.
print()
print("Stage-by-stage trace")
print("=" * 60)
line = "• 1 ½ кафена лажичка ванилин шеќер (домашен), мирислив"
print(f"input:        {line!r}")
stage = normalize_whitespace(line)
stage = strip_decorations(stage)
print(f"decorations:  {stage!r}")
core, modifiers = strip_modifiers(stage)
print(f"modifiers:    core={core!r} modifiers={list(modifiers)}")
annotation, rest = consume_range(core)
token, rest = extract_quantity(rest)
print(f"quantity:     {token.value} ({token.source}), remainder={rest!r}")
unit, rest = match_unit(rest)
print(f"unit:         {unit!r}, remainder={rest!r}")
print(f"parsed name:  {parse_ingredient(line).name!r}")
