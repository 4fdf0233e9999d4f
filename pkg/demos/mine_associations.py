"""Mine frequencies, co-occurrence and PMI/Lift from a synthetic corpus.

A small generator sketches two recipe families (cakes and salads) so the
association measures have structure to find: cake ingredients co-occur
tightly, salad ingredients likewise, and salt spans both.

Run with: python3 demos/mine_associations.py
"""

import random

from recipecorpus import (
    ParsedIngredient,
    ParsedRecipe,
    ThresholdConfig,
    count_frequencies,
    rank_associations,
    render_association_table,
    render_frequency_table,
    top_frequencies,
)

CAKE = ["брашно", "шеќер", "јајца", "млеко", "путер", "ванилин шеќер"]
SALAD = ["домати", "краставица", "кромид", "маслиново масло", "магдонос"]

rng = random.Random(2026)
recipes = []
for i in range(600):
    family = CAKE if rng.random() < 0.6 else SALAD
    names = rng.sample(family, rng.randint(3, len(family)))
    if rng.random() < 0.4:
        names.append("сол")
    recipes.append(
        ParsedRecipe(
            title=f"рецепт {i}",
            source_url=f"https://example.mk/r/{i}",
            ingredients=tuple(ParsedIngredient(name=n, raw=n) for n in names),
        )
    )

counts = count_frequencies(recipes)
counts.validate()
print(f"recipes: {counts.n_recipes}, distinct ingredients: {len(counts.singles)}")
print()

print(render_frequency_table(top_frequencies(counts, 8), "text"))

thresholds = ThresholdConfig(min_pair_count=20, min_triplet_count=20)
pairs = rank_associations(counts, 2, thresholds, top_n=8)
print(render_association_table(pairs, "text", thresholds.min_pair_count))

triplets = rank_associations(counts, 3, thresholds, top_n=8)
print(render_association_table(triplets, "text", thresholds.min_triplet_count))

# Lift reads as "how many times more often than chance": the top pair
# co-occurs that much more than its members' popularity predicts, while
# salt, appearing in both families, scores close to 1 with everything.
