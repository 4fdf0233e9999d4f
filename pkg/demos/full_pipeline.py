"""End-to-end run of the command-line pipeline on a tiny corpus.

Writes a raw JSONL corpus to a temporary directory, then drives the same
entry points the ``recipecorpus`` command exposes: parse -> summarize ->
stats -> compare.

Run with: python3 demos/full_pipeline.py
"""

import json
import tempfile
from pathlib import Path

from recipecorpus.cli import main

RAW_RECIPES = [
    {
        "title": "Шарена торта",
        "source_url": "https://recepti.example.mk/torta-1",
        "image_url": "https://recepti.example.mk/img/torta-1.jpg",
        "ingredients": [
            "500г брашно", "• 3 јајца", "пола лажичка сол",
            "1 ½ шолја млеко", "2 кг шеќер (кристален)",
        ],
        "instructions": ["1. Се меша.", "2. Се пече."],
        "tags": ["десерт"],
    },
    {
        "title": "Селска салата",
        "source_url": "https://gotvi.example.mk/salata-7",
        "ingredients": ["☐ 2 домати", "☐ 1 краставица", "сол по вкус"],
        "instructions": ["Се сечка.", "Се посолува."],
        "tags": [],
    },
    {
        "title": "Палачинки",
        "source_url": "https://moirecepti.example.mk/palacinki",
        "ingredients": ["300 г брашно", "2 јајца", "сол", "1 чаша млеко"],
        "instructions": ["1) Се мати.", "2) Се пржи."],
        "tags": ["десерт", "брзо"],
    },
]

workdir = Path(tempfile.mkdtemp(prefix="recipecorpus-demo-"))
raw = workdir / "raw.jsonl"
with open(raw, "w", encoding="utf-8") as fh:
    for record in RAW_RECIPES:
        fh.write(json.dumps(record, ensure_ascii=False) + "\n")
parsed = workdir / "parsed.jsonl"

print(f"working directory: {workdir}\n")

print("$ recipecorpus parse raw.jsonl parsed.jsonl")
main(["parse", str(raw), str(parsed)])

print("\n$ recipecorpus summarize parsed.jsonl")
main(["summarize", str(parsed)])

print("\n$ recipecorpus stats parsed.jsonl --min-pair-count 2 --min-triplet-count 2 --top-n 5")
main(["stats", str(parsed), "--min-pair-count", "2",
      "--min-triplet-count", "2", "--top-n", "5"])

print("\n$ recipecorpus compare parsed.jsonl parsed.jsonl --min-pair-count 2 --min-triplet-count 2 --top-n 3")
main(["compare", str(parsed), str(parsed), "--min-pair-count", "2",
      "--min-triplet-count", "2", "--top-n", "3"])
