"""Toolkit for building and mining structured recipe corpora.

Parses free-text ingredient lines into (quantity, unit, name) records,
stores corpora as JSON lines, and mines ingredient frequencies, pair and
triplet co-occurrence, and PMI/Lift associations.
"""

from .model import (
    ArityError,
    AssociationRecord,
    CorpusError,
    DuplicateMemberError,
    DuplicateSurfaceFormError,
    InvalidRecordError,
    InvariantViolation,
    ItemsetCounts,
    ParsedIngredient,
    ParsedRecipe,
    RawRecipe,
    UnitDictionary,
    UnitEntry,
    canonical_itemset,
    canonical_name,
)
from .normalize import (
    NormalizationReport,
    normalize_ingredient,
    normalize_instruction,
    normalize_whitespace,
    strip_decorations,
    strip_instruction_numbering,
    strip_modifiers,
)
from .parse import (
    ConfigError,
    CountWordTable,
    EmptyIngredientError,
    QuantityToken,
    consume_range,
    default_unit_dictionary,
    extract_quantity,
    load_unit_dictionary,
    match_unit,
    parse_ingredient,
    parse_recipe,
)
from .ingest import (
    ClassMarkupAdapter,
    CorpusHandle,
    CorpusSummary,
    EncodingError,
    ExtractionError,
    SchemaViolation,
    SiteAdapter,
    extract_recipe,
    read_corpus,
    read_parsed_corpus,
    summarize_corpus,
    write_corpus,
)
from .stats import (
    DomainError,
    FrequencyRow,
    ItemsetFrequencyRow,
    ThresholdConfig,
    count_frequencies,
    count_frequencies_sharded,
    lift,
    merge_counts,
    pmi,
    rank_associations,
    top_frequencies,
    top_itemset_frequencies,
)
from .report import (
    ComparativeReport,
    compare_corpora,
    render_association_table,
    render_comparative_report,
    render_frequency_table,
    render_itemset_frequency_table,
)

__version__ = "0.1.0"
