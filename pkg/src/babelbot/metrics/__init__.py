"""Evaluation metrics: IPA / TSR / ART and the translation-QC suite."""

from babelbot.metrics.tokenize import COMMA_DECIMAL_LANGS, tokenize
from babelbot.metrics.params import Unit, extract_params, params_match
from babelbot.metrics.translation import (
    EmptyInput,
    EmptyReference,
    GreedyMatchingScorer,
    MetricError,
    ScorerUnavailable,
    SemanticTextScorer,
    action_params,
    bleu,
    levenshtein,
    per,
    s_per,
    semantic_score,
    ter,
    vematch,
)
from babelbot.metrics.interaction import (
    EmptyDataset,
    InteractionRecord,
    TranslationRecord,
    art,
    group_by_language,
    ipa,
    ipa_score,
    ipa_with_exclusions,
    read_interaction_log,
    read_translation_dataset,
    record_from_json,
    record_to_json,
    tsr,
)
from babelbot.metrics.report import (
    LANGUAGE_FAMILIES,
    LanguageRow,
    MetricsReport,
    TranslationRow,
    build_report,
    build_translation_report,
    language_family,
    translation_report_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")]
