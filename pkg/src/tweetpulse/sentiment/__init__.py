"""Lexicon polarity/subjectivity scoring and aggregation."""
from .aggregate import (
    COHORTS,
    DEFAULT_CLOUD_SIZE,
    DEFAULT_MIN_TWEETS,
    TIMEFRAMES,
    CohortStats,
    DailySentimentSeries,
    InvalidCohort,
    InvalidTimeframe,
    PowerUser,
    ScoredRecord,
    SentimentHistogram,
    SeriesPoint,
    aggregate_series,
    cohort_stats,
    filter_cohort,
    label_counts,
    polarity_wordclouds,
    resolve_timeframe,
    score_records,
    sentiment_histogram,
)
from .lexicon import (
    LexiconError,
    default_subjectivity_lexicon,
    default_valence_lexicon,
    load_subjectivity_lexicon,
    load_valence_lexicon,
)
from .polarity import (
    NEUTRAL_BAND,
    PolarityScore,
    SentimentLabel,
    classify,
    prepare_tokens,
    score_polarity,
)
from .subjectivity import SubjectivityScore, score_subjectivity

__all__ = [
    "COHORTS",
    "DEFAULT_CLOUD_SIZE",
    "DEFAULT_MIN_TWEETS",
    "NEUTRAL_BAND",
    "TIMEFRAMES",
    "CohortStats",
    "DailySentimentSeries",
    "InvalidCohort",
    "InvalidTimeframe",
    "LexiconError",
    "PolarityScore",
    "PowerUser",
    "ScoredRecord",
    "SentimentHistogram",
    "SentimentLabel",
    "SeriesPoint",
    "SubjectivityScore",
    "aggregate_series",
    "classify",
    "cohort_stats",
    "default_subjectivity_lexicon",
    "default_valence_lexicon",
    "filter_cohort",
    "label_counts",
    "load_subjectivity_lexicon",
    "load_valence_lexicon",
    "polarity_wordclouds",
    "prepare_tokens",
    "resolve_timeframe",
    "score_polarity",
    "score_records",
    "score_subjectivity",
    "sentiment_histogram",
]
