"""Temporal, state-level, and cohort aggregation of scored tweets."""
from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from datetime import date, timedelta

import numpy as np

from ..corpus.records import TweetRecord
from ..states import require_state_code
from ..textproc import StopwordPolicy, remove_stopwords, tokenize, top_counts
from .polarity import PolarityScore, SentimentLabel, classify, score_polarity
from .subjectivity import score_subjectivity

TIMEFRAMES = ("today", "yesterday", "all", "custom")
COHORTS = ("all", "verified", "nonverified")

DEFAULT_MIN_TWEETS = 500
DEFAULT_CLOUD_SIZE = 50


class InvalidTimeframe(ValueError):
    """Raised for unknown timeframe names or custom ranges without dates."""


class InvalidCohort(ValueError):
    """Raised for cohort names outside all/verified/nonverified."""


@dataclass(frozen=True, slots=True)
class ScoredRecord:
    """A tweet with its polarity, label, and subjectivity attached."""

    record: TweetRecord
    polarity: PolarityScore
    label: SentimentLabel
    subjectivity: float


def score_records(
    records: Iterable[TweetRecord],
    lexicon: Mapping[str, float],
    subj_lexicon: Mapping[str, float],
) -> tuple[ScoredRecord, ...]:
    scored = []
    for record in records:
        polarity = score_polarity(record.text, lexicon)
        scored.append(
            ScoredRecord(
                record=record,
                polarity=polarity,
                label=classify(polarity),
                subjectivity=score_subjectivity(record.text, subj_lexicon).value,
            )
        )
    return tuple(scored)


def resolve_timeframe(
    timeframe: str | tuple[date, date],
    clock: date | None = None,
) -> tuple[date | None, date | None]:
    """Resolve a timeframe to a closed [start, end] date window.

    "all" resolves to (None, None), meaning the full corpus extent. A
    (start, end) tuple is a custom window; the bare name "custom" is
    rejected because it carries no dates.
    """
    if isinstance(timeframe, tuple):
        start, end = timeframe
        if start is None or end is None:
            raise InvalidTimeframe("custom timeframe needs both start and end dates")
        return start, end
    if timeframe == "all":
        return None, None
    if timeframe in ("today", "yesterday"):
        if clock is None:
            raise InvalidTimeframe(f"timeframe {timeframe!r} needs a reference date")
        day = clock if timeframe == "today" else clock - timedelta(days=1)
        return day, day
    if timeframe == "custom":
        raise InvalidTimeframe("custom timeframe needs explicit dates, got bare name")
    raise InvalidTimeframe(f"unknown timeframe: {timeframe!r}")


def filter_cohort(records: Sequence[ScoredRecord], cohort: str) -> list[ScoredRecord]:
    if cohort == "all":
        return list(records)
    if cohort == "verified":
        return [sr for sr in records if sr.record.verified]
    if cohort == "nonverified":
        return [sr for sr in records if not sr.record.verified]
    raise InvalidCohort(f"unknown cohort: {cohort!r}")


@dataclass(frozen=True, slots=True)
class SeriesPoint:
    day: date
    mean_compound: float | None
    mean_subjectivity: float | None
    tweet_count: int


@dataclass(frozen=True, slots=True)
class DailySentimentSeries:
    """Per-day sentiment means; zero-tweet days carry None, never 0."""

    scope: str | None  # state code, or None for nationwide
    points: tuple[SeriesPoint, ...]


def aggregate_series(
    records: Sequence[ScoredRecord],
    scope: str | None = None,
    timeframe: str | tuple[date, date] = "all",
    clock: date | None = None,
) -> DailySentimentSeries:
    """One point per calendar day in the resolved window.

    The window for "all" spans the full record set before scope filtering,
    so per-state series line up day-for-day with the nationwide one.
    """
    if scope is not None:
        require_state_code(scope)
    start, end = resolve_timeframe(timeframe, clock)
    records = list(records)
    if start is None:
        if not records:
            return DailySentimentSeries(scope=scope, points=())
        days = [sr.record.day for sr in records]
        start, end = min(days), max(days)

    compound_sum: dict[date, float] = {}
    subj_sum: dict[date, float] = {}
    count: Counter[date] = Counter()
    for sr in records:
        if scope is not None and sr.record.loc != scope:
            continue
        day = sr.record.day
        if day < start or day > end:
            continue
        compound_sum[day] = compound_sum.get(day, 0.0) + sr.polarity.compound
        subj_sum[day] = subj_sum.get(day, 0.0) + sr.subjectivity
        count[day] += 1

    points = []
    day = start
    while day <= end:
        n = count[day]
        points.append(
            SeriesPoint(
                day=day,
                mean_compound=compound_sum[day] / n if n else None,
                mean_subjectivity=subj_sum[day] / n if n else None,
                tweet_count=n,
            )
        )
        day += timedelta(days=1)
    return DailySentimentSeries(scope=scope, points=tuple(points))


@dataclass(frozen=True, slots=True)
class SentimentHistogram:
    """Uniform binning of compound scores over [-1, 1]."""

    bin_edges: tuple[float, ...]
    counts: tuple[int, ...]


def sentiment_histogram(records: Sequence[ScoredRecord], bins: int) -> SentimentHistogram:
    if bins < 1:
        raise ValueError(f"bins must be >= 1, got {bins}")
    compounds = [sr.polarity.compound for sr in records]
    counts, edges = np.histogram(compounds, bins=bins, range=(-1.0, 1.0))
    return SentimentHistogram(
        bin_edges=tuple(float(e) for e in edges),
        counts=tuple(int(c) for c in counts),
    )


def label_counts(records: Sequence[ScoredRecord]) -> dict[str, int]:
    counts = Counter(sr.label for sr in records)
    return {label.value: counts.get(label, 0) for label in SentimentLabel}


@dataclass(frozen=True, slots=True)
class CohortStats:
    cohort: str
    tweet_count: int
    user_count: int
    max_tweets_single_user: int
    # Fraction of the cohort's tweets per label; sums to 1 when non-empty.
    label_fractions: Mapping[str, float]


@dataclass(frozen=True, slots=True)
class PowerUser:
    user_id: str
    verified: bool
    tweet_count: int


def _one_cohort(name: str, cohort_records: Sequence[ScoredRecord]) -> CohortStats:
    per_user = Counter(sr.record.user_id for sr in cohort_records)
    by_label = Counter(sr.label for sr in cohort_records)
    n = len(cohort_records)
    fractions = {
        label.value: (by_label.get(label, 0) / n if n else 0.0) for label in SentimentLabel
    }
    return CohortStats(
        cohort=name,
        tweet_count=n,
        user_count=len(per_user),
        max_tweets_single_user=max(per_user.values(), default=0),
        label_fractions=fractions,
    )


def cohort_stats(
    records: Sequence[ScoredRecord],
    min_tweets: int = DEFAULT_MIN_TWEETS,
) -> tuple[CohortStats, CohortStats, list[PowerUser]]:
    """Verified/non-verified contrast plus the heavy-poster list.

    Power users post strictly more than `min_tweets` times within one
    cohort; a user split across both flags is counted per cohort.
    """
    if min_tweets < 0:
        raise ValueError(f"min_tweets must be >= 0, got {min_tweets}")
    verified = [sr for sr in records if sr.record.verified]
    nonverified = [sr for sr in records if not sr.record.verified]

    per_user: Counter[tuple[str, bool]] = Counter(
        (sr.record.user_id, sr.record.verified) for sr in records
    )
    power = [
        PowerUser(user_id=uid, verified=flag, tweet_count=n)
        for (uid, flag), n in per_user.items()
        if n > min_tweets
    ]
    power.sort(key=lambda u: (-u.tweet_count, u.user_id))

    return _one_cohort("verified", verified), _one_cohort("nonverified", nonverified), power


def polarity_wordclouds(
    records: Sequence[ScoredRecord],
    cohort: str = "all",
    k: int = DEFAULT_CLOUD_SIZE,
    *,
    stopwords: StopwordPolicy | None = None,
) -> tuple[list[tuple[str, int]], list[tuple[str, int]]]:
    """Top-k words in positive-labeled and negative-labeled tweets.

    Neutral tweets contribute to neither cloud. Counts are raw token
    occurrences after stopword removal; ties break lexicographically.
    """
    policy = stopwords if stopwords is not None else StopwordPolicy()
    pos_counts: Counter[str] = Counter()
    neg_counts: Counter[str] = Counter()
    for sr in filter_cohort(records, cohort):
        if sr.label is SentimentLabel.NEUTRAL:
            continue
        tokens = remove_stopwords(tokenize(sr.record.text), policy)
        if sr.label is SentimentLabel.POSITIVE:
            pos_counts.update(tokens)
        else:
            neg_counts.update(tokens)
    return top_counts(pos_counts, k), top_counts(neg_counts, k)
