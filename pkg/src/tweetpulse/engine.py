"""Analytics snapshot: one immutable view answering every query.

A snapshot is built from a fixed record set, scored once, and never
mutated. Whoever holds a snapshot gets internally consistent answers:
every aggregate comes from the same records. Builds are deterministic,
including the as-of timestamp, which is the newest record's timestamp
rather than wall clock, so rebuilding from the same files gives an
identical snapshot.
"""
from __future__ import annotations

import re
import threading
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from datetime import date, datetime, timedelta
from pathlib import Path

from .config import AppConfig
from .corpus import DailyFile, TweetRecord, parse_daily_csv
from .mobility import (
    DEFAULT_LAG_WEEKS,
    DEFAULT_WINDOW,
    CaseCount,
    InsufficientData,
    MobilityTable,
    WeekBins,
    build_trajectories,
    detect_movements,
    ingest_case_counts,
    lagged_join,
    mobility_correlation,
    weekly_mobility,
)
from .sentiment import (
    ScoredRecord,
    aggregate_series,
    cohort_stats,
    default_subjectivity_lexicon,
    default_valence_lexicon,
    filter_cohort,
    label_counts,
    load_subjectivity_lexicon,
    load_valence_lexicon,
    polarity_wordclouds,
    resolve_timeframe,
    score_records,
    sentiment_histogram,
)
from .textproc import StopwordPolicy, remove_stopwords, tokenize
from .topicmodel import (
    EmptyVocabulary,
    InvalidTopicCount,
    LdaModel,
    build_vocabulary,
    doc_term_matrix,
    export_topicvis,
    lda_fit,
    relevant_terms,
)
from .trends import (
    FeaturedTopicList,
    default_featured_topics,
    featured_topic_trends,
    frequent_topic_trends,
    top_bigrams,
    top_words,
    tweet_frequency,
)

DAILY_FILE_RE = re.compile(r"^(\d{4}-\d{2}-\d{2})\.csv$")

DEFAULT_HISTOGRAM_BINS = 20
DEFAULT_TREND_SERIES = 10


class LdaUnavailable(RuntimeError):
    """Raised when topic-model queries hit a snapshot without a model."""


@dataclass(frozen=True, slots=True)
class TopicModelSettings:
    """Fitting parameters carried by the snapshot builder."""

    k: int = 25
    iterations: int = 200
    seed: int = 0
    alpha: float | None = None
    beta: float = 0.01
    min_df: int = 2
    max_df_fraction: float = 0.95


def discover_daily_files(data_dir: str | Path) -> list[tuple[date, Path]]:
    """Daily CSV files named YYYY-MM-DD.csv, sorted by date."""
    found = []
    for path in Path(data_dir).iterdir():
        m = DAILY_FILE_RE.match(path.name)
        if m:
            found.append((date.fromisoformat(m.group(1)), path))
    found.sort()
    return found


def load_daily_files(
    data_dir: str | Path,
    start: date | None = None,
    end: date | None = None,
) -> list[DailyFile]:
    """Parse every daily file in [start, end]; bad rows are skipped."""
    days = []
    for day, path in discover_daily_files(data_dir):
        if start is not None and day < start:
            continue
        if end is not None and day > end:
            continue
        with path.open("rb") as fh:
            days.append(parse_daily_csv(fh, expected_date=day))
    return days


def _iso(day: date | None) -> str | None:
    return day.isoformat() if day is not None else None


def _timeframe_fields(
    timeframe: str | tuple[date, date],
    clock: date | None,
) -> tuple[str, date | None, date | None]:
    name = "custom" if isinstance(timeframe, tuple) else timeframe
    start, end = resolve_timeframe(timeframe, clock)
    return name, start, end


@dataclass(frozen=True)
class AnalyticsSnapshot:
    """Immutable analytics state plus JSON-ready query methods.

    Query methods return plain dicts so the HTTP service, the batch
    report writer, and replay-equivalence checks all share one
    serialization. Heavy shared work (scoring, mobility, the topic
    model) happens once at build time; parameterized queries run over
    the frozen record tuples on demand.
    """

    as_of: datetime | None
    clock: date
    records: tuple[TweetRecord, ...]
    scored: tuple[ScoredRecord, ...]
    policy: StopwordPolicy
    featured: FeaturedTopicList
    week_bins: WeekBins
    mobility_table: MobilityTable
    cases: tuple[CaseCount, ...]
    lag_weeks: int = DEFAULT_LAG_WEEKS
    lda_model: LdaModel | None = None
    lda_payload: dict | None = None
    lda_error: str | None = "topic model not enabled"
    skipped_rows: int = field(default=0, compare=False)

    # -- helpers -----------------------------------------------------

    @property
    def days(self) -> tuple[date, ...]:
        return tuple(sorted({r.day for r in self.records}))

    def _scoped_records(self, state: str | None) -> list[TweetRecord]:
        if state is None:
            return list(self.records)
        return [r for r in self.records if r.loc == state]

    def _windowed_scored(
        self,
        state: str | None,
        timeframe: str | tuple[date, date],
    ) -> list[ScoredRecord]:
        start, end = resolve_timeframe(timeframe, self.clock)
        out = []
        for sr in self.scored:
            if state is not None and sr.record.loc != state:
                continue
            day = sr.record.day
            if start is not None and day < start:
                continue
            if end is not None and day > end:
                continue
            out.append(sr)
        return out

    # -- queries -----------------------------------------------------

    def health(self) -> dict:
        days = self.days
        return {
            "status": "ok",
            "as_of": self.as_of.isoformat().replace("+00:00", "Z") if self.as_of else None,
            "record_count": len(self.records),
            "day_count": len(days),
            "first_day": _iso(days[0]) if days else None,
            "last_day": _iso(days[-1]) if days else None,
            "topics_available": self.lda_payload is not None,
        }

    def _stamp(self, payload: dict) -> dict:
        payload["as_of"] = self.as_of.isoformat().replace("+00:00", "Z") if self.as_of else None
        return payload

    def frequency(
        self,
        state: str | None = None,
        start: date | None = None,
        end: date | None = None,
    ) -> dict:
        points = [
            {"date": _iso(p.day), "count": p.count}
            for p in tweet_frequency(self.records, state)
            if (start is None or p.day >= start) and (end is None or p.day <= end)
        ]
        return self._stamp(
            {
                "scope": state,
                "from": _iso(start),
                "to": _iso(end),
                "points": points,
                "total": sum(p["count"] for p in points),
            }
        )

    def words_top(self, k: int = 50, state: str | None = None) -> dict:
        ranked = top_words(self._scoped_records(state), k, self.policy)
        return self._stamp(
            {
                "scope": state,
                "k": k,
                "words": [{"word": w, "count": n} for w, n in ranked],
            }
        )

    def bigrams_top(self, k: int = 20, state: str | None = None) -> dict:
        ranked = top_bigrams(self._scoped_records(state), k, self.policy)
        return self._stamp(
            {
                "scope": state,
                "k": k,
                "bigrams": [{"bigram": list(pair), "count": n} for pair, n in ranked],
            }
        )

    def topics_frequent(self, state: str | None = None, k: int = DEFAULT_TREND_SERIES) -> dict:
        series = frequent_topic_trends(self.records, state, k, self.policy)
        return self._stamp({"scope": state, "k": k, "series": _series_json(series)})

    def topics_featured(self, state: str | None = None, k: int = DEFAULT_TREND_SERIES) -> dict:
        k = min(k, len(self.featured))
        series = featured_topic_trends(self.records, state, self.featured, k)
        return self._stamp(
            {
                "scope": state,
                "k": k,
                "watchlist_size": len(self.featured),
                "series": _series_json(series),
            }
        )

    def sentiment_series(
        self,
        state: str | None = None,
        timeframe: str | tuple[date, date] = "all",
    ) -> dict:
        name, start, end = _timeframe_fields(timeframe, self.clock)
        series = aggregate_series(self.scored, state, timeframe, self.clock)
        window = self._windowed_scored(state, timeframe)
        window_mean = (
            sum(sr.polarity.compound for sr in window) / len(window) if window else None
        )
        return self._stamp(
            {
                "scope": state,
                "range": name,
                "from": _iso(start),
                "to": _iso(end),
                "window_mean_compound": window_mean,
                "points": [
                    {
                        "date": _iso(p.day),
                        "mean_compound": p.mean_compound,
                        "mean_subjectivity": p.mean_subjectivity,
                        "count": p.tweet_count,
                    }
                    for p in series.points
                ],
            }
        )

    def sentiment_distribution(self, bins: int = DEFAULT_HISTOGRAM_BINS) -> dict:
        hist = sentiment_histogram(self.scored, bins)
        return self._stamp(
            {
                "bins": bins,
                "bin_edges": list(hist.bin_edges),
                "counts": list(hist.counts),
                "total": sum(hist.counts),
            }
        )

    def sentiment_labels(self, cohort: str = "all") -> dict:
        counts = label_counts(filter_cohort(self.scored, cohort))
        return self._stamp(
            {"cohort": cohort, "counts": counts, "total": sum(counts.values())}
        )

    def sentiment_cohorts(self, min_tweets: int = 500) -> dict:
        verified, nonverified, power = cohort_stats(self.scored, min_tweets)
        def as_dict(stats):
            return {
                "cohort": stats.cohort,
                "tweet_count": stats.tweet_count,
                "user_count": stats.user_count,
                "max_tweets_single_user": stats.max_tweets_single_user,
                "label_fractions": dict(stats.label_fractions),
            }
        return self._stamp(
            {
                "min_tweets": min_tweets,
                "verified": as_dict(verified),
                "nonverified": as_dict(nonverified),
                "power_users": [
                    {"user_id": u.user_id, "verified": u.verified, "tweet_count": u.tweet_count}
                    for u in power
                ],
            }
        )

    def wordcloud(
        self,
        polarity: str,
        state: str | None = None,
        timeframe: str | tuple[date, date] = "all",
        cohort: str = "all",
        k: int = 50,
    ) -> dict:
        if polarity not in ("pos", "neg"):
            raise ValueError(f"polarity must be 'pos' or 'neg', got {polarity!r}")
        name, _, _ = _timeframe_fields(timeframe, self.clock)
        window = self._windowed_scored(state, timeframe)
        pos, neg = polarity_wordclouds(window, cohort, k, stopwords=self.policy)
        ranked = pos if polarity == "pos" else neg
        return self._stamp(
            {
                "scope": state,
                "range": name,
                "polarity": polarity,
                "cohort": cohort,
                "k": k,
                "words": [{"word": w, "count": n} for w, n in ranked],
            }
        )

    def subjectivity_series(
        self,
        state: str | None = None,
        timeframe: str | tuple[date, date] = "all",
    ) -> dict:
        full = self.sentiment_series(state, timeframe)
        return self._stamp(
            {
                "scope": full["scope"],
                "range": full["range"],
                "from": full["from"],
                "to": full["to"],
                "points": [
                    {
                        "date": p["date"],
                        "mean_subjectivity": p["mean_subjectivity"],
                        "count": p["count"],
                    }
                    for p in full["points"]
                ],
            }
        )

    def mobility_weekly(self, lag: int | None = None) -> dict:
        lag = self.lag_weeks if lag is None else lag
        joined = lagged_join(self.mobility_table.weeks, self.cases, lag)
        try:
            report = mobility_correlation(joined)
            correlation = {
                "pooled": report.pooled,
                "per_week": {_iso(w): r for w, r in sorted(report.per_week.items())},
                "insufficient_weeks": [_iso(w) for w in report.insufficient_weeks],
            }
        except InsufficientData:
            correlation = None
        return self._stamp(
            {
                "lag": lag,
                "week_epoch": _iso(self.week_bins.epoch),
                "weeks": [
                    {
                        "week_start": _iso(w.week_start),
                        "week_end": _iso(w.week_end),
                        "counts": dict(w.counts),
                    }
                    for w in self.mobility_table.weeks
                ],
                "overflow": self.mobility_table.overflow,
                "joined": [
                    {
                        "state": row.state,
                        "week_start": _iso(row.week_start),
                        "mobility": row.mobility,
                        "cases": row.cases,
                    }
                    for row in joined
                ],
                "correlation": correlation,
            }
        )

    def lda_topics(self) -> dict:
        if self.lda_payload is None:
            raise LdaUnavailable(self.lda_error or "topic model not available")
        return self._stamp(dict(self.lda_payload))

    def lda_terms(self, topic: int, lambda_: float = 0.6, n: int = 30) -> dict:
        if self.lda_model is None:
            raise LdaUnavailable(self.lda_error or "topic model not available")
        ranking = relevant_terms(self.lda_model, topic, lambda_, n)
        return self._stamp(
            {
                "topic": ranking.topic,
                "lambda": ranking.lambda_,
                "terms": [{"term": t, "relevance": r} for t, r in ranking.terms],
            }
        )


def _series_json(series) -> list[dict]:
    return [
        {
            "topic": s.topic,
            "total": s.total,
            "points": [{"date": _iso(p.day), "count": p.count} for p in s.points],
        }
        for s in series
    ]


def build_snapshot(
    records: Iterable[TweetRecord],
    *,
    clock_date: date | None = None,
    valence: Mapping[str, float] | None = None,
    subjectivity: Mapping[str, float] | None = None,
    policy: StopwordPolicy | None = None,
    featured: FeaturedTopicList | None = None,
    week_bins: WeekBins | None = None,
    cases: Sequence[CaseCount] = (),
    lag_weeks: int = DEFAULT_LAG_WEEKS,
    movement_window: timedelta = DEFAULT_WINDOW,
    topic_model: TopicModelSettings | None = None,
    skipped_rows: int = 0,
) -> AnalyticsSnapshot:
    """Score the records and precompute everything query-independent."""
    records = tuple(sorted(records, key=lambda r: (r.created_at, r.tweet_id)))
    valence = valence if valence is not None else default_valence_lexicon()
    subjectivity = (
        subjectivity if subjectivity is not None else default_subjectivity_lexicon()
    )
    policy = policy if policy is not None else StopwordPolicy()
    featured = featured if featured is not None else default_featured_topics()
    week_bins = week_bins if week_bins is not None else WeekBins()

    scored = score_records(records, valence, subjectivity)
    events = detect_movements(build_trajectories(records), movement_window)
    table = weekly_mobility(events, week_bins)

    as_of = max((r.created_at for r in records), default=None)
    if clock_date is None:
        clock_date = as_of.date() if as_of is not None else date.today()

    lda_model = None
    lda_payload = None
    lda_error = "topic model not enabled"
    if topic_model is not None:
        docs = [remove_stopwords(tokenize(r.text), policy) for r in records]
        try:
            vocab = build_vocabulary(
                docs,
                min_df=topic_model.min_df,
                max_df_fraction=topic_model.max_df_fraction,
            )
            dtm = doc_term_matrix(docs, vocab)
            lda_model = lda_fit(
                dtm,
                k=topic_model.k,
                alpha=topic_model.alpha,
                beta=topic_model.beta,
                iterations=topic_model.iterations,
                seed=topic_model.seed,
            )
            lda_payload = export_topicvis(lda_model)
            lda_error = None
        except (EmptyVocabulary, InvalidTopicCount) as exc:
            lda_model = None
            lda_payload = None
            lda_error = str(exc)

    return AnalyticsSnapshot(
        as_of=as_of,
        clock=clock_date,
        records=records,
        scored=scored,
        policy=policy,
        featured=featured,
        week_bins=week_bins,
        mobility_table=table,
        cases=tuple(cases),
        lag_weeks=lag_weeks,
        lda_model=lda_model,
        lda_payload=lda_payload,
        lda_error=lda_error,
        skipped_rows=skipped_rows,
    )


def config_assets(config: AppConfig) -> dict:
    """Resolve configured lexicons, lists, bins, and settings to build kwargs.

    Batch builds and replay both go through this, so a replayed corpus
    ends up in exactly the snapshot a one-shot build would produce.
    """
    cases: tuple[CaseCount, ...] = ()
    bins = WeekBins(epoch=config.week_epoch)
    if config.cases_csv:
        with Path(config.cases_csv).open("rb") as fh:
            cases = ingest_case_counts(fh, bins)

    topic_model = None
    if config.lda_enabled:
        topic_model = TopicModelSettings(
            k=config.lda_topics,
            iterations=config.lda_iterations,
            seed=config.lda_seed,
            alpha=config.lda_alpha,
            beta=config.lda_beta,
            min_df=config.lda_min_df,
            max_df_fraction=config.lda_max_df_fraction,
        )

    return {
        "clock_date": config.clock_date,
        "valence": (
            load_valence_lexicon(config.valence_lexicon)
            if config.valence_lexicon
            else default_valence_lexicon()
        ),
        "subjectivity": (
            load_subjectivity_lexicon(config.subjectivity_lexicon)
            if config.subjectivity_lexicon
            else default_subjectivity_lexicon()
        ),
        "policy": StopwordPolicy.from_files(config.stopwords, config.extra_stopwords),
        "featured": (
            FeaturedTopicList.from_file(config.featured_topics)
            if config.featured_topics
            else default_featured_topics()
        ),
        "week_bins": bins,
        "cases": cases,
        "lag_weeks": config.lag_weeks,
        "topic_model": topic_model,
    }


def snapshot_from_config(
    config: AppConfig,
    *,
    start: date | None = None,
    end: date | None = None,
) -> AnalyticsSnapshot:
    """Load daily files under the configured data dir and build a snapshot."""
    days = load_daily_files(config.data_dir, start, end)
    records = [r for day in days for r in day.records]
    skipped = sum(day.skipped for day in days)
    return build_snapshot(
        records,
        skipped_rows=skipped,
        **config_assets(config),
    )


class SnapshotHolder:
    """Atomic published-snapshot slot shared by the service and replay.

    Publication is a single attribute assignment, so readers always see
    either the previous snapshot or the new one, never a mix.
    """

    def __init__(self, snapshot: AnalyticsSnapshot | None = None):
        self._snapshot = snapshot
        self._published = threading.Event()
        if snapshot is not None:
            self._published.set()

    def publish(self, snapshot: AnalyticsSnapshot) -> None:
        self._snapshot = snapshot
        self._published.set()

    def current(self) -> AnalyticsSnapshot:
        snapshot = self._snapshot
        if snapshot is None:
            raise RuntimeError("no snapshot published yet")
        return snapshot

    @property
    def ready(self) -> bool:
        return self._published.is_set()
