"""Word-frequency analytics and topic-trend series.

All per-day series share one convention: the date range spans the full
record set (before any state filter), zero-filled, so per-state series
align day-for-day and sum to the nationwide one.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from datetime import date, timedelta
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .corpus.records import TweetRecord
from .states import require_state_code
from .textproc import (
    StopwordPolicy,
    ngrams,
    remove_stopwords,
    standard_stopwords,
    tokenize,
    top_counts,
)

DEFAULT_TREND_WORDS = 50
DEFAULT_BIGRAMS = 20
DEFAULT_FEATURED_RANKED = 50


@dataclass(frozen=True, slots=True)
class DailyCount:
    day: date
    count: int


@dataclass(frozen=True, slots=True)
class TopicTrendSeries:
    """Per-day tweet counts for one tracked word or phrase."""

    topic: str
    scope: str | None  # state code, or None for nationwide
    points: tuple[DailyCount, ...]

    @property
    def total(self) -> int:
        return sum(p.count for p in self.points)


@dataclass(frozen=True)
class FeaturedTopicList:
    """Watchlist of words/phrases; entries non-empty, lowercase, unique."""

    topics: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "topics", tuple(self.topics))
        seen: set[str] = set()
        for topic in self.topics:
            if not topic or topic != topic.lower():
                raise ValueError(f"featured topic must be non-empty lowercase: {topic!r}")
            if topic in seen:
                raise ValueError(f"duplicate featured topic: {topic!r}")
            seen.add(topic)

    def __len__(self) -> int:
        return len(self.topics)

    def __iter__(self):
        return iter(self.topics)

    @classmethod
    def from_file(cls, path: str | Path) -> "FeaturedTopicList":
        """One topic per line; blanks and # comments skipped, repeats dropped."""
        topics: list[str] = []
        seen: set[str] = set()
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            topic = " ".join(line.split()).lower()
            if not topic or topic.startswith("#"):
                continue
            if topic not in seen:
                topics.append(topic)
                seen.add(topic)
        return cls(tuple(topics))


@lru_cache(maxsize=1)
def default_featured_topics() -> FeaturedTopicList:
    ref = resources.files("tweetpulse.data") / "featured_topics.txt"
    with resources.as_file(ref) as path:
        return FeaturedTopicList.from_file(path)


def _corpus_range(records: Sequence[TweetRecord]) -> tuple[date, date] | None:
    days = [r.day for r in records]
    if not days:
        return None
    return min(days), max(days)


def _fill_days(span: tuple[date, date], counts: Counter[date]) -> tuple[DailyCount, ...]:
    start, end = span
    out = []
    day = start
    while day <= end:
        out.append(DailyCount(day=day, count=counts.get(day, 0)))
        day += timedelta(days=1)
    return tuple(out)


def tweet_frequency(
    records: Iterable[TweetRecord], scope: str | None = None
) -> tuple[DailyCount, ...]:
    """Per-day tweet counts; counts sum to the in-scope record total."""
    records = list(records)
    if scope is not None:
        require_state_code(scope)
    span = _corpus_range(records)
    if span is None:
        return ()
    counts = Counter(r.day for r in records if scope is None or r.loc == scope)
    return _fill_days(span, counts)


def top_words(
    records: Iterable[TweetRecord],
    k: int = DEFAULT_TREND_WORDS,
    policy: StopwordPolicy | None = None,
) -> list[tuple[str, int]]:
    """Top-k words by raw occurrence count after stopword filtering."""
    policy = policy or StopwordPolicy()
    counts: Counter[str] = Counter()
    for r in records:
        counts.update(remove_stopwords(tokenize(r.text), policy))
    return top_counts(counts, k)


def top_bigrams(
    records: Iterable[TweetRecord],
    k: int = DEFAULT_BIGRAMS,
    policy: StopwordPolicy | None = None,
) -> list[tuple[tuple[str, str], int]]:
    """Top-k bigrams; windows never cross tweet boundaries."""
    policy = policy or StopwordPolicy()
    counts: Counter[tuple[str, ...]] = Counter()
    for r in records:
        counts.update(ngrams(remove_stopwords(tokenize(r.text), policy), 2))
    return top_counts(counts, k)


def frequent_topic_trends(
    records: Iterable[TweetRecord],
    scope: str | None = None,
    k: int = DEFAULT_TREND_WORDS,
    policy: StopwordPolicy | None = None,
) -> list[TopicTrendSeries]:
    """Daily series for the k words appearing in the most tweets to date.

    A word counts once per tweet containing it, so no series ever exceeds
    the tweet-frequency series for the same day. Ranking uses the same
    cumulative tweet counts, ties broken lexicographically.
    """
    policy = policy or StopwordPolicy()
    records = list(records)
    if scope is not None:
        require_state_code(scope)
    span = _corpus_range(records)
    if span is None:
        return []

    per_word_day: dict[str, Counter[date]] = defaultdict(Counter)
    totals: Counter[str] = Counter()
    for r in records:
        if scope is not None and r.loc != scope:
            continue
        for word in set(remove_stopwords(tokenize(r.text), policy)):
            per_word_day[word][r.day] += 1
            totals[word] += 1

    return [
        TopicTrendSeries(topic=word, scope=scope, points=_fill_days(span, per_word_day[word]))
        for word, _ in top_counts(totals, k)
    ]


def _contains_phrase(tokens: Sequence[str], phrase: tuple[str, ...]) -> bool:
    n = len(phrase)
    if n == 1:
        return phrase[0] in tokens
    if n > len(tokens):
        return False
    return any(tuple(tokens[i : i + n]) == phrase for i in range(len(tokens) - n + 1))


def featured_topic_trends(
    records: Iterable[TweetRecord],
    scope: str | None = None,
    featured: FeaturedTopicList | None = None,
    k: int = DEFAULT_FEATURED_RANKED,
    *,
    stopwords: frozenset[str] | None = None,
) -> list[TopicTrendSeries]:
    """Daily series for the k most-tweeted watchlist topics.

    A topic matches a tweet when its words appear as a contiguous run in
    the tweet's filtered tokens, at most once per tweet. Filtering here
    uses the standard stopword list only: watchlist phrases may contain
    the collection keywords, so the domain list must not apply.
    """
    featured = featured if featured is not None else default_featured_topics()
    if len(featured) == 0:
        raise ValueError("featured topic list is empty")
    if k < 1 or k > len(featured):
        raise ValueError(f"k must be in [1, {len(featured)}], got {k}")
    blocked = standard_stopwords() if stopwords is None else frozenset(stopwords)
    records = list(records)
    if scope is not None:
        require_state_code(scope)
    span = _corpus_range(records)
    if span is None:
        return []

    phrases = {topic: tuple(topic.split()) for topic in featured}
    per_topic_day: dict[str, Counter[date]] = {topic: Counter() for topic in featured}
    totals: Counter[str] = Counter({topic: 0 for topic in featured})
    for r in records:
        if scope is not None and r.loc != scope:
            continue
        tokens = [t for t in tokenize(r.text) if t not in blocked]
        for topic, phrase in phrases.items():
            if _contains_phrase(tokens, phrase):
                per_topic_day[topic][r.day] += 1
                totals[topic] += 1

    return [
        TopicTrendSeries(topic=topic, scope=scope, points=_fill_days(span, per_topic_day[topic]))
        for topic, _ in top_counts(totals, k)
    ]
