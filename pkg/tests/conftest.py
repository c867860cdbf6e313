"""Shared fixtures: record builders and on-disk corpus directories."""
from __future__ import annotations

from datetime import date, datetime, timezone
from pathlib import Path

import pytest

from tweetpulse.corpus import DailyFile, TweetRecord, write_daily_csv


@pytest.fixture
def make_record():
    """Factory with compact defaults; created_at accepts a day-of-June shorthand."""

    counter = iter(range(1, 10_000_000))

    def build(
        text: str = "corona cases rising",
        *,
        day: int | None = None,
        when: datetime | None = None,
        loc: str = "PA",
        user: str = "u1",
        verified: bool = False,
        tweet_id: str | None = None,
    ) -> TweetRecord:
        if when is None:
            when = datetime(2020, 6, day if day is not None else 1, 12, 0, tzinfo=timezone.utc)
        return TweetRecord(
            tweet_id=tweet_id if tweet_id is not None else str(next(counter)),
            created_at=when,
            loc=loc,
            text=text,
            user_id=user,
            verified=verified,
        )

    return build


@pytest.fixture
def small_corpus(make_record) -> list[TweetRecord]:
    """Three days, three states, both cohorts, one cross-state mover."""
    return [
        make_record("corona cases rising fast help needed", day=11, loc="PA", user="u1"),
        make_record("great news vaccine trials looking good", day=11, loc="NY", user="u2", verified=True),
        make_record("no help from the state this week", day=12, loc="PA", user="u1"),
        make_record("masks help but people keep dying", day=12, loc="NY", user="u3"),
        make_record("stay home save lives corona outbreak", day=13, loc="NJ", user="u2", verified=True),
    ]


def write_corpus_dir(tmp_path: Path, records) -> Path:
    """Group records by day and write canonical daily files under tmp_path/data."""
    data_dir = tmp_path / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    by_day: dict[date, list[TweetRecord]] = {}
    for rec in records:
        by_day.setdefault(rec.day, []).append(rec)
    for day, recs in sorted(by_day.items()):
        daily = DailyFile(date=day, records=recs)
        (data_dir / daily.filename).write_bytes(write_daily_csv(daily))
    return data_dir


@pytest.fixture
def corpus_dir(tmp_path, small_corpus) -> Path:
    return write_corpus_dir(tmp_path, small_corpus)
