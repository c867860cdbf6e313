"""Corpus replay: re-publish history one day at a time.

Daily files are ingested in date order; after each one a fresh
snapshot over everything ingested so far is built and published in a
single swap. At speedup s, one corpus day passes per 86400/s wall
seconds. Days missing a file are logged and skipped; the clock still
advances, so pacing reflects calendar time, not file count.

Replaying the whole range lands on the same snapshot a one-shot batch
build would produce: both paths share config_assets and build_snapshot,
and snapshots carry no wall-clock state.
"""
from __future__ import annotations

import logging
import time
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from datetime import date, timedelta

from .config import AppConfig
from .corpus import TweetRecord, parse_daily_csv
from .engine import (
    AnalyticsSnapshot,
    SnapshotHolder,
    build_snapshot,
    config_assets,
    discover_daily_files,
)

# One corpus day per wall second.
DEFAULT_SPEEDUP = 86400.0

log = logging.getLogger(__name__)


class ReplayError(ValueError):
    """Bad replay parameters: empty corpus or range outside the files."""


@dataclass(frozen=True, slots=True)
class ReplayStep:
    """One published day: its date, cumulative snapshot, and gap flag."""

    day: date
    snapshot: AnalyticsSnapshot
    ingested: int  # records added by this day's file; 0 on a gap day


def replay_steps(
    config: AppConfig,
    *,
    speedup: float = DEFAULT_SPEEDUP,
    start: date | None = None,
    end: date | None = None,
    sleep: Callable[[float], None] = time.sleep,
) -> Iterator[ReplayStep]:
    """Yield a cumulative snapshot per calendar day of the replay range."""
    if speedup <= 0:
        raise ReplayError(f"speedup must be positive, got {speedup}")
    available = discover_daily_files(config.data_dir)
    if not available:
        raise ReplayError(f"no daily files under {config.data_dir}")
    first, last = available[0][0], available[-1][0]
    start = first if start is None else start
    end = last if end is None else end
    if start > end:
        raise ReplayError(f"start {start} is after end {end}")
    if start < first or end > last:
        raise ReplayError(
            f"range [{start}, {end}] outside available files [{first}, {last}]"
        )

    by_day = dict(available)
    assets = config_assets(config)
    configured_clock = assets.pop("clock_date")
    pause = 86400.0 / speedup

    records: list[TweetRecord] = []
    skipped = 0
    day = start
    while day <= end:
        if day != start:
            sleep(pause)
        path = by_day.get(day)
        ingested = 0
        if path is None:
            log.warning("replay gap: no daily file for %s", day)
        else:
            with path.open("rb") as fh:
                daily = parse_daily_csv(fh, expected_date=day)
            records.extend(daily.records)
            skipped += daily.skipped
            ingested = len(daily.records)
        snapshot = build_snapshot(
            records,
            clock_date=configured_clock if configured_clock is not None else day,
            skipped_rows=skipped,
            **assets,
        )
        yield ReplayStep(day=day, snapshot=snapshot, ingested=ingested)
        day += timedelta(days=1)


def run_replay(
    config: AppConfig,
    holder: SnapshotHolder,
    *,
    speedup: float = DEFAULT_SPEEDUP,
    start: date | None = None,
    end: date | None = None,
    sleep: Callable[[float], None] = time.sleep,
) -> AnalyticsSnapshot:
    """Drive a full replay, publishing every step into the holder."""
    snapshot = None
    for step in replay_steps(config, speedup=speedup, start=start, end=end, sleep=sleep):
        holder.publish(step.snapshot)
        snapshot = step.snapshot
    assert snapshot is not None  # range always covers >= 1 day
    return snapshot
