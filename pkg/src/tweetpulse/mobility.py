"""Cross-state user movement inference and the mobility-vs-infection join.

A movement is two successive posts by the same user from different states
no more than 14 days apart; only consecutive pairs count, so a chain
A -> B -> C yields two events, never A -> C. Movements attribute to the
destination state, and weekly counts are unique users, not events.
"""
from __future__ import annotations

import csv
import io
import math
from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from datetime import date, datetime, timedelta
from itertools import groupby

from .corpus.csvio import as_text
from .corpus.records import TweetRecord
from .states import STATE_CODES

DEFAULT_WINDOW = timedelta(days=14)
DEFAULT_LAG_WEEKS = 1
# Week bins run Thursday to Thursday; the corpus starts on one.
DEFAULT_WEEK_EPOCH = date(2020, 3, 5)

CASE_COLUMNS = ("state", "week_start", "cases")


class CaseCountError(ValueError):
    """Raised for malformed case-count input."""


class CaseRowError(CaseCountError):
    def __init__(self, row: int, message: str):
        super().__init__(f"row {row}: {message}")
        self.row = row


class InsufficientData(ValueError):
    """Raised when a correlation is undefined: too few rows or no variance."""


@dataclass(frozen=True, slots=True)
class TrajectoryPoint:
    when: datetime
    state: str


@dataclass(frozen=True, slots=True)
class UserTrajectory:
    user_id: str
    points: tuple[TrajectoryPoint, ...]


@dataclass(frozen=True, slots=True)
class MobilityEvent:
    user_id: str
    from_state: str
    to_state: str
    t_from: datetime
    t_to: datetime


@dataclass(frozen=True)
class WeekBins:
    """Contiguous 7-day bins anchored at a fixed epoch.

    `start`/`end` optionally clamp the usable range; both are inclusive
    bin-start dates and must land on bin boundaries.
    """

    epoch: date = DEFAULT_WEEK_EPOCH
    start: date | None = None
    end: date | None = None

    def __post_init__(self):
        for bound in (self.start, self.end):
            if bound is not None and (bound - self.epoch).days % 7 != 0:
                raise ValueError(f"bound {bound} not aligned to epoch {self.epoch}")
        if self.start is not None and self.end is not None and self.end < self.start:
            raise ValueError("end bin before start bin")

    def bin_start(self, day: date) -> date:
        return day - timedelta(days=(day - self.epoch).days % 7)

    def in_range(self, week_start: date) -> bool:
        if self.start is not None and week_start < self.start:
            return False
        if self.end is not None and week_start > self.end:
            return False
        return True


@dataclass(frozen=True)
class WeeklyMobility:
    week_start: date
    week_end: date  # exclusive: week_start + 7 days
    counts: Mapping[str, int]  # destination state -> unique movers


@dataclass(frozen=True)
class MobilityTable:
    weeks: tuple[WeeklyMobility, ...]
    overflow: int  # events whose destination week fell outside the bins


@dataclass(frozen=True, slots=True)
class CaseCount:
    state: str
    week_start: date
    cases: int


@dataclass(frozen=True, slots=True)
class JoinedRow:
    state: str
    week_start: date  # infection week w; mobility column is week w - lag
    mobility: int
    cases: int


@dataclass(frozen=True)
class CorrelationReport:
    pooled: float
    per_week: Mapping[date, float]
    # Weeks where r is undefined (under 2 rows or zero variance), listed
    # rather than silently reported as 0.
    insufficient_weeks: tuple[date, ...]


def build_trajectories(records: Iterable[TweetRecord]) -> list[UserTrajectory]:
    """One time-ordered trajectory per user; ties sort by tweet_id."""
    by_user: dict[str, list[TweetRecord]] = defaultdict(list)
    for record in records:
        by_user[record.user_id].append(record)
    trajectories = []
    for user_id in sorted(by_user):
        ordered = sorted(by_user[user_id], key=lambda r: (r.created_at, r.tweet_id))
        trajectories.append(
            UserTrajectory(
                user_id=user_id,
                points=tuple(TrajectoryPoint(when=r.created_at, state=r.loc) for r in ordered),
            )
        )
    return trajectories


def detect_movements(
    trajectories: Iterable[UserTrajectory],
    window: timedelta = DEFAULT_WINDOW,
) -> list[MobilityEvent]:
    """Movements between consecutive posts in different states within `window`.

    The window boundary is inclusive; a zero gap (same-instant posts from
    different states) is not a movement.
    """
    if window <= timedelta(0):
        raise ValueError(f"window must be positive, got {window!r}")
    events = []
    for trajectory in trajectories:
        for prev, cur in zip(trajectory.points, trajectory.points[1:]):
            if prev.state == cur.state:
                continue
            gap = cur.when - prev.when
            if timedelta(0) < gap <= window:
                events.append(
                    MobilityEvent(
                        user_id=trajectory.user_id,
                        from_state=prev.state,
                        to_state=cur.state,
                        t_from=prev.when,
                        t_to=cur.when,
                    )
                )
    return events


def weekly_mobility(
    events: Iterable[MobilityEvent],
    bins: WeekBins | None = None,
) -> MobilityTable:
    """Unique movers per destination state per week; t_to picks the week."""
    bins = bins or WeekBins()
    movers: dict[date, dict[str, set[str]]] = defaultdict(lambda: defaultdict(set))
    overflow = 0
    for event in events:
        week = bins.bin_start(event.t_to.date())
        if not bins.in_range(week):
            overflow += 1
            continue
        movers[week][event.to_state].add(event.user_id)
    weeks = tuple(
        WeeklyMobility(
            week_start=week,
            week_end=week + timedelta(days=7),
            counts={state: len(users) for state, users in sorted(movers[week].items())},
        )
        for week in sorted(movers)
    )
    return MobilityTable(weeks=weeks, overflow=overflow)


def ingest_case_counts(stream, bins: WeekBins | None = None) -> tuple[CaseCount, ...]:
    """Parse `state,week_start,cases` CSV rows aligned to the week bins."""
    bins = bins or WeekBins()
    reader = csv.DictReader(io.StringIO(as_text(stream)))
    fields = reader.fieldnames or []
    for column in CASE_COLUMNS:
        if column not in fields:
            raise CaseCountError(f"missing column: {column}")
    rows: list[CaseCount] = []
    seen: set[tuple[str, date]] = set()
    for rownum, row in enumerate(reader, start=1):
        state = (row["state"] or "").strip().upper()
        if state not in STATE_CODES:
            raise CaseRowError(rownum, f"unknown state {row['state']!r}")
        try:
            week = date.fromisoformat((row["week_start"] or "").strip())
        except ValueError:
            raise CaseRowError(rownum, f"bad week_start {row['week_start']!r}") from None
        if bins.bin_start(week) != week:
            raise CaseRowError(rownum, f"week_start {week} not on a bin boundary")
        try:
            cases = int((row["cases"] or "").strip())
        except ValueError:
            raise CaseRowError(rownum, f"bad cases {row['cases']!r}") from None
        if cases < 0:
            raise CaseRowError(rownum, f"negative cases: {cases}")
        key = (state, week)
        if key in seen:
            raise CaseRowError(rownum, f"duplicate entry for {state} {week}")
        seen.add(key)
        rows.append(CaseCount(state=state, week_start=week, cases=cases))
    return tuple(rows)


def lagged_join(
    mobility: Sequence[WeeklyMobility],
    infections: Sequence[CaseCount],
    lag_weeks: int = DEFAULT_LAG_WEEKS,
) -> list[JoinedRow]:
    """Join cases(w) with mobility(w - lag); inner join on (state, week).

    Rows missing either side are omitted. Output is sorted by
    (week_start, state) for stable downstream tables.
    """
    if lag_weeks < 0:
        raise ValueError(f"lag_weeks must be >= 0, got {lag_weeks}")
    mob: dict[tuple[str, date], int] = {}
    for week in mobility:
        for state, count in week.counts.items():
            mob[(state, week.week_start)] = count
    shift = timedelta(weeks=lag_weeks)
    rows = []
    for cc in sorted(infections, key=lambda c: (c.week_start, c.state)):
        key = (cc.state, cc.week_start - shift)
        if key in mob:
            rows.append(
                JoinedRow(state=cc.state, week_start=cc.week_start, mobility=mob[key], cases=cc.cases)
            )
    return rows


def _pearson(xs: Sequence[float], ys: Sequence[float]) -> float | None:
    """Pearson r via centered sums; None when either side has no variance."""
    n = len(xs)
    mean_x = math.fsum(xs) / n
    mean_y = math.fsum(ys) / n
    dx = [x - mean_x for x in xs]
    dy = [y - mean_y for y in ys]
    sxx = math.fsum(a * a for a in dx)
    syy = math.fsum(b * b for b in dy)
    if sxx == 0.0 or syy == 0.0:
        return None
    r = math.fsum(a * b for a, b in zip(dx, dy)) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


def mobility_correlation(rows: Sequence[JoinedRow]) -> CorrelationReport:
    """Pearson r between mobility and cases, pooled and per infection week."""
    if len(rows) < 2:
        raise InsufficientData(f"need at least 2 joined rows, got {len(rows)}")
    pooled = _pearson([float(r.mobility) for r in rows], [float(r.cases) for r in rows])
    if pooled is None:
        raise InsufficientData("zero variance in mobility or cases")

    per_week: dict[date, float] = {}
    insufficient: list[date] = []
    ordered = sorted(rows, key=lambda r: (r.week_start, r.state))
    for week, group in groupby(ordered, key=lambda r: r.week_start):
        members = list(group)
        if len(members) < 2:
            insufficient.append(week)
            continue
        r = _pearson([float(m.mobility) for m in members], [float(m.cases) for m in members])
        if r is None:
            insufficient.append(week)
        else:
            per_week[week] = r
    return CorrelationReport(pooled=pooled, per_week=per_week, insufficient_weeks=tuple(insufficient))
