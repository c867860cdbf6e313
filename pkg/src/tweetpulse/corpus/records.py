"""Canonical tweet record and daily-file container."""
from __future__ import annotations

from dataclasses import dataclass, field
from datetime import date, datetime, timezone

from ..states import is_state_code

# Alphabet of stored tweet text: lowercase alphanumerics, space, apostrophe, hash.
TEXT_ALPHABET = frozenset("abcdefghijklmnopqrstuvwxyz0123456789 '#")

TIMESTAMP_FORMAT = "%Y-%m-%dT%H:%M:%SZ"

# Accepted on input next to ISO-8601: the platform's native timestamp style,
# with or without an explicit offset.
_INPUT_FORMATS = (
    TIMESTAMP_FORMAT,
    "%a %b %d %H:%M:%S %z %Y",
    "%a %b %d %H:%M:%S %Y",
)


class CorpusError(Exception):
    """Base class for corpus-level failures."""


class InvalidRecord(CorpusError):
    """A TweetRecord field violates its invariant."""


def parse_timestamp(raw: str) -> datetime:
    """Parse an ISO-8601 UTC or Twitter-style timestamp to an aware UTC datetime."""
    raw = raw.strip()
    for fmt in _INPUT_FORMATS:
        try:
            dt = datetime.strptime(raw, fmt)
        except ValueError:
            continue
        if dt.tzinfo is None:
            return dt.replace(tzinfo=timezone.utc)
        return dt.astimezone(timezone.utc)
    raise ValueError(f"unrecognized timestamp: {raw!r}")


def format_timestamp(dt: datetime) -> str:
    return dt.astimezone(timezone.utc).strftime(TIMESTAMP_FORMAT)


@dataclass(frozen=True, slots=True)
class TweetRecord:
    """One processed tweet.

    text is stored normalized: lowercase, restricted to TEXT_ALPHABET.
    user_id is a pseudo-id; verified mirrors the platform's account flag.
    """

    tweet_id: str
    created_at: datetime
    loc: str
    text: str
    user_id: str
    verified: bool

    def validate(self) -> None:
        if not self.tweet_id:
            raise InvalidRecord("tweet_id must be non-empty")
        if self.created_at.tzinfo is None:
            raise InvalidRecord("created_at must be timezone-aware UTC")
        if not is_state_code(self.loc):
            raise InvalidRecord(f"loc {self.loc!r} is not a state code")
        bad = set(self.text) - TEXT_ALPHABET
        if bad:
            raise InvalidRecord(f"text contains characters outside the alphabet: {sorted(bad)!r}")

    @property
    def day(self) -> date:
        return self.created_at.astimezone(timezone.utc).date()


@dataclass(slots=True)
class DailyFile:
    """All records for one calendar day, in file order.

    `skipped` counts rows dropped by a lenient parse; it does not take part
    in equality so round-trip comparisons stay meaningful.
    """

    date: date
    records: list[TweetRecord]
    skipped: int = field(default=0, compare=False)

    def validate(self) -> None:
        for rec in self.records:
            rec.validate()
            if rec.day != self.date:
                raise InvalidRecord(
                    f"record {rec.tweet_id} dated {rec.day} does not belong to {self.date}"
                )

    @property
    def filename(self) -> str:
        return f"{self.date.isoformat()}.csv"
