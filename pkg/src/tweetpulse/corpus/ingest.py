"""Raw JSON-lines ingestion: keyword filter, state resolution, anonymization.

One JSON object per line. Recognized fields (platform-style nesting or flat):

    id / id_str / tweet_id        tweet id (string or integer)
    text / full_text              raw tweet text
    created_at                    timestamp (ISO-8601 UTC or Twitter-style)
    user.screen_name              user handle        (flat: user_handle / screen_name)
    user.verified                 account flag       (flat: verified)
    user.location                 free-form location (flat: location; or place.full_name)

A line qualifies when its text contains a tracked keyword and its location
resolves to a US state; everything else is dropped and counted. Malformed
lines never abort the ingest.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..states import resolve_state
from .csvio import dedup
from .normalize import anonymize_user, keyword_match, normalize_text
from .records import TweetRecord, parse_timestamp


@dataclass(slots=True)
class IngestStats:
    lines: int = 0
    kept: int = 0
    malformed: int = 0
    no_keyword: int = 0
    no_location: int = 0
    unresolved_location: int = 0
    duplicates: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "lines": self.lines,
            "kept": self.kept,
            "malformed": self.malformed,
            "no_keyword": self.no_keyword,
            "no_location": self.no_location,
            "unresolved_location": self.unresolved_location,
            "duplicates": self.duplicates,
        }


@dataclass(slots=True)
class IngestResult:
    records: list[TweetRecord] = field(default_factory=list)
    stats: IngestStats = field(default_factory=IngestStats)


def _extract(obj: dict):
    tweet_id = obj.get("id_str") or obj.get("tweet_id") or obj.get("id")
    if tweet_id is None:
        raise KeyError("id")
    tweet_id = str(tweet_id)
    text = obj.get("text") or obj.get("full_text")
    if not isinstance(text, str):
        raise KeyError("text")
    created_at = parse_timestamp(str(obj.get("created_at", "")))

    user = obj.get("user") if isinstance(obj.get("user"), dict) else {}
    handle = user.get("screen_name") or obj.get("user_handle") or obj.get("screen_name")
    if not handle:
        raise KeyError("user handle")
    verified = user.get("verified", obj.get("verified", False))

    location = user.get("location") or obj.get("location")
    if not location and isinstance(obj.get("place"), dict):
        location = obj["place"].get("full_name")
    return tweet_id, text, created_at, str(handle), bool(verified), location


def ingest_raw(lines, salt: bytes) -> IngestResult:
    """Filter and convert raw JSON lines into deduplicated TweetRecords."""
    result = IngestResult()
    stats = result.stats
    for line in lines:
        if isinstance(line, bytes):
            line = line.decode("utf-8", errors="replace")
        if not line.strip():
            continue
        stats.lines += 1
        try:
            obj = json.loads(line)
            if not isinstance(obj, dict):
                raise ValueError("line is not a JSON object")
            tweet_id, text, created_at, handle, verified, location = _extract(obj)
        except (ValueError, KeyError, TypeError):
            stats.malformed += 1
            continue
        if not keyword_match(text):
            stats.no_keyword += 1
            continue
        if not location:
            stats.no_location += 1
            continue
        loc = resolve_state(location)
        if loc is None:
            stats.unresolved_location += 1
            continue
        result.records.append(
            TweetRecord(
                tweet_id=tweet_id,
                created_at=created_at,
                loc=loc,
                text=normalize_text(text),
                user_id=anonymize_user(handle, salt),
                verified=verified,
            )
        )
        stats.kept += 1
    unique = dedup(result.records)
    stats.duplicates = len(result.records) - len(unique)
    stats.kept = len(unique)
    result.records = unique
    return result
