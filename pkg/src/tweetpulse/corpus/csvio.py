"""Daily CSV codec and deduplication.

Wire format: UTF-8 CSV, header `tweet_id,created_at,loc,text,user_id,verified`,
ISO-8601 UTC timestamps, verified as 1/0, LF line endings. `write_daily_csv`
is canonical: parse(write(x)) == x and write(parse(b)) is byte-stable.
"""
from __future__ import annotations

import csv
import io
from datetime import date

from ..states import is_state_code
from .records import CorpusError, DailyFile, TweetRecord, format_timestamp, parse_timestamp

COLUMNS = ("tweet_id", "created_at", "loc", "text", "user_id", "verified")


class CsvFormatError(CorpusError):
    """File-level CSV failure."""


class MissingColumn(CsvFormatError):
    def __init__(self, column: str):
        super().__init__(f"missing column {column!r}")
        self.column = column


class RowError(CorpusError):
    """A data row violates the format; `row` is 1-based over data rows."""

    def __init__(self, row: int, message: str):
        super().__init__(f"row {row}: {message}")
        self.row = row


class BadTimestamp(RowError):
    pass


class BadState(RowError):
    pass


class BadVerified(RowError):
    pass


class BadRow(RowError):
    """Catch-all: empty id, wrong field count, off-date record."""


def parse_daily_csv(stream, *, expected_date: date | None = None, strict: bool = False) -> DailyFile:
    """Parse one daily file.

    `stream` is bytes, str, or a binary/text file object. In strict mode the
    first bad row raises; in lenient mode (default) bad rows are skipped and
    counted on the returned DailyFile. The file's date is `expected_date` or,
    when omitted, the day of the first valid record.
    """
    text = as_text(stream)
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None:
        raise CsvFormatError("empty file: no header row")
    for col in COLUMNS:
        if col not in reader.fieldnames:
            raise MissingColumn(col)

    records: list[TweetRecord] = []
    skipped = 0
    day = expected_date
    for i, row in enumerate(reader, start=1):
        try:
            rec = _parse_row(i, row)
            if day is None:
                day = rec.day
            elif rec.day != day:
                raise BadRow(i, f"record dated {rec.day}, file is {day}")
        except RowError:
            if strict:
                raise
            skipped += 1
            continue
        records.append(rec)
    if day is None:
        raise CsvFormatError("cannot infer file date: no valid records and no expected_date")
    return DailyFile(date=day, records=records, skipped=skipped)


def _parse_row(rownum: int, row: dict[str, str | None]) -> TweetRecord:
    if any(row.get(col) is None for col in COLUMNS):
        raise BadRow(rownum, "wrong number of fields")
    tweet_id = (row["tweet_id"] or "").strip()
    if not tweet_id:
        raise BadRow(rownum, "empty tweet_id")
    try:
        created_at = parse_timestamp(row["created_at"] or "")
    except ValueError as exc:
        raise BadTimestamp(rownum, str(exc)) from exc
    loc = (row["loc"] or "").strip().upper()
    if not is_state_code(loc):
        raise BadState(rownum, f"unknown state {row['loc']!r}")
    verified_raw = (row["verified"] or "").strip()
    if verified_raw not in ("0", "1"):
        raise BadVerified(rownum, f"verified must be 1 or 0, got {row['verified']!r}")
    return TweetRecord(
        tweet_id=tweet_id,
        created_at=created_at,
        loc=loc,
        text=row["text"] or "",
        user_id=row["user_id"] or "",
        verified=verified_raw == "1",
    )


def write_daily_csv(daily: DailyFile) -> bytes:
    """Serialize to the canonical byte form (header, input order, LF endings)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for rec in daily.records:
        writer.writerow(
            (
                rec.tweet_id,
                format_timestamp(rec.created_at),
                rec.loc,
                rec.text,
                rec.user_id,
                "1" if rec.verified else "0",
            )
        )
    return buf.getvalue().encode("utf-8")


def dedup(records: list[TweetRecord]) -> list[TweetRecord]:
    """Keep the first occurrence of each tweet_id, preserving order."""
    seen: set[str] = set()
    out: list[TweetRecord] = []
    for rec in records:
        if rec.tweet_id in seen:
            continue
        seen.add(rec.tweet_id)
        out.append(rec)
    return out


def as_text(stream) -> str:
    if isinstance(stream, bytes):
        return stream.decode("utf-8")
    if isinstance(stream, str):
        return stream
    data = stream.read()
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data
