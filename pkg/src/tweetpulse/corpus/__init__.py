"""Tweet corpus: canonical records, daily CSV codec, raw-stream ingestion."""
from .csvio import (
    COLUMNS,
    BadRow,
    BadState,
    BadTimestamp,
    BadVerified,
    CsvFormatError,
    MissingColumn,
    RowError,
    as_text,
    dedup,
    parse_daily_csv,
    write_daily_csv,
)
from .ingest import IngestResult, IngestStats, ingest_raw
from .normalize import InvalidHandle, anonymize_user, keyword_match, normalize_text
from .records import (
    TEXT_ALPHABET,
    CorpusError,
    DailyFile,
    InvalidRecord,
    TweetRecord,
    format_timestamp,
    parse_timestamp,
)

__all__ = [
    "COLUMNS",
    "TEXT_ALPHABET",
    "BadRow",
    "BadState",
    "BadTimestamp",
    "BadVerified",
    "CorpusError",
    "CsvFormatError",
    "DailyFile",
    "IngestResult",
    "IngestStats",
    "InvalidHandle",
    "InvalidRecord",
    "MissingColumn",
    "RowError",
    "TweetRecord",
    "anonymize_user",
    "as_text",
    "dedup",
    "format_timestamp",
    "ingest_raw",
    "keyword_match",
    "normalize_text",
    "parse_daily_csv",
    "parse_timestamp",
    "write_daily_csv",
]
