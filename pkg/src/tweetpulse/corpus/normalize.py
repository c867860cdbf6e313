"""Keyword filtering, text normalization, and user anonymization."""
from __future__ import annotations

import hashlib
import hmac
import re

from .records import CorpusError

KEYWORDS = ("covid", "corona")

_URL_RE = re.compile(r"(?:https?://|www\.)\S+", re.IGNORECASE)
_MENTION_RE = re.compile(r"@\w+")
_DISALLOWED_RE = re.compile(r"[^a-z0-9 '#]+")
_SPACE_RE = re.compile(r"\s+")

PSEUDO_ID_LENGTH = 16


class InvalidHandle(CorpusError):
    """Raised for an empty user handle."""


def keyword_match(raw_text: str) -> bool:
    """True iff the lowercased text contains a tracked keyword, even mid-word."""
    lowered = raw_text.lower()
    return any(kw in lowered for kw in KEYWORDS)


def normalize_text(raw_text: str, stopwords: frozenset[str] = frozenset()) -> str:
    """Normalize raw tweet text for storage.

    Lowercases, removes URLs and @-mentions, drops every character outside
    [a-z0-9 ' #], collapses whitespace, and filters the configured stopword
    subset (empty by default: stored text keeps stopwords so downstream
    analytics choose their own policy). Idempotent.
    """
    text = _URL_RE.sub(" ", raw_text)
    text = _MENTION_RE.sub(" ", text)
    text = text.lower()
    text = _DISALLOWED_RE.sub(" ", text)
    text = _SPACE_RE.sub(" ", text).strip()
    if stopwords:
        text = " ".join(w for w in text.split(" ") if w and w not in stopwords)
    return text


def anonymize_user(raw_handle: str, salt: bytes) -> str:
    """Deterministic one-way pseudo-id for a user handle.

    Keyed hash so the mapping cannot be reproduced without the corpus salt;
    truncated hex keeps the id compact while collisions stay negligible.
    """
    if not raw_handle:
        raise InvalidHandle("user handle must be non-empty")
    digest = hmac.new(salt, raw_handle.encode("utf-8"), hashlib.sha256)
    return digest.hexdigest()[:PSEUDO_ID_LENGTH]
