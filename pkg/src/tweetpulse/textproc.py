"""Tokenization, stopword policy, and n-gram extraction."""
from __future__ import annotations

import re
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import TypeVar

T = TypeVar("T")

# Watch-list query terms and platform noise: frequent by construction, never
# informative.
DOMAIN_STOPWORDS = frozenset(
    {"covid", "corona", "rt", "coronavirus", "covid19", "covid-19", "amp"}
)
_REQUIRED_DOMAIN = frozenset({"covid", "corona", "rt"})

MIN_TOKEN_LENGTH = 2

_EDGE_STRIP_RE = re.compile(r"^[^a-z0-9]+|[^a-z0-9]+$")


class InvalidArity(ValueError):
    """Raised for ngrams(n=0)."""


def load_wordlist(path: str | Path) -> frozenset[str]:
    """Load a one-word-per-line list; blank lines and '#' comments ignored."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.strip().lower()
        if word and not word.startswith("#"):
            words.add(word)
    return frozenset(words)


@lru_cache(maxsize=1)
def _packaged_stopwords() -> frozenset[str]:
    ref = resources.files("tweetpulse.data") / "stopwords_en.txt"
    with resources.as_file(ref) as path:
        return load_wordlist(path)


def standard_stopwords() -> frozenset[str]:
    """The packaged standard English stopword list, without domain terms."""
    return _packaged_stopwords()


@dataclass(frozen=True)
class StopwordPolicy:
    """Three-tier stopword filter: standard English, domain noise, caller extras.

    The core query terms stay in `domain` no matter how the policy is built;
    dropping them would flood every ranking with the collection keywords.
    """

    standard: frozenset[str] = field(default_factory=_packaged_stopwords)
    domain: frozenset[str] = DOMAIN_STOPWORDS
    extra: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "domain", frozenset(self.domain) | _REQUIRED_DOMAIN)
        object.__setattr__(self, "standard", frozenset(self.standard))
        object.__setattr__(self, "extra", frozenset(self.extra))

    @property
    def all(self) -> frozenset[str]:
        return self.standard | self.domain | self.extra

    @classmethod
    def from_files(cls, standard_path: str | Path | None = None, extra_path: str | Path | None = None) -> "StopwordPolicy":
        standard = load_wordlist(standard_path) if standard_path else _packaged_stopwords()
        extra = load_wordlist(extra_path) if extra_path else frozenset()
        return cls(standard=standard, extra=extra)


def tokenize(text: str) -> list[str]:
    """Split normalized text into word tokens.

    Splits on whitespace, strips non-alphanumeric characters from token
    edges (interior hyphens/apostrophes survive, so "covid-19" stays whole),
    and drops tokens shorter than MIN_TOKEN_LENGTH.
    """
    tokens = []
    for raw in text.split():
        token = _EDGE_STRIP_RE.sub("", raw)
        if len(token) >= MIN_TOKEN_LENGTH:
            tokens.append(token)
    return tokens


def remove_stopwords(tokens: list[str], policy: StopwordPolicy) -> list[str]:
    """Order-preserving stopword filter."""
    blocked = policy.all
    return [t for t in tokens if t not in blocked]


def ngrams(tokens: list[str], n: int) -> list[tuple[str, ...]]:
    """All consecutive n-tuples, in order."""
    if n < 1:
        raise InvalidArity(f"n must be >= 1, got {n}")
    return [tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)]


def top_counts(counts: Mapping[T, int], k: int) -> list[tuple[T, int]]:
    """Top-k items by count descending, ties broken by key ascending."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return sorted(counts.items(), key=lambda item: (-item[1], item[0]))[:k]
