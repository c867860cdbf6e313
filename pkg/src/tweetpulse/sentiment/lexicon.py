"""Loaders for tab-separated term lexicons.

Both lexicon kinds share one file format: `term<TAB>value`, one entry per
line, with blank lines and `#` comments ignored. Later entries for the same
term override earlier ones.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from functools import lru_cache
from importlib import resources
from pathlib import Path
from types import MappingProxyType


class LexiconError(ValueError):
    """Raised when a lexicon file is malformed."""


def _parse_tsv(lines: Iterable[str], *, name: str) -> dict[str, float]:
    table: dict[str, float] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) < 2:
            raise LexiconError(f"{name}:{lineno}: expected term<TAB>value")
        term = fields[0].strip().lower()
        if not term:
            raise LexiconError(f"{name}:{lineno}: empty term")
        try:
            value = float(fields[1])
        except ValueError:
            raise LexiconError(f"{name}:{lineno}: bad value {fields[1]!r}") from None
        table[term] = value
    return table


def load_valence_lexicon(path: str | Path) -> dict[str, float]:
    """Load a term -> valence table (any finite real valence)."""
    path = Path(path)
    return _parse_tsv(path.read_text(encoding="utf-8").splitlines(), name=path.name)


def load_subjectivity_lexicon(path: str | Path) -> dict[str, float]:
    """Load a term -> subjectivity table; every value must sit in [0, 1]."""
    path = Path(path)
    table = _parse_tsv(path.read_text(encoding="utf-8").splitlines(), name=path.name)
    for term, value in table.items():
        if not 0.0 <= value <= 1.0:
            raise LexiconError(f"{path.name}: subjectivity for {term!r} outside [0, 1]: {value}")
    return table


def _packaged(filename: str) -> dict[str, float]:
    text = (resources.files("tweetpulse.data") / filename).read_text(encoding="utf-8")
    return _parse_tsv(text.splitlines(), name=filename)


@lru_cache(maxsize=1)
def default_valence_lexicon() -> Mapping[str, float]:
    return MappingProxyType(_packaged("polarity_lexicon.tsv"))


@lru_cache(maxsize=1)
def default_subjectivity_lexicon() -> Mapping[str, float]:
    return MappingProxyType(_packaged("subjectivity_lexicon.tsv"))
