"""Fact-versus-opinion scoring from a term subjectivity lexicon."""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from .polarity import prepare_tokens


@dataclass(frozen=True, slots=True)
class SubjectivityScore:
    """Mean lexicon subjectivity of the text, in [0, 1]; 0 = pure fact."""

    value: float


def score_subjectivity(text: str, subj_lexicon: Mapping[str, float]) -> SubjectivityScore:
    """Mean subjectivity over lexicon-matched tokens; 0.0 without matches."""
    matched = [
        subj_lexicon[token]
        for token in (t.lower() for t in prepare_tokens(text))
        if token in subj_lexicon
    ]
    if not matched:
        return SubjectivityScore(0.0)
    return SubjectivityScore(sum(matched) / len(matched))
