"""Valence-intensity polarity scoring.

Implements the standard rule-based social-media sentiment algorithm:
per-token valence lookup adjusted for negation, degree modifiers, and the
contrastive conjunction "but", then compound normalization into [-1, 1].
Emoji, capitalization emphasis, punctuation emphasis, and multi-word idiom
tables are deliberately out of scope; input here is pre-normalized text.
"""
from __future__ import annotations

import enum
import math
import string
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .wordlists import (
    BOOSTERS,
    DISTANCE_DAMPING,
    NEGATE,
    NEGATION_SCALAR,
    NEVER_INTENSIFIER,
    NORMALIZATION_ALPHA,
    POST_BUT_FACTOR,
    PRE_BUT_FACTOR,
)

# Compounds strictly inside (-0.05, 0.05) are neutral; the boundaries
# themselves belong to the signed classes.
NEUTRAL_BAND = 0.05


class SentimentLabel(str, enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"


@dataclass(frozen=True, slots=True)
class PolarityScore:
    """Compound polarity in [-1, 1] plus pos/neu/neg mass proportions."""

    compound: float
    pos: float
    neu: float
    neg: float

    def as_dict(self) -> dict[str, float]:
        return {"compound": self.compound, "pos": self.pos, "neu": self.neu, "neg": self.neg}


def prepare_tokens(text: str) -> list[str]:
    """Split on whitespace, trimming edge punctuation from long tokens.

    Tokens that would shrink to two characters or fewer keep their
    punctuation so short forms survive intact.
    """
    tokens = []
    for token in text.split():
        stripped = token.strip(string.punctuation)
        tokens.append(token if len(stripped) <= 2 else stripped)
    return tokens


def _negated(token: str) -> bool:
    return token in NEGATE or "n't" in token


def _booster_scalar(token: str, valence: float) -> float:
    # Degree modifiers push away from zero, so their sign follows the
    # valence they modify.
    scalar = BOOSTERS.get(token, 0.0)
    if scalar and valence < 0:
        scalar = -scalar
    return scalar


def _negation_adjust(valence: float, tokens: Sequence[str], dist: int, i: int) -> float:
    """Flip valence when a negator sits `dist + 1` tokens back.

    Two idiom exemptions: "never so/this X" intensifies instead of
    negating, and "without doubt X" passes through unchanged.
    """
    if dist == 0:
        if _negated(tokens[i - 1]):
            valence *= NEGATION_SCALAR
    elif dist == 1:
        if tokens[i - 2] == "never" and tokens[i - 1] in ("so", "this"):
            valence *= NEVER_INTENSIFIER
        elif tokens[i - 2] == "without" and tokens[i - 1] == "doubt":
            pass
        elif _negated(tokens[i - 2]):
            valence *= NEGATION_SCALAR
    else:
        if tokens[i - 3] == "never" and (
            tokens[i - 2] in ("so", "this") or tokens[i - 1] in ("so", "this")
        ):
            valence *= NEVER_INTENSIFIER
        elif tokens[i - 3] == "without" and "doubt" in (tokens[i - 2], tokens[i - 1]):
            pass
        elif _negated(tokens[i - 3]):
            valence *= NEGATION_SCALAR
    return valence


def _least_adjust(valence: float, tokens: Sequence[str], i: int, lexicon: Mapping[str, float]) -> float:
    # "least good" negates, but "at least good" / "very least good" do not.
    if i > 1 and tokens[i - 1] == "least" and tokens[i - 1] not in lexicon:
        if tokens[i - 2] not in ("at", "very"):
            valence *= NEGATION_SCALAR
    elif i > 0 and tokens[i - 1] == "least" and tokens[i - 1] not in lexicon:
        valence *= NEGATION_SCALAR
    return valence


def _token_valence(tokens: Sequence[str], i: int, lexicon: Mapping[str, float]) -> float:
    token = tokens[i]
    if token not in lexicon:
        return 0.0
    valence = lexicon[token]

    # "no" directly before a lexicon word acts as a negator, not a word of
    # its own; the relayed word below picks up the flip.
    if token == "no" and i + 1 < len(tokens) and tokens[i + 1] in lexicon:
        valence = 0.0
    if (
        (i > 0 and tokens[i - 1] == "no")
        or (i > 1 and tokens[i - 2] == "no")
        or (i > 2 and tokens[i - 3] == "no" and tokens[i - 1] in ("or", "nor"))
    ):
        valence = lexicon[token] * NEGATION_SCALAR

    # Scan up to three preceding context tokens; lexicon words in that
    # window carry their own sentiment and never modify this one.
    for dist in range(3):
        if i <= dist:
            break
        context = tokens[i - (dist + 1)]
        if context in lexicon:
            continue
        valence += _booster_scalar(context, valence) * DISTANCE_DAMPING[dist]
        valence = _negation_adjust(valence, tokens, dist, i)
    return _least_adjust(valence, tokens, i, lexicon)


def _apply_but(tokens: Sequence[str], sentiments: list[float]) -> None:
    """Shift weight across the first "but": halve before, amplify after."""
    try:
        pivot = tokens.index("but")
    except ValueError:
        return
    for idx in range(len(sentiments)):
        if idx < pivot:
            sentiments[idx] *= PRE_BUT_FACTOR
        elif idx > pivot:
            sentiments[idx] *= POST_BUT_FACTOR


def _sift(sentiments: Sequence[float]) -> tuple[float, float, int]:
    pos_sum = 0.0
    neg_sum = 0.0
    neu_count = 0
    for s in sentiments:
        if s > 0:
            pos_sum += s + 1.0  # +-1 keeps weak hits from reading as pure signal
        elif s < 0:
            neg_sum += s - 1.0
        else:
            neu_count += 1
    return pos_sum, neg_sum, neu_count


def _normalize(score: float) -> float:
    norm = score / math.sqrt(score * score + NORMALIZATION_ALPHA)
    return max(-1.0, min(1.0, norm))


def score_polarity(text: str, lexicon: Mapping[str, float]) -> PolarityScore:
    """Score one text against a term -> valence lexicon.

    Deterministic and pure. Text without tokens or lexicon hits comes back
    as compound 0.0 with all mass on neu.
    """
    tokens = [t.lower() for t in prepare_tokens(text)]
    if not tokens:
        return PolarityScore(compound=0.0, pos=0.0, neu=1.0, neg=0.0)

    sentiments: list[float] = []
    for i, token in enumerate(tokens):
        # Degree modifiers and the "kind of" hedge carry no valence of
        # their own; they only adjust neighbors.
        if token in BOOSTERS:
            sentiments.append(0.0)
            continue
        if token == "kind" and i + 1 < len(tokens) and tokens[i + 1] == "of":
            sentiments.append(0.0)
            continue
        sentiments.append(_token_valence(tokens, i, lexicon))

    _apply_but(tokens, sentiments)

    compound = _normalize(float(sum(sentiments)))
    pos_sum, neg_sum, neu_count = _sift(sentiments)
    total = pos_sum + math.fabs(neg_sum) + neu_count
    return PolarityScore(
        compound=compound,
        pos=math.fabs(pos_sum / total),
        neu=math.fabs(neu_count / total),
        neg=math.fabs(neg_sum / total),
    )


def classify(score: PolarityScore | float) -> SentimentLabel:
    """Three-way label from the compound score with a +-0.05 neutral band."""
    compound = score.compound if isinstance(score, PolarityScore) else float(score)
    if compound <= -NEUTRAL_BAND:
        return SentimentLabel.NEGATIVE
    if compound >= NEUTRAL_BAND:
        return SentimentLabel.POSITIVE
    return SentimentLabel.NEUTRAL
