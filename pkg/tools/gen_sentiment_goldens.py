#!/usr/bin/env python3
"""Regenerate the sentiment golden fixture (tests/data/sentiment_goldens.json).

Scores the fixture sentences with a standalone transliteration of the
published valence-intensity reference algorithm (Hutto & Gilbert 2014;
vaderSentiment 3.3.2) restricted to the plain-text feature set: no emoji
table, no capitalization or punctuation emphasis, no multi-word idiom
table. The transliteration keeps the reference's control flow and naming;
the shipped scorer is an independent restructuring. Both read the same
word tables and lexicon, so a disagreement means an algorithm bug, not a
data skew.

One deliberate departure: the reference's but-clause rescaling walks the
sentiment list by value lookup, which misdirects updates when two
positions hold equal nonzero values. This transliteration rescales by
position; the fixture sentences are chosen so both walks agree.

Run from the repository root after installing the package:

    python tools/gen_sentiment_goldens.py
"""
from __future__ import annotations

import json
import math
import string
from pathlib import Path

from tweetpulse.sentiment.lexicon import default_valence_lexicon
from tweetpulse.sentiment.wordlists import (
    BOOSTERS,
    NEGATE,
    NEGATION_SCALAR,
    NORMALIZATION_ALPHA,
)


def negated(word):
    return word in NEGATE or "n't" in word


def normalize(score, alpha=NORMALIZATION_ALPHA):
    norm_score = score / math.sqrt((score * score) + alpha)
    if norm_score < -1.0:
        return -1.0
    if norm_score > 1.0:
        return 1.0
    return norm_score


def scalar_inc_dec(word, valence):
    scalar = 0.0
    word_lower = word.lower()
    if word_lower in BOOSTERS:
        scalar = BOOSTERS[word_lower]
        if valence < 0:
            scalar *= -1
    return scalar


class ReferenceAnalyzer:
    def __init__(self, lexicon):
        self.lexicon = dict(lexicon)

    @staticmethod
    def _words_and_emoticons(text):
        tokens = []
        for token in text.split():
            stripped = token.strip(string.punctuation)
            if len(stripped) <= 2:
                tokens.append(token)
            else:
                tokens.append(stripped)
        return tokens

    def polarity_scores(self, text):
        words_and_emoticons = self._words_and_emoticons(text)
        sentiments = []
        for i, item in enumerate(words_and_emoticons):
            valence = 0
            if item.lower() in BOOSTERS:
                sentiments.append(valence)
                continue
            if (
                i < len(words_and_emoticons) - 1
                and item.lower() == "kind"
                and words_and_emoticons[i + 1].lower() == "of"
            ):
                sentiments.append(valence)
                continue
            sentiments = self.sentiment_valence(valence, words_and_emoticons, item, i, sentiments)
        sentiments = self._but_check(words_and_emoticons, sentiments)
        return self.score_valence(sentiments)

    def sentiment_valence(self, valence, words_and_emoticons, item, i, sentiments):
        item_lowercase = item.lower()
        if item_lowercase in self.lexicon:
            valence = self.lexicon[item_lowercase]

            if (
                item_lowercase == "no"
                and i != len(words_and_emoticons) - 1
                and words_and_emoticons[i + 1].lower() in self.lexicon
            ):
                valence = 0.0
            if (
                (i > 0 and words_and_emoticons[i - 1].lower() == "no")
                or (i > 1 and words_and_emoticons[i - 2].lower() == "no")
                or (
                    i > 2
                    and words_and_emoticons[i - 3].lower() == "no"
                    and words_and_emoticons[i - 1].lower() in ("or", "nor")
                )
            ):
                valence = self.lexicon[item_lowercase] * NEGATION_SCALAR

            for start_i in range(0, 3):
                if (
                    i > start_i
                    and words_and_emoticons[i - (start_i + 1)].lower() not in self.lexicon
                ):
                    s = scalar_inc_dec(words_and_emoticons[i - (start_i + 1)], valence)
                    if start_i == 1 and s != 0:
                        s = s * 0.95
                    if start_i == 2 and s != 0:
                        s = s * 0.9
                    valence = valence + s
                    valence = self._negation_check(valence, words_and_emoticons, start_i, i)
            valence = self._least_check(valence, words_and_emoticons, i)
        sentiments.append(valence)
        return sentiments

    def _negation_check(self, valence, words_and_emoticons, start_i, i):
        lower = [w.lower() for w in words_and_emoticons]
        if start_i == 0:
            if negated(lower[i - 1]):
                valence = valence * NEGATION_SCALAR
        if start_i == 1:
            if lower[i - 2] == "never" and lower[i - 1] in ("so", "this"):
                valence = valence * 1.25
            elif lower[i - 2] == "without" and lower[i - 1] == "doubt":
                valence = valence
            elif negated(lower[i - 2]):
                valence = valence * NEGATION_SCALAR
        if start_i == 2:
            if lower[i - 3] == "never" and (
                lower[i - 2] in ("so", "this") or lower[i - 1] in ("so", "this")
            ):
                valence = valence * 1.25
            elif lower[i - 3] == "without" and (
                lower[i - 2] == "doubt" or lower[i - 1] == "doubt"
            ):
                valence = valence
            elif negated(lower[i - 3]):
                valence = valence * NEGATION_SCALAR
        return valence

    def _least_check(self, valence, words_and_emoticons, i):
        if (
            i > 1
            and words_and_emoticons[i - 1].lower() not in self.lexicon
            and words_and_emoticons[i - 1].lower() == "least"
        ):
            if (
                words_and_emoticons[i - 2].lower() != "at"
                and words_and_emoticons[i - 2].lower() != "very"
            ):
                valence = valence * NEGATION_SCALAR
        elif (
            i > 0
            and words_and_emoticons[i - 1].lower() not in self.lexicon
            and words_and_emoticons[i - 1].lower() == "least"
        ):
            valence = valence * NEGATION_SCALAR
        return valence

    @staticmethod
    def _but_check(words_and_emoticons, sentiments):
        lower = [w.lower() for w in words_and_emoticons]
        if "but" not in lower:
            return sentiments
        bi = lower.index("but")
        for si in range(len(sentiments)):
            if si < bi:
                sentiments[si] = sentiments[si] * 0.5
            elif si > bi:
                sentiments[si] = sentiments[si] * 1.5
        return sentiments

    @staticmethod
    def _sift_sentiment_scores(sentiments):
        pos_sum = 0.0
        neg_sum = 0.0
        neu_count = 0
        for sentiment_score in sentiments:
            if sentiment_score > 0:
                pos_sum += float(sentiment_score) + 1
            if sentiment_score < 0:
                neg_sum += float(sentiment_score) - 1
            if sentiment_score == 0:
                neu_count += 1
        return pos_sum, neg_sum, neu_count

    def score_valence(self, sentiments):
        if sentiments:
            sum_s = float(sum(sentiments))
            compound = normalize(sum_s)
            pos_sum, neg_sum, neu_count = self._sift_sentiment_scores(sentiments)
            total = pos_sum + math.fabs(neg_sum) + neu_count
            pos = math.fabs(pos_sum / total)
            neg = math.fabs(neg_sum / total)
            neu = math.fabs(neu_count / total)
        else:
            compound = 0.0
            pos = 0.0
            neg = 0.0
            neu = 0.0
        return {"compound": compound, "pos": pos, "neu": neu, "neg": neg}


SENTENCES = [
    "the vaccine rollout has been great news for everyone",
    "cases are rising and people are dying every day",
    "i feel so happy to see my family again",
    "this is not good at all",
    "the response was very very bad",
    "never so proud of our nurses and doctors",
    "without doubt the worst week for our state",
    "no help from the state this week",
    "there is no way out",
    "masks help but people keep dying",
    "the hospital was scary but the nurses were amazing",
    "i am kind of worried about the new wave",
    "we are not afraid and we will not give up",
    "this isn't the worst outcome",
    "the least safe place in the city",
    "the situation is at least improving",
    "i hate this virus so much",
    "what a wonderful day, full of hope and joy.",
    "worst crisis in decades and no end in sight",
    "totally failed us when we needed help the most",
    "not bad for a monday",
    "i don't like this new normal",
    "hardly any good news these days",
    "thank you to all the heroes saving lives every day",
    "it is ok.",
]


def label(compound):
    if compound <= -0.05:
        return "negative"
    if compound >= 0.05:
        return "positive"
    return "neutral"


def main():
    analyzer = ReferenceAnalyzer(default_valence_lexicon())
    goldens = []
    for text in SENTENCES:
        scores = analyzer.polarity_scores(text)
        goldens.append({"text": text, **scores, "label": label(scores["compound"])})
    out = Path(__file__).resolve().parents[1] / "tests" / "data" / "sentiment_goldens.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(goldens, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {len(goldens)} goldens to {out}")


if __name__ == "__main__":
    main()
