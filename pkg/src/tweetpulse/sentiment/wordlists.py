"""Shared tables for the valence-intensity scorer.

Constants and word tables follow the published VADER rule set (Hutto &
Gilbert 2014, MIT-licensed): booster adjustment +-0.293, negation scalar
-0.74, compound normalization s/sqrt(s^2 + 15). The golden-value generator
in tools/ imports these same tables so that scorer and oracle differ only
in algorithm code, never in data.
"""
from __future__ import annotations

BOOSTER_INCREMENT = 0.293
BOOSTER_DECREMENT = -0.293
NEGATION_SCALAR = -0.74
NORMALIZATION_ALPHA = 15.0

# Damping for boosters two / three tokens before the scored word.
DISTANCE_DAMPING = (1.0, 0.95, 0.9)

# Contrastive-conjunction weighting: sentiment before "but" is halved,
# sentiment after it amplified.
PRE_BUT_FACTOR = 0.5
POST_BUT_FACTOR = 1.5

# "never so/this good" reads as an intensifier, not a negation.
NEVER_INTENSIFIER = 1.25

NEGATE = frozenset(
    {
        "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt", "doesnt",
        "ain't", "aren't", "can't", "couldn't", "daren't", "didn't", "doesn't",
        "dont", "hadnt", "hasnt", "havent", "isnt", "mightnt", "mustnt", "neither",
        "don't", "hadn't", "hasn't", "haven't", "isn't", "mightn't", "mustn't",
        "neednt", "needn't", "never", "none", "nope", "nor", "not", "nothing",
        "nowhere", "oughtnt", "shant", "shouldnt", "uhuh", "wasnt", "werent",
        "oughtn't", "shan't", "shouldn't", "uh-uh", "wasn't", "weren't",
        "without", "wont", "wouldnt", "won't", "wouldn't", "rarely", "seldom",
        "despite",
    }
)

BOOSTERS: dict[str, float] = {
    "absolutely": BOOSTER_INCREMENT,
    "amazingly": BOOSTER_INCREMENT,
    "awfully": BOOSTER_INCREMENT,
    "completely": BOOSTER_INCREMENT,
    "considerably": BOOSTER_INCREMENT,
    "decidedly": BOOSTER_INCREMENT,
    "deeply": BOOSTER_INCREMENT,
    "enormously": BOOSTER_INCREMENT,
    "entirely": BOOSTER_INCREMENT,
    "especially": BOOSTER_INCREMENT,
    "exceptionally": BOOSTER_INCREMENT,
    "extremely": BOOSTER_INCREMENT,
    "fabulously": BOOSTER_INCREMENT,
    "fully": BOOSTER_INCREMENT,
    "greatly": BOOSTER_INCREMENT,
    "hella": BOOSTER_INCREMENT,
    "highly": BOOSTER_INCREMENT,
    "hugely": BOOSTER_INCREMENT,
    "incredibly": BOOSTER_INCREMENT,
    "intensely": BOOSTER_INCREMENT,
    "majorly": BOOSTER_INCREMENT,
    "more": BOOSTER_INCREMENT,
    "most": BOOSTER_INCREMENT,
    "particularly": BOOSTER_INCREMENT,
    "purely": BOOSTER_INCREMENT,
    "quite": BOOSTER_INCREMENT,
    "really": BOOSTER_INCREMENT,
    "remarkably": BOOSTER_INCREMENT,
    "so": BOOSTER_INCREMENT,
    "substantially": BOOSTER_INCREMENT,
    "thoroughly": BOOSTER_INCREMENT,
    "totally": BOOSTER_INCREMENT,
    "tremendously": BOOSTER_INCREMENT,
    "uber": BOOSTER_INCREMENT,
    "unbelievably": BOOSTER_INCREMENT,
    "unusually": BOOSTER_INCREMENT,
    "utterly": BOOSTER_INCREMENT,
    "very": BOOSTER_INCREMENT,
    "almost": BOOSTER_DECREMENT,
    "barely": BOOSTER_DECREMENT,
    "hardly": BOOSTER_DECREMENT,
    "kinda": BOOSTER_DECREMENT,
    "kindof": BOOSTER_DECREMENT,
    "less": BOOSTER_DECREMENT,
    "little": BOOSTER_DECREMENT,
    "marginally": BOOSTER_DECREMENT,
    "occasionally": BOOSTER_DECREMENT,
    "partly": BOOSTER_DECREMENT,
    "scarcely": BOOSTER_DECREMENT,
    "slightly": BOOSTER_DECREMENT,
    "somewhat": BOOSTER_DECREMENT,
    "sorta": BOOSTER_DECREMENT,
    "sortof": BOOSTER_DECREMENT,
}
