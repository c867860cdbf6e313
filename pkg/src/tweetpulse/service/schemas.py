"""JSON Schemas for every API response, keyed by endpoint name.

The schemas are the wire contract: response tests validate live
payloads against them, and the dashboard is written against the same
shapes. additionalProperties stays open only where payloads may grow
(the health endpoint); data arrays are closed.
"""
from __future__ import annotations

_DATE = {"type": "string", "pattern": r"^\d{4}-\d{2}-\d{2}$"}
_OPT_DATE = {"oneOf": [_DATE, {"type": "null"}]}
_AS_OF = {
    "oneOf": [
        {"type": "string", "pattern": r"^\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z$"},
        {"type": "null"},
    ]
}
_STATE = {"type": "string", "pattern": "^[A-Z]{2}$"}
_SCOPE = {"oneOf": [_STATE, {"type": "null"}]}
_COUNT = {"type": "integer", "minimum": 0}
_OPT_NUMBER = {"oneOf": [{"type": "number"}, {"type": "null"}]}


def _obj(properties: dict, required: list[str] | None = None, **kw) -> dict:
    return {
        "type": "object",
        "properties": properties,
        "required": sorted(required if required is not None else properties),
        "additionalProperties": kw.get("additional", False),
    }


def _arr(items: dict) -> dict:
    return {"type": "array", "items": items}


_COUNT_POINT = _obj({"date": _DATE, "count": _COUNT})
_WORD_ROW = _obj({"word": {"type": "string"}, "count": _COUNT})
_TREND_SERIES = _obj(
    {"topic": {"type": "string"}, "total": _COUNT, "points": _arr(_COUNT_POINT)}
)
_LABEL_COUNTS = _obj({"positive": _COUNT, "negative": _COUNT, "neutral": _COUNT})
_LABEL_FRACTIONS = _obj(
    {
        "positive": {"type": "number"},
        "negative": {"type": "number"},
        "neutral": {"type": "number"},
    }
)
_COHORT = _obj(
    {
        "cohort": {"type": "string", "enum": ["verified", "nonverified"]},
        "tweet_count": _COUNT,
        "user_count": _COUNT,
        "max_tweets_single_user": _COUNT,
        "label_fractions": _LABEL_FRACTIONS,
    }
)
_SENTIMENT_POINT = _obj(
    {
        "date": _DATE,
        "mean_compound": _OPT_NUMBER,
        "mean_subjectivity": _OPT_NUMBER,
        "count": _COUNT,
    }
)
_RANGE = {"type": "string", "enum": ["today", "yesterday", "all", "custom"]}
_TERM_ROW = _obj({"term": {"type": "string"}, "relevance": {"type": "number"}})
_STATE_COUNTS = {
    "type": "object",
    "patternProperties": {"^[A-Z]{2}$": _COUNT},
    "additionalProperties": False,
}

SCHEMAS: dict[str, dict] = {
    "error": _obj(
        {
            "error": _obj(
                {"code": {"type": "string"}, "message": {"type": "string"}}
            )
        }
    ),
    "health": _obj(
        {
            "status": {"const": "ok"},
            "as_of": _AS_OF,
            "record_count": _COUNT,
            "day_count": _COUNT,
            "first_day": _OPT_DATE,
            "last_day": _OPT_DATE,
            "topics_available": {"type": "boolean"},
        },
        additional=True,
    ),
    "frequency": _obj(
        {
            "as_of": _AS_OF,
            "scope": _SCOPE,
            "from": _OPT_DATE,
            "to": _OPT_DATE,
            "points": _arr(_COUNT_POINT),
            "total": _COUNT,
        }
    ),
    "words_top": _obj(
        {
            "as_of": _AS_OF,
            "scope": _SCOPE,
            "k": {"type": "integer", "minimum": 1},
            "words": _arr(_WORD_ROW),
        }
    ),
    "bigrams_top": _obj(
        {
            "as_of": _AS_OF,
            "scope": _SCOPE,
            "k": {"type": "integer", "minimum": 1},
            "bigrams": _arr(
                _obj(
                    {
                        "bigram": {
                            "type": "array",
                            "items": {"type": "string"},
                            "minItems": 2,
                            "maxItems": 2,
                        },
                        "count": _COUNT,
                    }
                )
            ),
        }
    ),
    "topics_frequent": _obj(
        {
            "as_of": _AS_OF,
            "scope": _SCOPE,
            "k": {"type": "integer", "minimum": 1},
            "series": _arr(_TREND_SERIES),
        }
    ),
    "topics_featured": _obj(
        {
            "as_of": _AS_OF,
            "scope": _SCOPE,
            "k": {"type": "integer", "minimum": 1},
            "watchlist_size": {"type": "integer", "minimum": 1},
            "series": _arr(_TREND_SERIES),
        }
    ),
    "sentiment_series": _obj(
        {
            "as_of": _AS_OF,
            "scope": _SCOPE,
            "range": _RANGE,
            "from": _OPT_DATE,
            "to": _OPT_DATE,
            # Tweet-weighted mean over the whole window; drives map coloring.
            "window_mean_compound": {
                "oneOf": [{"type": "number", "minimum": -1, "maximum": 1}, {"type": "null"}]
            },
            "points": _arr(_SENTIMENT_POINT),
        }
    ),
    "sentiment_distribution": _obj(
        {
            "as_of": _AS_OF,
            "bins": {"type": "integer", "minimum": 1},
            "bin_edges": _arr({"type": "number"}),
            "counts": _arr(_COUNT),
            "total": _COUNT,
        }
    ),
    "sentiment_labels": _obj(
        {
            "as_of": _AS_OF,
            "cohort": {"type": "string", "enum": ["all", "verified", "nonverified"]},
            "counts": _LABEL_COUNTS,
            "total": _COUNT,
        }
    ),
    "sentiment_cohorts": _obj(
        {
            "as_of": _AS_OF,
            "min_tweets": _COUNT,
            "verified": _COHORT,
            "nonverified": _COHORT,
            "power_users": _arr(
                _obj(
                    {
                        "user_id": {"type": "string"},
                        "verified": {"type": "boolean"},
                        "tweet_count": _COUNT,
                    }
                )
            ),
        }
    ),
    "wordcloud": _obj(
        {
            "as_of": _AS_OF,
            "scope": _SCOPE,
            "range": _RANGE,
            "polarity": {"type": "string", "enum": ["pos", "neg"]},
            "cohort": {"type": "string", "enum": ["all", "verified", "nonverified"]},
            "k": {"type": "integer", "minimum": 1},
            "words": _arr(_WORD_ROW),
        }
    ),
    "subjectivity_series": _obj(
        {
            "as_of": _AS_OF,
            "scope": _SCOPE,
            "range": _RANGE,
            "from": _OPT_DATE,
            "to": _OPT_DATE,
            "points": _arr(
                _obj(
                    {
                        "date": _DATE,
                        "mean_subjectivity": _OPT_NUMBER,
                        "count": _COUNT,
                    }
                )
            ),
        }
    ),
    "mobility_weekly": _obj(
        {
            "as_of": _AS_OF,
            "lag": {"type": "integer", "minimum": 0},
            "week_epoch": _DATE,
            "weeks": _arr(
                _obj(
                    {
                        "week_start": _DATE,
                        "week_end": _DATE,
                        "counts": _STATE_COUNTS,
                    }
                )
            ),
            "overflow": _COUNT,
            "joined": _arr(
                _obj(
                    {
                        "state": _STATE,
                        "week_start": _DATE,
                        "mobility": _COUNT,
                        "cases": _COUNT,
                    }
                )
            ),
            "correlation": {
                "oneOf": [
                    {"type": "null"},
                    _obj(
                        {
                            "pooled": {"type": "number", "minimum": -1, "maximum": 1},
                            "per_week": {
                                "type": "object",
                                "patternProperties": {
                                    r"^\d{4}-\d{2}-\d{2}$": {
                                        "type": "number",
                                        "minimum": -1,
                                        "maximum": 1,
                                    }
                                },
                                "additionalProperties": False,
                            },
                            "insufficient_weeks": _arr(_DATE),
                        }
                    ),
                ]
            },
        }
    ),
    "lda_topics": _obj(
        {
            "as_of": _AS_OF,
            "schema": {"const": "topicvis/1"},
            "k": {"type": "integer", "minimum": 1},
            "alpha": {"type": "number", "exclusiveMinimum": 0},
            "beta": {"type": "number", "exclusiveMinimum": 0},
            "iterations": {"type": "integer", "minimum": 1},
            "seed": {"type": "integer"},
            "topics": _arr(
                _obj(
                    {
                        "topic": {"type": "integer", "minimum": 0},
                        "prevalence": {"type": "number", "minimum": 0, "maximum": 1},
                        "x": {"type": "number"},
                        "y": {"type": "number"},
                        "terms": _arr(_TERM_ROW),
                        "lambda": _OPT_NUMBER,
                    }
                )
            ),
        }
    ),
    "lda_terms": _obj(
        {
            "as_of": _AS_OF,
            "topic": {"type": "integer", "minimum": 0},
            "lambda": {"type": "number", "minimum": 0, "maximum": 1},
            "terms": _arr(_TERM_ROW),
        }
    ),
}
