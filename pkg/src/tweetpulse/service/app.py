"""HTTP API: read-only JSON endpoints over the published snapshot.

Every endpoint answers from the snapshot current at request time. Bad
inputs come back as 400 with a machine-readable error code in the
body; a missing topic model is 409 because the request was fine and
the state was not.
"""
from __future__ import annotations

from datetime import date

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from ..config import AppConfig
from ..engine import AnalyticsSnapshot, LdaUnavailable, SnapshotHolder, snapshot_from_config
from ..sentiment import InvalidCohort, InvalidTimeframe
from ..states import UnknownState, require_state_code
from ..topicmodel import InvalidTopic, InvalidTopicCount

TIMEFRAME_NAMES = ("today", "yesterday", "all", "custom")


class ApiError(Exception):
    """Error with a machine-readable code; rendered as {"error": {...}}."""

    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _parse_date(name: str, raw: str | None) -> date | None:
    if raw is None:
        return None
    try:
        return date.fromisoformat(raw)
    except ValueError:
        raise ApiError(400, "BAD_PARAM", f"{name} must be YYYY-MM-DD, got {raw!r}") from None


def _parse_state(raw: str | None) -> str | None:
    if raw is None or raw == "":
        return None
    try:
        return require_state_code(raw.upper())
    except UnknownState as exc:
        raise ApiError(400, "STATE_UNKNOWN", str(exc)) from None


def _parse_timeframe(range_: str, from_: str | None, to: str | None):
    if range_ not in TIMEFRAME_NAMES:
        raise ApiError(
            400, "BAD_TIMEFRAME", f"range must be one of {', '.join(TIMEFRAME_NAMES)}"
        )
    start = _parse_date("from", from_)
    end = _parse_date("to", to)
    if range_ == "custom":
        if start is None or end is None:
            raise ApiError(400, "BAD_TIMEFRAME", "range=custom needs from and to dates")
        if start > end:
            raise ApiError(400, "BAD_TIMEFRAME", f"from {start} is after to {end}")
        return (start, end)
    if start is not None or end is not None:
        raise ApiError(400, "BAD_TIMEFRAME", "from/to are only valid with range=custom")
    return range_


def create_app(
    config: AppConfig | None = None,
    holder: SnapshotHolder | None = None,
) -> FastAPI:
    """Build the app; pass a holder to serve pre-built or replayed snapshots."""
    config = config if config is not None else AppConfig()
    if holder is None:
        holder = SnapshotHolder(snapshot_from_config(config))

    app = FastAPI(title="tweetpulse", docs_url=None, redoc_url=None, openapi_url=None)
    app.state.holder = holder
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[config.dashboard_origin],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    def snap() -> AnalyticsSnapshot:
        try:
            return holder.current()
        except RuntimeError as exc:
            raise ApiError(503, "NO_SNAPSHOT", str(exc)) from None

    @app.exception_handler(ApiError)
    async def _api_error(request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"error": {"code": exc.code, "message": exc.message}},
        )

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request: Request, exc: RequestValidationError):
        first = exc.errors()[0] if exc.errors() else {}
        where = ".".join(str(part) for part in first.get("loc", ()))
        return JSONResponse(
            status_code=400,
            content={
                "error": {
                    "code": "BAD_PARAM",
                    "message": f"{where}: {first.get('msg', 'invalid value')}",
                }
            },
        )

    @app.get("/api/health")
    def health():
        return snap().health()

    @app.get("/api/frequency")
    def frequency(
        state: str | None = None,
        from_: str | None = Query(None, alias="from"),
        to: str | None = None,
    ):
        start, end = _parse_date("from", from_), _parse_date("to", to)
        if start is not None and end is not None and start > end:
            raise ApiError(400, "BAD_PARAM", f"from {start} is after to {end}")
        return snap().frequency(_parse_state(state), start, end)

    @app.get("/api/words/top")
    def words_top(k: int = Query(50, ge=1, le=1000), state: str | None = None):
        return snap().words_top(k, _parse_state(state))

    @app.get("/api/bigrams/top")
    def bigrams_top(k: int = Query(20, ge=1, le=1000), state: str | None = None):
        return snap().bigrams_top(k, _parse_state(state))

    @app.get("/api/topics/frequent")
    def topics_frequent(state: str | None = None, k: int = Query(10, ge=1, le=200)):
        return snap().topics_frequent(_parse_state(state), k)

    @app.get("/api/topics/featured")
    def topics_featured(state: str | None = None, k: int = Query(10, ge=1, le=200)):
        return snap().topics_featured(_parse_state(state), k)

    @app.get("/api/sentiment/series")
    def sentiment_series(
        state: str | None = None,
        range_: str = Query("all", alias="range"),
        from_: str | None = Query(None, alias="from"),
        to: str | None = None,
    ):
        timeframe = _parse_timeframe(range_, from_, to)
        return _call(snap().sentiment_series, _parse_state(state), timeframe)

    @app.get("/api/sentiment/distribution")
    def sentiment_distribution(bins: int = Query(20, ge=1, le=2000)):
        return snap().sentiment_distribution(bins)

    @app.get("/api/sentiment/labels")
    def sentiment_labels(cohort: str = "all"):
        return _call(snap().sentiment_labels, cohort)

    @app.get("/api/sentiment/cohorts")
    def sentiment_cohorts(min_tweets: int = Query(500, ge=0)):
        return snap().sentiment_cohorts(min_tweets)

    @app.get("/api/wordcloud")
    def wordcloud(
        polarity: str = Query(...),
        state: str | None = None,
        range_: str = Query("all", alias="range"),
        from_: str | None = Query(None, alias="from"),
        to: str | None = None,
        cohort: str = "all",
        k: int = Query(50, ge=1, le=1000),
    ):
        if polarity not in ("pos", "neg"):
            raise ApiError(400, "BAD_PARAM", f"polarity must be pos or neg, got {polarity!r}")
        timeframe = _parse_timeframe(range_, from_, to)
        return _call(snap().wordcloud, polarity, _parse_state(state), timeframe, cohort, k)

    @app.get("/api/subjectivity/series")
    def subjectivity_series(
        state: str | None = None,
        range_: str = Query("all", alias="range"),
        from_: str | None = Query(None, alias="from"),
        to: str | None = None,
    ):
        timeframe = _parse_timeframe(range_, from_, to)
        return _call(snap().subjectivity_series, _parse_state(state), timeframe)

    @app.get("/api/mobility/weekly")
    def mobility_weekly(lag: int | None = Query(None, ge=0, le=52)):
        return snap().mobility_weekly(lag)

    @app.get("/api/lda/topics")
    def lda_topics():
        return _call(snap().lda_topics)

    @app.get("/api/lda/terms")
    def lda_terms(
        topic: int = Query(..., ge=0),
        lambda_: float = Query(0.6, alias="lambda", ge=0.0, le=1.0),
        n: int = Query(30, ge=1, le=1000),
    ):
        return _call(snap().lda_terms, topic, lambda_, n)

    return app


def _call(fn, *args):
    """Translate domain errors raised inside snapshot queries."""
    try:
        return fn(*args)
    except UnknownState as exc:
        raise ApiError(400, "STATE_UNKNOWN", str(exc)) from None
    except InvalidTimeframe as exc:
        raise ApiError(400, "BAD_TIMEFRAME", str(exc)) from None
    except InvalidCohort as exc:
        raise ApiError(400, "BAD_COHORT", str(exc)) from None
    except (InvalidTopic, InvalidTopicCount) as exc:
        raise ApiError(400, "BAD_TOPIC", str(exc)) from None
    except LdaUnavailable as exc:
        raise ApiError(409, "LDA_UNAVAILABLE", str(exc)) from None
    except ValueError as exc:
        raise ApiError(400, "BAD_PARAM", str(exc)) from None
