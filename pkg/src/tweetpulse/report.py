"""Batch report writer: JSON, CSV twins, and PNG figures per analysis.

Every analysis lands as <name>.json (the same dict the API serves),
<name>.csv for spreadsheet work, and <name>.png rendered headless.
Figures are presentation only; nothing reads them back.
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from datetime import date
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .engine import AnalyticsSnapshot

FIGURE_DPI = 110


@dataclass(frozen=True, slots=True)
class ReportOptions:
    state: str | None = None
    k_words: int = 50
    k_bigrams: int = 20
    k_trends: int = 10
    bins: int = 20
    min_tweets: int = 500
    cloud_size: int = 50
    lag: int | None = None
    lda_terms: int = 30
    figures: bool = True


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _save(fig, path: Path) -> None:
    fig.savefig(path, dpi=FIGURE_DPI, bbox_inches="tight")
    plt.close(fig)


def _dates(points: list[dict]) -> list[date]:
    return [date.fromisoformat(p["date"]) for p in points]


def _line_figure(path: Path, points: list[dict], key: str, title: str, ylabel: str) -> None:
    fig, ax = plt.subplots(figsize=(8, 4))
    xs = _dates(points)
    ys = [p[key] for p in points]
    if key == "count":
        ax.plot(xs, ys, marker="o", linewidth=1.5)
    else:
        # Means can be missing on empty days; break the line there.
        ax.plot(xs, [y if y is not None else float("nan") for y in ys], marker="o", linewidth=1.5)
        ax.axhline(0.0, color="grey", linewidth=0.8)
    ax.set_title(title)
    ax.set_ylabel(ylabel)
    fig.autofmt_xdate()
    _save(fig, path)


def _bar_figure(path: Path, labels: list[str], values: list[int], title: str) -> None:
    fig, ax = plt.subplots(figsize=(8, max(3, 0.28 * len(labels))))
    pos = range(len(labels))[::-1]
    ax.barh(list(pos), values)
    ax.set_yticks(list(pos))
    ax.set_yticklabels(labels)
    ax.set_title(title)
    ax.set_xlabel("count")
    _save(fig, path)


def _multiline_figure(path: Path, series: list[dict], title: str) -> None:
    fig, ax = plt.subplots(figsize=(9, 4.5))
    for s in series:
        ax.plot(_dates(s["points"]), [p["count"] for p in s["points"]], label=s["topic"], linewidth=1.2)
    ax.set_title(title)
    ax.set_ylabel("tweets")
    if series:
        ax.legend(fontsize=7, ncol=2)
    fig.autofmt_xdate()
    _save(fig, path)


def write_reports(
    snapshot: AnalyticsSnapshot,
    out_dir: str | Path,
    options: ReportOptions = ReportOptions(),
) -> list[Path]:
    """Write every report into out_dir; returns the paths written."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    state = options.state
    scope_label = state or "all states"

    def emit(name: str, payload: dict, header: list[str], rows: list[list], figure=None):
        json_path = out / f"{name}.json"
        _write_json(json_path, payload)
        written.append(json_path)
        csv_path = out / f"{name}.csv"
        _write_csv(csv_path, header, rows)
        written.append(csv_path)
        if figure is not None and options.figures:
            png_path = out / f"{name}.png"
            figure(png_path)
            written.append(png_path)

    freq = snapshot.frequency(state)
    emit(
        "frequency",
        freq,
        ["date", "count"],
        [[p["date"], p["count"]] for p in freq["points"]],
        lambda p: _line_figure(p, freq["points"], "count", f"Tweets per day ({scope_label})", "tweets"),
    )

    words = snapshot.words_top(options.k_words, state)
    emit(
        "top_words",
        words,
        ["word", "count"],
        [[w["word"], w["count"]] for w in words["words"]],
        lambda p: _bar_figure(
            p,
            [w["word"] for w in words["words"]],
            [w["count"] for w in words["words"]],
            f"Top words ({scope_label})",
        ),
    )

    bigrams = snapshot.bigrams_top(options.k_bigrams, state)
    emit(
        "top_bigrams",
        bigrams,
        ["bigram", "count"],
        [[" ".join(b["bigram"]), b["count"]] for b in bigrams["bigrams"]],
        lambda p: _bar_figure(
            p,
            [" ".join(b["bigram"]) for b in bigrams["bigrams"]],
            [b["count"] for b in bigrams["bigrams"]],
            f"Top bigrams ({scope_label})",
        ),
    )

    frequent = snapshot.topics_frequent(state, options.k_trends)
    emit(
        "topic_trends_frequent",
        frequent,
        ["topic", "date", "count"],
        [[s["topic"], p["date"], p["count"]] for s in frequent["series"] for p in s["points"]],
        lambda p: _multiline_figure(p, frequent["series"], f"Most-tweeted words over time ({scope_label})"),
    )

    featured = snapshot.topics_featured(state, options.k_trends)
    emit(
        "topic_trends_featured",
        featured,
        ["topic", "date", "count"],
        [[s["topic"], p["date"], p["count"]] for s in featured["series"] for p in s["points"]],
        lambda p: _multiline_figure(p, featured["series"], f"Watchlist topics over time ({scope_label})"),
    )

    series = snapshot.sentiment_series(state)
    emit(
        "sentiment_series",
        series,
        ["date", "mean_compound", "mean_subjectivity", "count"],
        [
            [p["date"], p["mean_compound"], p["mean_subjectivity"], p["count"]]
            for p in series["points"]
        ],
        lambda p: _line_figure(
            p, series["points"], "mean_compound", f"Mean sentiment per day ({scope_label})", "compound"
        ),
    )

    subj = snapshot.subjectivity_series(state)
    emit(
        "subjectivity_series",
        subj,
        ["date", "mean_subjectivity", "count"],
        [[p["date"], p["mean_subjectivity"], p["count"]] for p in subj["points"]],
        lambda p: _line_figure(
            p, subj["points"], "mean_subjectivity", f"Mean subjectivity per day ({scope_label})", "subjectivity"
        ),
    )

    dist = snapshot.sentiment_distribution(options.bins)
    edges = dist["bin_edges"]
    def dist_figure(p):
        fig, ax = plt.subplots(figsize=(8, 4))
        widths = [b - a for a, b in zip(edges, edges[1:])]
        ax.bar(edges[:-1], dist["counts"], width=widths, align="edge", edgecolor="white")
        ax.set_title("Compound score distribution")
        ax.set_xlabel("compound")
        ax.set_ylabel("tweets")
        _save(fig, p)
    emit(
        "sentiment_distribution",
        dist,
        ["bin_start", "bin_end", "count"],
        [[a, b, c] for a, b, c in zip(edges, edges[1:], dist["counts"])],
        dist_figure,
    )

    labels = {cohort: snapshot.sentiment_labels(cohort) for cohort in ("all", "verified", "nonverified")}
    def labels_figure(p):
        fig, ax = plt.subplots(figsize=(7, 4))
        names = ["positive", "neutral", "negative"]
        width = 0.25
        for i, (cohort, payload) in enumerate(labels.items()):
            xs = [j + (i - 1) * width for j in range(len(names))]
            ax.bar(xs, [payload["counts"][n] for n in names], width=width, label=cohort)
        ax.set_xticks(range(len(names)))
        ax.set_xticklabels(names)
        ax.set_ylabel("tweets")
        ax.set_title("Sentiment labels by cohort")
        ax.legend()
        _save(fig, p)
    emit(
        "sentiment_labels",
        {"as_of": labels["all"]["as_of"], "cohorts": labels},
        ["cohort", "label", "count"],
        [
            [cohort, label, payload["counts"][label]]
            for cohort, payload in labels.items()
            for label in ("positive", "negative", "neutral")
        ],
        labels_figure,
    )

    cohorts = snapshot.sentiment_cohorts(options.min_tweets)
    emit(
        "cohorts",
        cohorts,
        [
            "cohort", "tweet_count", "user_count", "max_tweets_single_user",
            "positive_fraction", "negative_fraction", "neutral_fraction",
        ],
        [
            [
                c["cohort"], c["tweet_count"], c["user_count"], c["max_tweets_single_user"],
                c["label_fractions"]["positive"],
                c["label_fractions"]["negative"],
                c["label_fractions"]["neutral"],
            ]
            for c in (cohorts["verified"], cohorts["nonverified"])
        ],
    )

    clouds = {
        "pos": snapshot.wordcloud("pos", state, "all", "all", options.cloud_size),
        "neg": snapshot.wordcloud("neg", state, "all", "all", options.cloud_size),
    }
    def clouds_figure(p):
        fig, axes = plt.subplots(1, 2, figsize=(11, max(3, 0.26 * options.cloud_size)))
        for ax, (polarity, payload) in zip(axes, clouds.items()):
            rows = payload["words"]
            pos = range(len(rows))[::-1]
            ax.barh(list(pos), [r["count"] for r in rows])
            ax.set_yticks(list(pos))
            ax.set_yticklabels([r["word"] for r in rows], fontsize=7)
            ax.set_title(f"{polarity} tweets ({scope_label})")
        _save(fig, p)
    emit(
        "wordclouds",
        {"as_of": clouds["pos"]["as_of"], "pos": clouds["pos"], "neg": clouds["neg"]},
        ["polarity", "word", "count"],
        [
            [polarity, r["word"], r["count"]]
            for polarity, payload in clouds.items()
            for r in payload["words"]
        ],
        clouds_figure,
    )

    mobility = snapshot.mobility_weekly(options.lag)
    def mobility_figure(p):
        fig, axes = plt.subplots(1, 2, figsize=(11, 4))
        weeks = mobility["weeks"]
        axes[0].plot(
            [date.fromisoformat(w["week_start"]) for w in weeks],
            [sum(w["counts"].values()) for w in weeks],
            marker="o",
        )
        axes[0].set_title("Movers per week (all states)")
        axes[0].set_ylabel("unique movers")
        joined = mobility["joined"]
        axes[1].scatter([r["mobility"] for r in joined], [r["cases"] for r in joined], s=14)
        axes[1].set_title(f"Cases vs mobility (lag {mobility['lag']}w)")
        axes[1].set_xlabel("movers into state")
        axes[1].set_ylabel("weekly cases")
        fig.autofmt_xdate()
        _save(fig, p)
    emit(
        "mobility_weekly",
        mobility,
        ["week_start", "week_end", "state", "movers"],
        [
            [w["week_start"], w["week_end"], s, n]
            for w in mobility["weeks"]
            for s, n in sorted(w["counts"].items())
        ],
        mobility_figure,
    )
    join_path = out / "mobility_join.csv"
    _write_csv(
        join_path,
        ["state", "week_start", "mobility", "cases"],
        [[r["state"], r["week_start"], r["mobility"], r["cases"]] for r in mobility["joined"]],
    )
    written.append(join_path)

    if snapshot.lda_payload is not None:
        lda = snapshot.lda_topics()
        def lda_figure(p):
            fig, ax = plt.subplots(figsize=(6, 6))
            xs = [t["x"] for t in lda["topics"]]
            ys = [t["y"] for t in lda["topics"]]
            sizes = [3000 * t["prevalence"] for t in lda["topics"]]
            ax.scatter(xs, ys, s=sizes, alpha=0.5)
            for t in lda["topics"]:
                ax.annotate(str(t["topic"]), (t["x"], t["y"]), ha="center", va="center", fontsize=8)
            ax.set_title(f"Topic map (k={lda['k']})")
            ax.axhline(0, color="grey", linewidth=0.6)
            ax.axvline(0, color="grey", linewidth=0.6)
            _save(fig, p)
        emit(
            "lda",
            lda,
            ["topic", "prevalence", "x", "y", "term", "relevance"],
            [
                [t["topic"], t["prevalence"], t["x"], t["y"], row["term"], row["relevance"]]
                for t in lda["topics"]
                for row in t["terms"]
            ],
            lda_figure,
        )

    summary = snapshot.health()
    summary["reports"] = sorted({p.stem for p in written if p.suffix == ".json"})
    summary_path = out / "summary.json"
    _write_json(summary_path, summary)
    written.append(summary_path)
    return written
