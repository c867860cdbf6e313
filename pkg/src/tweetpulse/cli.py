"""Command-line interface.

Usage errors exit 2 (click's convention); data and config errors exit 1
with a one-line message on stderr.
"""
from __future__ import annotations

import csv
import json
import logging
import sys
import threading
from dataclasses import replace
from datetime import date
from pathlib import Path

import click

from .config import AppConfig, ConfigError, load_config
from .corpus import CorpusError, DailyFile, ingest_raw, write_daily_csv
from .engine import SnapshotHolder, discover_daily_files, snapshot_from_config
from .mobility import CaseCountError, build_trajectories, detect_movements
from .replay import DEFAULT_SPEEDUP, ReplayError, replay_steps, run_replay
from .report import ReportOptions, write_reports

log = logging.getLogger(__name__)


def _config_from(config_path: str | None, **overrides) -> AppConfig:
    try:
        cfg = load_config(config_path)
    except ConfigError as exc:
        raise click.ClickException(str(exc)) from None
    supplied = {k: v for k, v in overrides.items() if v is not None}
    return replace(cfg, **supplied)


def _parse_day(value: str | None, name: str) -> date | None:
    if value is None:
        return None
    try:
        return date.fromisoformat(value)
    except ValueError:
        raise click.BadParameter("expected YYYY-MM-DD", param_hint=name) from None


def _load_snapshot(cfg: AppConfig):
    try:
        snapshot = snapshot_from_config(cfg)
    except (CorpusError, CaseCountError, OSError) as exc:
        raise click.ClickException(str(exc)) from None
    if not snapshot.records:
        raise click.ClickException(f"no records loaded from {cfg.data_dir}")
    return snapshot


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log at DEBUG instead of INFO.")
def main(verbose: bool):
    """Tweet-stream analytics: ingest, reports, topic model, API service."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )


@main.command()
@click.argument("raw", type=click.Path(exists=True, dir_okay=False, path_type=Path), nargs=-1, required=True)
@click.option("--out-dir", type=click.Path(file_okay=False, path_type=Path), required=True,
              help="Directory for daily CSV files.")
@click.option("--salt", required=True, help="Secret salt for user pseudo-ids.")
def ingest(raw: tuple[Path, ...], out_dir: Path, salt: str):
    """Convert raw JSON-lines captures into daily CSV files."""
    records = []
    stats_total: dict[str, int] = {}
    for path in raw:
        with path.open("rb") as fh:
            result = ingest_raw(fh, salt.encode("utf-8"))
        records.extend(result.records)
        for key, value in result.stats.as_dict().items():
            stats_total[key] = stats_total.get(key, 0) + value

    by_day: dict[date, list] = {}
    for rec in records:
        by_day.setdefault(rec.day, []).append(rec)
    out_dir.mkdir(parents=True, exist_ok=True)
    for day in sorted(by_day):
        daily = DailyFile(date=day, records=by_day[day])
        (out_dir / daily.filename).write_bytes(write_daily_csv(daily))

    stats_total["days_written"] = len(by_day)
    click.echo(json.dumps(stats_total, sort_keys=True))


@main.command()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--data-dir", type=click.Path(file_okay=False, path_type=Path), default=None)
@click.option("--out-dir", type=click.Path(file_okay=False, path_type=Path), required=True)
@click.option("--state", default=None, help="Restrict scoped reports to one state code.")
@click.option("--k-words", type=click.IntRange(min=1), default=50, show_default=True)
@click.option("--k-bigrams", type=click.IntRange(min=1), default=20, show_default=True)
@click.option("--k-trends", type=click.IntRange(min=1), default=10, show_default=True)
@click.option("--bins", type=click.IntRange(min=1), default=20, show_default=True)
@click.option("--min-tweets", type=click.IntRange(min=0), default=500, show_default=True,
              help="Heavy-poster threshold (strictly greater than).")
@click.option("--lag", type=click.IntRange(min=0), default=None, help="Mobility join lag in weeks.")
@click.option("--cases", "cases_csv", type=click.Path(exists=True, dir_okay=False, path_type=Path),
              default=None, help="Weekly case counts CSV for the mobility join.")
@click.option("--lda/--no-lda", default=None, help="Fit the topic model for the report.")
@click.option("--figures/--no-figures", default=True, show_default=True,
              help="Render PNG charts next to the JSON/CSV output.")
def analyze(config_path, data_dir, out_dir, state, k_words, k_bigrams, k_trends,
            bins, min_tweets, lag, cases_csv, lda, figures):
    """Run every analysis over the corpus and write reports."""
    cfg = _config_from(config_path, data_dir=data_dir, cases_csv=cases_csv, lda_enabled=lda)
    snapshot = _load_snapshot(cfg)
    if state is not None:
        state = state.upper()
    options = ReportOptions(
        state=state,
        k_words=k_words,
        k_bigrams=k_bigrams,
        k_trends=k_trends,
        bins=bins,
        min_tweets=min_tweets,
        lag=lag,
        figures=figures,
    )
    try:
        written = write_reports(snapshot, out_dir, options)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from None
    click.echo(f"wrote {len(written)} files to {out_dir}")


@main.command()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--data-dir", type=click.Path(file_okay=False, path_type=Path), default=None)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), required=True,
              help="Topic-map JSON output path.")
@click.option("--k", "lda_topics", type=click.IntRange(min=1), default=None, help="Number of topics.")
@click.option("--iterations", "lda_iterations", type=click.IntRange(min=1), default=None)
@click.option("--seed", "lda_seed", type=int, default=None)
@click.option("--alpha", "lda_alpha", type=float, default=None)
@click.option("--beta", "lda_beta", type=float, default=None)
@click.option("--min-df", "lda_min_df", type=click.IntRange(min=1), default=None)
@click.option("--max-df", "lda_max_df_fraction", type=click.FloatRange(0.0, 1.0), default=None)
def lda(config_path, data_dir, out, **lda_overrides):
    """Fit the topic model and export the topic-map JSON."""
    cfg = _config_from(config_path, data_dir=data_dir, lda_enabled=True, **lda_overrides)
    snapshot = _load_snapshot(cfg)
    if snapshot.lda_payload is None:
        raise click.ClickException(f"topic model failed: {snapshot.lda_error}")
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(snapshot.lda_topics(), indent=2, sort_keys=True) + "\n",
                   encoding="utf-8")
    model = snapshot.lda_model
    click.echo(f"k={model.k} tokens={model.total_tokens} log_likelihood={model.log_likelihood[-1][1]:.2f}")


@main.command()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--data-dir", type=click.Path(file_okay=False, path_type=Path), default=None)
@click.option("--cases", "cases_csv", type=click.Path(exists=True, dir_okay=False, path_type=Path),
              default=None)
@click.option("--lag", type=click.IntRange(min=0), default=None)
@click.option("--out-dir", type=click.Path(file_okay=False, path_type=Path), required=True)
def mobility(config_path, data_dir, cases_csv, lag, out_dir):
    """Detect movements and write the weekly mobility tables."""
    cfg = _config_from(config_path, data_dir=data_dir, cases_csv=cases_csv, lag_weeks=lag)
    snapshot = _load_snapshot(cfg)

    out_dir.mkdir(parents=True, exist_ok=True)
    events = detect_movements(build_trajectories(snapshot.records))
    with (out_dir / "movements.csv").open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["user_id", "from_state", "to_state", "t_from", "t_to"])
        for e in events:
            writer.writerow([e.user_id, e.from_state, e.to_state,
                             e.t_from.isoformat(), e.t_to.isoformat()])

    payload = snapshot.mobility_weekly()
    with (out_dir / "mobility_weekly.csv").open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["week_start", "week_end", "state", "movers"])
        for week in payload["weeks"]:
            for state, n in sorted(week["counts"].items()):
                writer.writerow([week["week_start"], week["week_end"], state, n])
    with (out_dir / "mobility_join.csv").open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["state", "week_start", "mobility", "cases"])
        for row in payload["joined"]:
            writer.writerow([row["state"], row["week_start"], row["mobility"], row["cases"]])
    (out_dir / "correlation.json").write_text(
        json.dumps({"lag": payload["lag"], "correlation": payload["correlation"]},
                   indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )
    click.echo(f"{len(events)} movements, {len(payload['weeks'])} weeks, "
               f"{len(payload['joined'])} joined rows")


@main.command()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--data-dir", type=click.Path(file_okay=False, path_type=Path), default=None)
@click.option("--host", default=None)
@click.option("--port", type=click.IntRange(1, 65535), default=None)
@click.option("--replay", "replay_mode", is_flag=True,
              help="Publish the corpus day by day instead of all at once.")
@click.option("--speedup", type=float, default=DEFAULT_SPEEDUP, show_default=True,
              help="Corpus seconds per wall second during replay.")
def serve(config_path, data_dir, host, port, replay_mode, speedup):
    """Serve the HTTP JSON API."""
    import uvicorn

    from .service import create_app

    cfg = _config_from(config_path, data_dir=data_dir, host=host, port=port)
    try:
        if replay_mode:
            holder = SnapshotHolder()
            worker = threading.Thread(
                target=run_replay,
                args=(cfg, holder),
                kwargs={"speedup": speedup},
                daemon=True,
                name="replay",
            )
            worker.start()
        else:
            holder = SnapshotHolder(_load_snapshot(cfg))
        app = create_app(cfg, holder)
    except (ReplayError, OSError) as exc:
        raise click.ClickException(str(exc)) from None
    uvicorn.run(app, host=cfg.host, port=cfg.port, log_level="info")


@main.command()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--data-dir", type=click.Path(file_okay=False, path_type=Path), default=None)
@click.option("--speedup", type=float, default=DEFAULT_SPEEDUP, show_default=True)
@click.option("--start", default=None, help="First day to replay (YYYY-MM-DD).")
@click.option("--end", default=None, help="Last day to replay (YYYY-MM-DD).")
def replay(config_path, data_dir, speedup, start, end):
    """Replay the corpus day by day, printing one line per published day."""
    cfg = _config_from(config_path, data_dir=data_dir)
    try:
        steps = replay_steps(
            cfg,
            speedup=speedup,
            start=_parse_day(start, "--start"),
            end=_parse_day(end, "--end"),
        )
        for step in steps:
            health = step.snapshot.health()
            click.echo(
                f"{step.day} ingested={step.ingested} total={health['record_count']} "
                f"as_of={health['as_of']}"
            )
    except (ReplayError, CorpusError, OSError) as exc:
        raise click.ClickException(str(exc)) from None


@main.command("files")
@click.option("--data-dir", type=click.Path(file_okay=False, path_type=Path), required=True)
def list_files(data_dir):
    """List the daily files a data directory would load."""
    for day, path in discover_daily_files(data_dir):
        click.echo(f"{day} {path}")


if __name__ == "__main__":
    main()
