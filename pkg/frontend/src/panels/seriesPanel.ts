/** Per-scope detail charts: daily mean polarity, daily mean subjectivity,
 * and daily tweet volume. All three are drawn from one sentiment-series
 * response; the header's window mean is the server-computed field, never an
 * average taken client-side. */

import type { SentimentSeriesResponse } from "../api";
import { renderBarChart, renderLineChart } from "../chart";
import { clear, el, fmtSigned } from "../dom";

export class SeriesPanel {
  readonly root: HTMLElement;
  private readonly title: HTMLElement;
  private readonly summary: HTMLElement;
  private readonly polarityHost: HTMLElement;
  private readonly subjectivityHost: HTMLElement;
  private readonly volumeHost: HTMLElement;

  constructor() {
    this.title = el("h2", {}, "Daily sentiment");
    this.summary = el("p", { class: "panel-summary" }, "Loading…");
    this.polarityHost = el("div", { class: "chart-host", "data-chart": "polarity" });
    this.subjectivityHost = el("div", { class: "chart-host", "data-chart": "subjectivity" });
    this.volumeHost = el("div", { class: "chart-host", "data-chart": "volume" });
    this.root = el("section", { class: "panel series-panel" },
      this.title,
      this.summary,
      el("h3", {}, "Mean compound polarity"),
      this.polarityHost,
      el("h3", {}, "Mean subjectivity"),
      this.subjectivityHost,
      el("h3", {}, "Tweets per day"),
      this.volumeHost,
    );
  }

  render(data: SentimentSeriesResponse, scopeName: string): void {
    clear(this.title);
    this.title.append(`Daily sentiment · ${scopeName}`);

    clear(this.summary);
    // An open range (all days) echoes null bounds; label it from the points.
    const first = data.from ?? data.points[0]?.date;
    const last = data.to ?? data.points[data.points.length - 1]?.date;
    const windowLabel = first && last ? `${first} to ${last}` : "no days in range";
    const meanLabel =
      data.window_mean_compound === null
        ? "no scored tweets"
        : `window mean polarity ${fmtSigned(data.window_mean_compound, 3)}`;
    this.summary.append(`${windowLabel} · ${meanLabel}`);
    this.summary.setAttribute("data-scope", data.scope ?? "nationwide");

    const days = data.points.map((p) => p.date);
    renderLineChart(
      this.polarityHost,
      days,
      [{ name: "compound", color: "#2166ac", values: data.points.map((p) => p.mean_compound) }],
      { zeroLine: true },
    );
    renderLineChart(
      this.subjectivityHost,
      days,
      [
        {
          name: "subjectivity",
          color: "#7b3294",
          values: data.points.map((p) => p.mean_subjectivity),
        },
      ],
      { yDomain: [0, 1] },
    );
    renderBarChart(this.volumeHost, days, data.points.map((p) => p.count));
  }
}
