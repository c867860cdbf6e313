/** Topic trend explorer: a legend of the most frequent topics with toggles
 * and a multiline chart of exactly the selected ones. Selection lives in
 * ViewState, so deep links restore it; with nothing selected the chart is
 * replaced by a hint. */

import { schemeTableau10 } from "d3";
import type { TopicTrendsResponse } from "../api";
import { renderLineChart, type SeriesSpec } from "../chart";
import { clear, el } from "../dom";

export class TrendsPanel {
  readonly root: HTMLElement;
  private readonly legend: HTMLElement;
  private readonly chartHost: HTMLElement;
  private data: TopicTrendsResponse | null = null;
  private selected: string[] = [];

  constructor(private readonly onToggle: (topic: string, on: boolean) => void) {
    this.legend = el("div", { class: "trend-legend" });
    this.chartHost = el("div", { class: "chart-host", "data-chart": "topics" });
    this.root = el("section", { class: "panel trends-panel" },
      el("h2", {}, "Topic trends"),
      this.legend,
      this.chartHost,
    );
  }

  render(data: TopicTrendsResponse, selected: string[]): void {
    this.data = data;
    this.rebuildLegend(selected);
    this.updateSelection(selected);
  }

  /** Re-draw for a new selection without refetching. */
  updateSelection(selected: string[]): void {
    this.selected = selected;
    if (!this.data) return;
    for (const box of this.legend.querySelectorAll<HTMLInputElement>("input[type=checkbox]")) {
      box.checked = selected.includes(box.value);
    }
    const chosen = this.data.series.filter((s) => selected.includes(s.topic));
    clear(this.chartHost);
    if (chosen.length === 0) {
      this.chartHost.append(
        el("p", { class: "hint", "data-hint": "topics" },
          "Select one or more topics above to plot their daily trends.",
        ),
      );
      return;
    }
    const days = this.allDays(chosen);
    const series: SeriesSpec[] = chosen.map((s) => {
      const byDay = new Map(s.points.map((p) => [p.date, p.count]));
      return {
        name: s.topic,
        color: this.colorFor(s.topic),
        values: days.map((d) => byDay.get(d) ?? 0),
      };
    });
    renderLineChart(this.chartHost, days, series, {
      dims: { width: 520, height: 200, margin: { top: 10, right: 12, bottom: 22, left: 44 } },
    });
  }

  /** Union of the days across the plotted series, in calendar order. */
  private allDays(chosen: { points: { date: string }[] }[]): string[] {
    const days = new Set<string>();
    for (const s of chosen) {
      for (const p of s.points) days.add(p.date);
    }
    return [...days].sort();
  }

  private rebuildLegend(selected: string[]): void {
    clear(this.legend);
    if (!this.data || this.data.series.length === 0) {
      this.legend.append(el("p", { class: "hint" }, "No topics in this corpus."));
      return;
    }
    for (const s of this.data.series) {
      const box = el("input", {
        type: "checkbox",
        value: s.topic,
        change: (event: Event) => {
          const target = event.target as HTMLInputElement;
          this.onToggle(target.value, target.checked);
        },
      });
      box.checked = selected.includes(s.topic);
      const chip = el("span", { class: "legend-chip" });
      chip.style.background = this.colorFor(s.topic);
      this.legend.append(
        el("label", { class: "trend-toggle", "data-topic": s.topic },
          box, chip, `${s.topic} (${s.total})`,
        ),
      );
    }
    this.legend.append(
      el("button", {
        type: "button",
        class: "small-button",
        click: () => this.setAll(true),
      }, "All"),
      el("button", {
        type: "button",
        class: "small-button",
        click: () => this.setAll(false),
      }, "None"),
    );
  }

  private setAll(on: boolean): void {
    if (!this.data) return;
    for (const s of this.data.series) {
      const has = this.selected.includes(s.topic);
      if (on !== has) this.onToggle(s.topic, on);
    }
  }

  private colorFor(topic: string): string {
    if (!this.data) return schemeTableau10[0] ?? "#4e79a7";
    const index = this.data.series.findIndex((s) => s.topic === topic);
    return schemeTableau10[index % schemeTableau10.length] ?? "#4e79a7";
  }

  topics(): string[] {
    return this.data?.series.map((s) => s.topic) ?? [];
  }
}
