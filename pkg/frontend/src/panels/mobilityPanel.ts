/** Movement-versus-infection bubbles on the state tile grid. For a chosen
 * case week w, each bubble's area is the unique movers into that state
 * during week w-lag and its fill encodes reported cases during week w;
 * hovering shows both numbers exactly as the API reported them. */

import { interpolateYlOrRd, scaleSequential, scaleSqrt } from "d3";
import type { MobilityWeeklyResponse } from "../api";
import { clear, el, svg } from "../dom";
import { GRID_COLS, GRID_ROWS, TILES, stateName } from "../tiles";

const TILE = 34;
const GAP = 3;
const NO_CASE_FILL = "#b8b8b8";

export class MobilityPanel {
  readonly root: HTMLElement;
  private readonly weekSelect: HTMLSelectElement;
  private readonly summary: HTMLElement;
  private readonly mapHost: HTMLElement;
  private data: MobilityWeeklyResponse | null = null;

  constructor() {
    this.weekSelect = el("select", {
      class: "week-select",
      change: () => this.renderWeek(),
    });
    this.summary = el("p", { class: "panel-summary" }, "Loading…");
    this.mapHost = el("div", { class: "bubble-host" });
    this.root = el("section", { class: "panel mobility-panel" },
      el("h2", {}, "Mobility vs. new cases"),
      el("label", { class: "control" }, "Case week ", this.weekSelect),
      this.summary,
      this.mapHost,
    );
  }

  render(data: MobilityWeeklyResponse): void {
    this.data = data;
    clear(this.weekSelect);
    // A case week is plottable when the week lag bins earlier also exists.
    for (let i = data.lag; i < data.weeks.length; i++) {
      const week = data.weeks[i];
      if (!week) continue;
      this.weekSelect.append(
        el("option", { value: String(i) }, `${week.week_start} to ${week.week_end}`),
      );
    }
    clear(this.summary);
    if (data.correlation) {
      this.summary.append(
        `Pooled Pearson r = ${data.correlation.pooled.toFixed(3)} at lag ${data.lag} week(s)`,
      );
    } else {
      this.summary.append(`Lag ${data.lag} week(s); not enough joined rows for a correlation.`);
    }
    this.renderWeek();
  }

  private renderWeek(): void {
    clear(this.mapHost);
    const data = this.data;
    if (!data) return;
    if (data.weeks.length <= data.lag) {
      this.mapHost.append(
        el("p", { class: "hint", "data-hint": "mobility" },
          "No week in this corpus has an earlier mobility week to pair with.",
        ),
      );
      return;
    }
    const index = Number(this.weekSelect.value || data.lag);
    const caseWeek = data.weeks[index];
    const moveWeek = data.weeks[index - data.lag];
    if (!caseWeek || !moveWeek) return;

    const casesByState = new Map<string, number>();
    for (const row of data.joined) {
      if (row.week_start === caseWeek.week_start) casesByState.set(row.state, row.cases);
    }
    const movers = Object.entries(moveWeek.counts);
    if (movers.length === 0) {
      this.mapHost.append(
        el("p", { class: "hint", "data-hint": "mobility" },
          `No movements recorded during ${moveWeek.week_start} to ${moveWeek.week_end}.`,
        ),
      );
      return;
    }

    const maxMovers = Math.max(...movers.map(([, n]) => n));
    const radius = scaleSqrt().domain([0, maxMovers]).range([0, TILE * 0.55]);
    const maxCases = Math.max(1, ...casesByState.values());
    const fill = scaleSequential(interpolateYlOrRd).domain([0, maxCases]);

    const width = GRID_COLS * (TILE + GAP) + GAP;
    const height = GRID_ROWS * (TILE + GAP) + GAP;
    const map = svg("svg", { viewBox: `0 0 ${width} ${height}`, class: "bubble-map" });
    for (const tile of TILES) {
      const x = GAP + tile.col * (TILE + GAP);
      const y = GAP + tile.row * (TILE + GAP);
      map.append(
        svg("rect", {
          x, y, width: TILE, height: TILE, rx: 3, class: "bubble-tile",
        }),
      );
      map.append(
        svg("text", {
          x: x + TILE / 2, y: y + TILE / 2 + 3, class: "bubble-tile-label",
          "pointer-events": "none",
        }, tile.code),
      );
      const count = moveWeek.counts[tile.code];
      if (count === undefined || count === 0) continue;
      const cases = casesByState.get(tile.code);
      const bubble = svg("circle", {
        cx: x + TILE / 2,
        cy: y + TILE / 2,
        r: radius(count).toFixed(2),
        fill: cases === undefined ? NO_CASE_FILL : fill(cases),
        class: "bubble",
        "data-state": tile.code,
        "data-mobility": count,
        "data-cases": cases === undefined ? "none" : cases,
        "fill-opacity": 0.85,
      });
      const caseText =
        cases === undefined
          ? "no case data"
          : `${cases} cases ${caseWeek.week_start} to ${caseWeek.week_end}`;
      bubble.append(
        svg("title", {},
          `${stateName(tile.code)}: ${count} movers in ` +
            `${moveWeek.week_start} to ${moveWeek.week_end} · ${caseText}`,
        ),
      );
      map.append(bubble);
    }
    this.mapHost.append(map);
  }

  selectWeek(index: number): void {
    this.weekSelect.value = String(index);
    this.renderWeek();
  }
}
