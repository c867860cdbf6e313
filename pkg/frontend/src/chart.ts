/** Shared line/bar chart rendering over daily series. Days are treated as
 * ordered categories (one slot per calendar day string), which matches the
 * API payloads and sidesteps timezone arithmetic entirely. */

import { line, scaleLinear, scalePoint } from "d3";
import { clear, svg } from "./dom";

export interface ChartDims {
  width: number;
  height: number;
  margin: { top: number; right: number; bottom: number; left: number };
}

export const DEFAULT_DIMS: ChartDims = {
  width: 520,
  height: 150,
  margin: { top: 10, right: 12, bottom: 22, left: 44 },
};

export interface SeriesSpec {
  name: string;
  color: string;
  /** y value per day; null gaps break the line. */
  values: (number | null)[];
}

/** Pick a handful of evenly spaced day labels so the axis stays legible. */
function tickDays(days: string[], maxTicks = 6): string[] {
  if (days.length <= maxTicks) return days;
  const step = Math.ceil(days.length / maxTicks);
  return days.filter((_, i) => i % step === 0);
}

export function renderLineChart(
  host: Element,
  days: string[],
  series: SeriesSpec[],
  options: { yDomain?: [number, number]; dims?: ChartDims; zeroLine?: boolean } = {},
): void {
  const dims = options.dims ?? DEFAULT_DIMS;
  const { width, height, margin } = dims;
  const innerW = width - margin.left - margin.right;
  const innerH = height - margin.top - margin.bottom;

  const x = scalePoint<string>().domain(days).range([0, innerW]).padding(0.5);
  let [lo, hi] = options.yDomain ?? autoDomain(series);
  if (lo === hi) {
    lo -= 1;
    hi += 1;
  }
  const y = scaleLinear().domain([lo, hi]).range([innerH, 0]).nice();

  const root = svg("svg", {
    viewBox: `0 0 ${width} ${height}`,
    width,
    height,
    class: "chart",
    role: "img",
  });
  const plot = svg("g", { transform: `translate(${margin.left},${margin.top})` });
  root.append(plot);

  for (const tick of y.ticks(4)) {
    plot.append(
      svg("line", {
        x1: 0,
        x2: innerW,
        y1: y(tick),
        y2: y(tick),
        class: "grid-line",
      }),
    );
    plot.append(
      svg("text", { x: -8, y: y(tick), class: "tick-label tick-y" }, String(+tick.toFixed(3))),
    );
  }
  if (options.zeroLine && lo < 0 && hi > 0) {
    plot.append(svg("line", { x1: 0, x2: innerW, y1: y(0), y2: y(0), class: "zero-line" }));
  }
  for (const day of tickDays(days)) {
    const px = x(day);
    if (px === undefined) continue;
    plot.append(
      svg("text", { x: px, y: innerH + 16, class: "tick-label tick-x" }, day.slice(5)),
    );
  }

  const maker = line<[string, number]>()
    .x((d) => x(d[0]) ?? 0)
    .y((d) => y(d[1]));
  for (const spec of series) {
    const pts: [string, number][] = [];
    spec.values.forEach((v, i) => {
      const day = days[i];
      if (v !== null && day !== undefined) pts.push([day, v]);
    });
    const path = maker(pts);
    if (path) {
      plot.append(
        svg("path", {
          d: path,
          fill: "none",
          stroke: spec.color,
          "stroke-width": 1.8,
          class: "series-line",
          "data-series": spec.name,
        }),
      );
    }
    for (const [day, v] of pts) {
      plot.append(
        svg("circle", {
          cx: x(day) ?? 0,
          cy: y(v),
          r: 2.4,
          fill: spec.color,
          class: "series-dot",
          "data-series": spec.name,
        }),
      );
    }
  }

  clear(host);
  host.append(root);
}

function autoDomain(series: SeriesSpec[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const spec of series) {
    for (const v of spec.values) {
      if (v === null) continue;
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  if (lo === Infinity) return [0, 1];
  const pad = (hi - lo) * 0.1 || Math.abs(hi) * 0.1 || 0.1;
  return [lo - pad, hi + pad];
}

export function renderBarChart(
  host: Element,
  days: string[],
  values: number[],
  options: { color?: string; dims?: ChartDims } = {},
): void {
  const dims = options.dims ?? DEFAULT_DIMS;
  const { width, height, margin } = dims;
  const innerW = width - margin.left - margin.right;
  const innerH = height - margin.top - margin.bottom;
  const max = Math.max(1, ...values);
  const y = scaleLinear().domain([0, max]).range([innerH, 0]).nice();
  const slot = innerW / Math.max(1, days.length);
  const barW = Math.max(2, Math.min(28, slot * 0.6));

  const root = svg("svg", {
    viewBox: `0 0 ${width} ${height}`,
    width,
    height,
    class: "chart",
    role: "img",
  });
  const plot = svg("g", { transform: `translate(${margin.left},${margin.top})` });
  root.append(plot);

  for (const tick of y.ticks(3)) {
    plot.append(
      svg("line", { x1: 0, x2: innerW, y1: y(tick), y2: y(tick), class: "grid-line" }),
    );
    plot.append(svg("text", { x: -8, y: y(tick), class: "tick-label tick-y" }, String(tick)));
  }
  days.forEach((day, i) => {
    const v = values[i] ?? 0;
    plot.append(
      svg("rect", {
        x: slot * i + (slot - barW) / 2,
        y: y(v),
        width: barW,
        height: innerH - y(v),
        fill: options.color ?? "#5b8dc9",
        class: "bar",
        "data-day": day,
        "data-count": v,
      }),
    );
  });
  for (const day of tickDays(days)) {
    const i = days.indexOf(day);
    plot.append(
      svg(
        "text",
        { x: slot * i + slot / 2, y: innerH + 16, class: "tick-label tick-x" },
        day.slice(5),
      ),
    );
  }

  clear(host);
  host.append(root);
}
