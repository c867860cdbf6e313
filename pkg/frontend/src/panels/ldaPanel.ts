/** Topic model explorer: an intertopic distance scatter on the left, a
 * relevance slider plus ranked term bars on the right. Moving the slider
 * re-queries the terms endpoint with the new lambda; the bars always mirror
 * the order of the most recent response. With no topic selected the bars
 * fall back to a corpus-wide top-terms overview. */

import { scaleLinear, scaleSqrt } from "d3";
import type { LdaTopicsResponse } from "../api";
import { clear, el, svg } from "../dom";

const MAP_SIZE = 260;

export interface TermBar {
  term: string;
  value: number;
}

export class LdaPanel {
  readonly root: HTMLElement;
  private readonly mapHost: HTMLElement;
  private readonly slider: HTMLInputElement;
  private readonly sliderLabel: HTMLElement;
  private readonly sliderRow: HTMLElement;
  private readonly barsTitle: HTMLElement;
  private readonly barsHost: HTMLElement;
  private circles = new Map<number, SVGCircleElement>();

  constructor(
    private readonly onTopicClick: (topic: number) => void,
    private readonly onLambda: (lambda: number) => void,
  ) {
    this.mapHost = el("div", { class: "lda-map-host" });
    this.slider = el("input", {
      type: "range",
      min: "0",
      max: "1",
      step: "0.01",
      class: "lambda-slider",
      input: () => {
        const value = Number(this.slider.value);
        this.sliderLabel.textContent = `λ = ${value.toFixed(2)}`;
        this.onLambda(value);
      },
    });
    this.sliderLabel = el("span", { class: "lambda-label" }, "λ = 0.60");
    this.sliderRow = el("label", { class: "control lambda-row" },
      "Relevance ", this.slider, this.sliderLabel,
    );
    this.barsTitle = el("h3", {}, "Top terms");
    this.barsHost = el("div", { class: "term-bars" });
    this.root = el("section", { class: "panel lda-panel" },
      el("h2", {}, "Topic model"),
      this.mapHost,
      this.sliderRow,
      this.barsTitle,
      this.barsHost,
    );
  }

  renderUnavailable(message: string): void {
    clear(this.mapHost);
    this.mapHost.append(el("p", { class: "hint", "data-hint": "lda" }, message));
    this.sliderRow.style.display = "none";
    clear(this.barsHost);
  }

  renderMap(data: LdaTopicsResponse, selected: number | null): void {
    clear(this.mapHost);
    this.circles.clear();
    const xs = data.topics.map((t) => t.x);
    const ys = data.topics.map((t) => t.y);
    const pad = 0.12 * MAP_SIZE;
    const x = scaleLinear()
      .domain([Math.min(...xs, 0), Math.max(...xs, 0)])
      .range([pad, MAP_SIZE - pad]);
    const y = scaleLinear()
      .domain([Math.min(...ys, 0), Math.max(...ys, 0)])
      .range([MAP_SIZE - pad, pad]);
    const r = scaleSqrt()
      .domain([0, Math.max(...data.topics.map((t) => t.prevalence), 1e-9)])
      .range([4, 28]);

    const map = svg("svg", {
      viewBox: `0 0 ${MAP_SIZE} ${MAP_SIZE}`,
      class: "lda-map",
      role: "group",
      "aria-label": "intertopic distance map",
    });
    for (const topic of data.topics) {
      const circle = svg("circle", {
        cx: x(topic.x).toFixed(1),
        cy: y(topic.y).toFixed(1),
        r: r(topic.prevalence).toFixed(1),
        class: "lda-topic",
        "data-topic": topic.topic,
        role: "button",
        click: () => this.onTopicClick(topic.topic),
      });
      circle.append(
        svg("title", {},
          `Topic ${topic.topic}: ${(topic.prevalence * 100).toFixed(1)}% of tokens`,
        ),
      );
      this.circles.set(topic.topic, circle);
      map.append(circle);
      map.append(
        svg("text", {
          x: x(topic.x).toFixed(1),
          y: y(topic.y).toFixed(1),
          class: "lda-topic-label",
          "pointer-events": "none",
        }, String(topic.topic)),
      );
    }
    this.mapHost.append(map);
    this.setSelected(selected);
  }

  setSelected(topic: number | null): void {
    for (const [index, circle] of this.circles) {
      circle.classList.toggle("selected", index === topic);
    }
    this.sliderRow.style.display = topic === null ? "none" : "";
  }

  setLambda(lambda: number): void {
    this.slider.value = String(lambda);
    this.sliderLabel.textContent = `λ = ${lambda.toFixed(2)}`;
  }

  /** Bars mirror the given ranking: first entry on top, widths proportional
   * to value over the maximum in the list. */
  renderBars(title: string, bars: TermBar[], digits: number): void {
    clear(this.barsTitle);
    this.barsTitle.append(title);
    clear(this.barsHost);
    if (bars.length === 0) {
      this.barsHost.append(el("p", { class: "hint" }, "No terms to show."));
      return;
    }
    const max = Math.max(...bars.map((b) => b.value), 1e-12);
    for (const bar of bars) {
      const fill = el("div", { class: "term-bar-fill" });
      fill.style.width = `${((bar.value / max) * 100).toFixed(1)}%`;
      this.barsHost.append(
        el("div", { class: "term-bar-row", "data-term": bar.term },
          el("span", { class: "term-bar-label" }, bar.term),
          el("div", { class: "term-bar-track" }, fill),
          el("span", { class: "term-bar-value" }, bar.value.toFixed(digits)),
        ),
      );
    }
  }
}
