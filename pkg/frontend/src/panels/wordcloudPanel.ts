/** Positive and negative word clouds. The layout is plain text flow with
 * font sizes scaled by count, rendered entirely client-side from the ranked
 * (word, count) pairs the API returns. */

import { scaleSqrt } from "d3";
import type { WordcloudResponse } from "../api";
import { clear, el } from "../dom";

const MIN_FONT = 11;
const MAX_FONT = 32;

export class WordcloudPanel {
  readonly root: HTMLElement;
  private readonly hosts: Record<"pos" | "neg", HTMLElement>;

  constructor() {
    this.hosts = {
      pos: el("div", { class: "cloud", "data-polarity": "pos" }),
      neg: el("div", { class: "cloud", "data-polarity": "neg" }),
    };
    this.root = el("section", { class: "panel cloud-panel" },
      el("h2", {}, "Words by polarity"),
      el("h3", { class: "cloud-positive" }, "Positive tweets"),
      this.hosts.pos,
      el("h3", { class: "cloud-negative" }, "Negative tweets"),
      this.hosts.neg,
    );
  }

  render(data: WordcloudResponse): void {
    const host = this.hosts[data.polarity];
    clear(host);
    if (data.words.length === 0) {
      host.append(el("p", { class: "hint" }, "No words in this range."));
      return;
    }
    const counts = data.words.map((w) => w.count);
    const size = scaleSqrt()
      .domain([Math.min(...counts), Math.max(...counts)])
      .range([MIN_FONT, MAX_FONT]);
    for (const entry of data.words) {
      const span = el(
        "span",
        {
          class: "cloud-word",
          "data-count": entry.count,
          title: `${entry.word}: ${entry.count}`,
        },
        entry.word,
      );
      span.style.fontSize = `${size(entry.count).toFixed(1)}px`;
      host.append(span);
    }
  }
}
