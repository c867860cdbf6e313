/** Clickable US tile choropleth. Tile fill encodes each state's mean
 * compound polarity over the active timeframe on the diverging scale;
 * clicking a tile selects that state. Clicks on the background sea of the
 * svg hit nothing and change nothing. */

import { NO_DATA_COLOR, POLARITY_DOMAIN, polarityColor } from "../color";
import { clear, el, fmtSigned, svg } from "../dom";
import { GRID_COLS, GRID_ROWS, TILES } from "../tiles";

const TILE = 44;
const GAP = 4;

export class MapPanel {
  readonly root: HTMLElement;
  private readonly tilesByCode = new Map<string, SVGRectElement>();
  private colors = new Map<string, number | null>();
  private selected: string | null = null;

  constructor(private readonly onSelect: (code: string) => void) {
    const width = GRID_COLS * (TILE + GAP) + GAP;
    const height = GRID_ROWS * (TILE + GAP) + GAP;
    const map = svg("svg", {
      viewBox: `0 0 ${width} ${height}`,
      class: "tile-map",
      role: "group",
      "aria-label": "state polarity map",
    });
    for (const tile of TILES) {
      const x = GAP + tile.col * (TILE + GAP);
      const y = GAP + tile.row * (TILE + GAP);
      const rect = svg("rect", {
        x,
        y,
        width: TILE,
        height: TILE,
        rx: 4,
        class: "state-tile",
        fill: NO_DATA_COLOR,
        "data-state": tile.code,
        role: "button",
        "aria-label": tile.name,
        click: () => this.onSelect(tile.code),
      });
      rect.append(svg("title", {}, tile.name));
      this.tilesByCode.set(tile.code, rect);
      map.append(rect);
      map.append(
        svg(
          "text",
          {
            x: x + TILE / 2,
            y: y + TILE / 2 + 4,
            class: "tile-label",
            "pointer-events": "none",
          },
          tile.code,
        ),
      );
    }
    this.root = el("section", { class: "panel map-panel" },
      el("h2", {}, "Sentiment by state"),
      map,
      this.buildLegend(),
    );
  }

  private buildLegend(): HTMLElement {
    const [lo, hi] = POLARITY_DOMAIN;
    const swatches = el("div", { class: "legend-swatches" });
    const steps = 9;
    for (let i = 0; i < steps; i++) {
      const value = lo + ((hi - lo) * i) / (steps - 1);
      const cell = el("span", { class: "legend-swatch", title: fmtSigned(value) });
      cell.style.background = polarityColor(value);
      swatches.append(cell);
    }
    return el("div", { class: "legend" },
      el("span", { class: "legend-end" }, `${fmtSigned(lo, 1)} negative`),
      swatches,
      el("span", { class: "legend-end" }, `positive ${fmtSigned(hi, 1)}`),
    );
  }

  /** Repaint fills from per-state window means; states absent from the map
   * payload stay grey. */
  setColors(colors: Map<string, number | null>): void {
    this.colors = colors;
    for (const [code, rect] of this.tilesByCode) {
      const mean = colors.get(code) ?? null;
      rect.setAttribute("fill", polarityColor(mean));
      const name = rect.getAttribute("aria-label") ?? code;
      const title = rect.querySelector("title");
      if (title) {
        clear(title);
        title.append(
          mean === null ? `${name}: no tweets in range` : `${name}: mean polarity ${fmtSigned(mean, 3)}`,
        );
      }
    }
  }

  setSelected(code: string | null): void {
    if (this.selected) {
      this.tilesByCode.get(this.selected)?.classList.remove("selected");
      this.tilesByCode.get(this.selected)?.setAttribute("aria-pressed", "false");
    }
    this.selected = code;
    if (code) {
      const rect = this.tilesByCode.get(code);
      rect?.classList.add("selected");
      rect?.setAttribute("aria-pressed", "true");
    }
  }

  meanFor(code: string): number | null {
    return this.colors.get(code) ?? null;
  }
}
