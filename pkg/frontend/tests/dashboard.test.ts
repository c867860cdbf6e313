import { afterEach, describe, expect, it } from "vitest";
import { decodeViewState, encodeViewState, viewStatesEqual } from "../src/viewstate";
import {
  MOBILITY,
  TERMS_LOW_LAMBDA,
  asResponse,
  click,
  deferred,
  mount,
  parseCall,
  route,
} from "./helpers";

afterEach(() => {
  document.body.innerHTML = "";
  window.history.replaceState(null, "", "/");
});

function seriesCalls(calls: string[]): URL[] {
  return calls.map(parseCall).filter((u) => u.pathname === "/api/sentiment/series");
}

describe("state selection", () => {
  it("clicking a state issues exactly one API request with that state and the active range", async () => {
    const { root, calls, resetCalls, app } = await mount();
    resetCalls();

    click(root.querySelector('rect[data-state="GA"]')!);
    await app.settle();

    expect(calls).toHaveLength(1);
    const url = parseCall(calls[0]!);
    expect(url.pathname).toBe("/api/sentiment/series");
    expect(url.searchParams.get("state")).toBe("GA");
    expect(url.searchParams.get("range")).toBe("all");
  });

  it("sends the currently selected range with the state click", async () => {
    const { root, calls, resetCalls, app } = await mount("range=today");
    resetCalls();

    click(root.querySelector('rect[data-state="NY"]')!);
    await app.settle();

    expect(calls).toHaveLength(1);
    const url = parseCall(calls[0]!);
    expect(url.searchParams.get("state")).toBe("NY");
    expect(url.searchParams.get("range")).toBe("today");
  });

  it("clicking the same state twice results in a single fetch", async () => {
    const { root, calls, resetCalls, app } = await mount();
    resetCalls();

    click(root.querySelector('rect[data-state="GA"]')!);
    await app.settle();
    click(root.querySelector('rect[data-state="GA"]')!);
    await app.settle();

    expect(seriesCalls(calls)).toHaveLength(1);
  });

  it("revisiting a state is served from the cache, not the network", async () => {
    const { root, calls, resetCalls, app } = await mount();
    resetCalls();

    click(root.querySelector('rect[data-state="GA"]')!);
    await app.settle();
    click(root.querySelector('rect[data-state="NY"]')!);
    await app.settle();
    click(root.querySelector('rect[data-state="GA"]')!);
    await app.settle();

    expect(seriesCalls(calls)).toHaveLength(2);
    // The cached GA payload is still what ends up rendered.
    expect(root.querySelector(".series-panel .panel-summary")!.getAttribute("data-scope")).toBe(
      "GA",
    );
  });

  it("clicking the map background is a no-op", async () => {
    const { root, calls, resetCalls, app } = await mount("state=GA");
    resetCalls();

    click(root.querySelector("svg.tile-map")!);
    await app.settle();

    expect(calls).toHaveLength(0);
    expect(app.view.state).toBe("GA");
  });

  it("renders every series number straight from the payload fields", async () => {
    const { root, app } = await mount();
    click(root.querySelector('rect[data-state="GA"]')!);
    await app.settle();

    const expected = route(parseCall("/api/sentiment/series?state=GA&range=all")).body as {
      window_mean_compound: number;
      points: { count: number }[];
    };
    const summary = root.querySelector(".series-panel .panel-summary")!;
    expect(summary.textContent).toContain(expected.window_mean_compound.toFixed(3));
    const bars = [...root.querySelectorAll('[data-chart="volume"] rect.bar')];
    expect(bars.map((b) => Number(b.getAttribute("data-count")))).toEqual(
      expected.points.map((p) => p.count),
    );
  });

  it("colors map tiles from each state's window mean and greys missing data", async () => {
    const { root } = await mount(undefined, (url) => {
      if (
        url.pathname === "/api/sentiment/series" &&
        url.searchParams.get("state") === "WY"
      ) {
        const stub = route(url);
        (stub.body as { window_mean_compound: number | null }).window_mean_compound = null;
        return stub;
      }
      return null;
    });
    const ga = root.querySelector('rect[data-state="GA"]')!;
    const ny = root.querySelector('rect[data-state="NY"]')!;
    const wy = root.querySelector('rect[data-state="WY"]')!;
    expect(ga.getAttribute("fill")).not.toBe(ny.getAttribute("fill"));
    expect(wy.getAttribute("fill")).toBe("#d8d8d8");
  });
});

describe("error handling", () => {
  const failGa = (url: URL) =>
    url.pathname === "/api/sentiment/series" && url.searchParams.get("state") === "GA"
      ? { status: 500, body: { error: { code: "INTERNAL", message: "boom" } } }
      : null;

  it("shows an inline banner on API failure and keeps the previous data", async () => {
    const { root, app } = await mount("", failGa);
    const summaryBefore = root.querySelector(".series-panel .panel-summary")!.textContent;

    click(root.querySelector('rect[data-state="GA"]')!);
    await app.settle();

    const banner = root.querySelector<HTMLElement>(".error-banner")!;
    expect(banner.hidden).toBe(false);
    expect(banner.textContent).toContain("Request failed");
    expect(root.querySelector(".series-panel .panel-summary")!.textContent).toBe(summaryBefore);
  });

  it("clears the banner and recovers on the next successful selection", async () => {
    const { root, app, calls, resetCalls } = await mount("", failGa);
    resetCalls();
    click(root.querySelector('rect[data-state="GA"]')!);
    await app.settle();
    click(root.querySelector('rect[data-state="NY"]')!);
    await app.settle();

    expect(root.querySelector<HTMLElement>(".error-banner")!.hidden).toBe(true);
    expect(root.querySelector(".series-panel .panel-summary")!.getAttribute("data-scope")).toBe(
      "NY",
    );
    // The failed state is retried on the next click instead of being cached.
    click(root.querySelector('rect[data-state="GA"]')!);
    await app.settle();
    expect(
      seriesCalls(calls).filter((u) => u.searchParams.get("state") === "GA"),
    ).toHaveLength(2);
  });

  it("discards stale responses by sequence number", async () => {
    const slowGa = deferred<Response>();
    const slowNy = deferred<Response>();
    // Armed only after mount so the initial map sweep is not held up.
    let armed = false;
    const { root, app } = await mount("", (url) => {
      if (!armed || url.pathname !== "/api/sentiment/series") return null;
      if (url.searchParams.get("state") === "GA") return slowGa.promise;
      if (url.searchParams.get("state") === "NY") return slowNy.promise;
      return null;
    });
    armed = true;

    click(root.querySelector('rect[data-state="GA"]')!);
    click(root.querySelector('rect[data-state="NY"]')!);
    slowNy.resolve(asResponse(route(parseCall("/api/sentiment/series?state=NY&range=all"))));
    slowGa.resolve(asResponse(route(parseCall("/api/sentiment/series?state=GA&range=all"))));
    await app.settle();

    expect(root.querySelector(".series-panel .panel-summary")!.getAttribute("data-scope")).toBe(
      "NY",
    );
  });
});

describe("lda view", () => {
  it("moving the lambda slider re-queries and re-ranks the term bars to the payload order", async () => {
    const { root, calls, resetCalls, app } = await mount();
    click(root.querySelector('circle[data-topic="1"]')!);
    await app.settle();
    resetCalls();

    const slider = root.querySelector<HTMLInputElement>("input.lambda-slider")!;
    slider.value = "0.2";
    slider.dispatchEvent(new Event("input", { bubbles: true }));
    await app.settle();

    const termCalls = calls.map(parseCall).filter((u) => u.pathname === "/api/lda/terms");
    expect(termCalls).toHaveLength(1);
    expect(termCalls[0]!.searchParams.get("topic")).toBe("1");
    expect(termCalls[0]!.searchParams.get("lambda")).toBe("0.2");

    const bars = [...root.querySelectorAll(".term-bar-row")];
    expect(bars.map((b) => b.getAttribute("data-term"))).toEqual(TERMS_LOW_LAMBDA);
    // Widths follow the payload's relevance order: first bar is the widest.
    const fills = [...root.querySelectorAll<HTMLElement>(".term-bar-fill")];
    expect(Number.parseFloat(fills[0]!.style.width)).toBe(100);
    const widths = fills.map((f) => Number.parseFloat(f.style.width));
    expect([...widths].sort((a, b) => b - a)).toEqual(widths);
    expect(app.view.lambda).toBe(0.2);
  });

  it("shows a corpus-wide term overview when no topic is selected", async () => {
    const { root } = await mount();
    expect(root.querySelector(".lda-panel h3")!.textContent).toContain("Corpus-wide");
    const bars = [...root.querySelectorAll(".term-bar-row")];
    expect(bars.map((b) => b.getAttribute("data-term"))).toEqual([
      "corona",
      "cases",
      "masks",
      "vaccine",
    ]);
    // Without a topic there is nothing for the slider to re-rank.
    expect(root.querySelector<HTMLElement>(".lambda-row")!.style.display).toBe("none");
  });

  it("deselecting the topic returns to the overview without refetching it", async () => {
    const { root, calls, resetCalls, app } = await mount();
    const bubble = root.querySelector('circle[data-topic="1"]')!;
    click(bubble);
    await app.settle();
    resetCalls();

    click(bubble);
    await app.settle();
    expect(calls).toHaveLength(0);
    expect(root.querySelector(".lda-panel h3")!.textContent).toContain("Corpus-wide");
  });

  it("degrades to a note when the topic model is unavailable", async () => {
    const { root } = await mount("", (url) =>
      url.pathname === "/api/lda/topics"
        ? {
            status: 409,
            body: { error: { code: "LDA_UNAVAILABLE", message: "not fitted" } },
          }
        : null,
    );
    expect(root.querySelector('[data-hint="lda"]')!.textContent).toContain("not fitted");
    expect(root.querySelector<HTMLElement>(".error-banner")!.hidden).toBe(true);
  });
});

describe("view state in the URL", () => {
  it("restores a deep-linked view and queries with its parameters", async () => {
    const query =
      "state=NY&range=custom&from=2020-06-10&to=2020-06-12&topics=cases,masks&topic=2&lambda=0.25";
    const { root, calls, app } = await mount(query);

    expect(app.view).toEqual({
      state: "NY",
      timeframe: "custom",
      from: "2020-06-10",
      to: "2020-06-12",
      topics: ["cases", "masks"],
      ldaTopic: 2,
      lambda: 0.25,
    });

    const series = seriesCalls(calls).find((u) => u.searchParams.get("state") === "NY")!;
    expect(series.searchParams.get("range")).toBe("custom");
    expect(series.searchParams.get("from")).toBe("2020-06-10");
    expect(series.searchParams.get("to")).toBe("2020-06-12");

    const terms = calls.map(parseCall).find((u) => u.pathname === "/api/lda/terms")!;
    expect(terms.searchParams.get("topic")).toBe("2");
    expect(terms.searchParams.get("lambda")).toBe("0.25");

    const lines = [...root.querySelectorAll('[data-chart="topics"] path.series-line')];
    expect(lines.map((l) => l.getAttribute("data-series"))).toEqual(["cases", "masks"]);
  });

  it("round-trips every interaction back through the URL", async () => {
    const { root, app } = await mount();
    click(root.querySelector('rect[data-state="CA"]')!);
    await app.settle();

    const search = window.location.search;
    expect(search).toContain("state=CA");
    expect(viewStatesEqual(decodeViewState(search), app.view)).toBe(true);

    // And the codec alone reproduces the live view object.
    expect(decodeViewState(encodeViewState(app.view))).toEqual(app.view);
  });
});

describe("topic explorer", () => {
  it("plots exactly the selected topics and hints when none are selected", async () => {
    const { root, calls, resetCalls, app } = await mount();
    expect(root.querySelector('[data-hint="topics"]')).not.toBeNull();
    resetCalls();

    const box = root.querySelector<HTMLInputElement>('label[data-topic="cases"] input')!;
    box.checked = true;
    box.dispatchEvent(new Event("change", { bubbles: true }));
    await app.settle();

    let lines = [...root.querySelectorAll('[data-chart="topics"] path.series-line')];
    expect(lines.map((l) => l.getAttribute("data-series"))).toEqual(["cases"]);
    expect(window.location.search).toContain("topics=cases");

    const allButton = [...root.querySelectorAll(".trends-panel button")].find(
      (b) => b.textContent === "All",
    )!;
    click(allButton);
    await app.settle();
    lines = [...root.querySelectorAll('[data-chart="topics"] path.series-line')];
    expect(lines).toHaveLength(3);

    const noneButton = [...root.querySelectorAll(".trends-panel button")].find(
      (b) => b.textContent === "None",
    )!;
    click(noneButton);
    await app.settle();
    expect(root.querySelector('[data-hint="topics"]')).not.toBeNull();

    // Selection is a pure view concern: no topic toggling hit the network.
    expect(calls).toHaveLength(0);
  });
});

describe("mobility view", () => {
  it("sizes bubbles by the prior week's movers and fills by the selected week's cases", async () => {
    const { root } = await mount();
    const ny = root.querySelector('circle.bubble[data-state="NY"]')!;
    const pa = root.querySelector('circle.bubble[data-state="PA"]')!;

    expect(ny.getAttribute("data-mobility")).toBe("3");
    expect(ny.getAttribute("data-cases")).toBe("120");
    expect(pa.getAttribute("data-mobility")).toBe("1");
    expect(pa.getAttribute("data-cases")).toBe("45");
    expect(Number(ny.getAttribute("r"))).toBeGreaterThan(Number(pa.getAttribute("r")));

    const tooltip = ny.querySelector("title")!.textContent!;
    expect(tooltip).toContain("3 movers");
    expect(tooltip).toContain("120 cases");

    const summary = root.querySelector(".mobility-panel .panel-summary")!;
    expect(summary.textContent).toContain(MOBILITY.correlation.pooled.toFixed(3));
  });

  it("shows an empty-state message when no week has a mobility predecessor", async () => {
    const { root } = await mount("", (url) =>
      url.pathname === "/api/mobility/weekly"
        ? {
            status: 200,
            body: { ...MOBILITY, weeks: MOBILITY.weeks.slice(0, 1), joined: [], correlation: null },
          }
        : null,
    );
    expect(root.querySelector('[data-hint="mobility"]')!.textContent).toContain(
      "No week in this corpus",
    );
  });
});

describe("word clouds", () => {
  it("scales font size with count within each polarity cloud", async () => {
    const { root } = await mount();
    const pos = root.querySelector('[data-polarity="pos"]')!;
    const words = [...pos.querySelectorAll<HTMLElement>(".cloud-word")];
    expect(words.map((w) => w.textContent)).toEqual(["recovery", "hope", "vaccine"]);
    const sizes = words.map((w) => Number.parseFloat(w.style.fontSize));
    expect(sizes[0]!).toBeGreaterThan(sizes[1]!);
    expect(sizes[1]!).toBeGreaterThan(sizes[2]!);
  });
});

describe("timeframe selection", () => {
  it("re-queries timeframe-scoped panels once per distinct query", async () => {
    const { root, calls, resetCalls, app } = await mount();
    resetCalls();

    const select = root.querySelector<HTMLSelectElement>(".timeframe-select")!;
    select.value = "today";
    select.dispatchEvent(new Event("change", { bubbles: true }));
    await app.settle();

    const urls = calls.map(parseCall);
    for (const url of urls) {
      expect(url.searchParams.get("range")).toBe("today");
    }
    // Every request URL is distinct: no duplicate fetches anywhere.
    expect(new Set(calls).size).toBe(calls.length);
    expect(window.location.search).toContain("range=today");
  });

  it("waits for both custom bounds before querying", async () => {
    const { root, calls, resetCalls, app } = await mount();
    resetCalls();

    const select = root.querySelector<HTMLSelectElement>(".timeframe-select")!;
    select.value = "custom";
    select.dispatchEvent(new Event("change", { bubbles: true }));
    await app.settle();
    expect(calls).toHaveLength(0);

    const [from, to] = [...root.querySelectorAll<HTMLInputElement>('input[type="date"]')];
    from!.value = "2020-06-10";
    from!.dispatchEvent(new Event("change", { bubbles: true }));
    await app.settle();
    expect(calls).toHaveLength(0);

    to!.value = "2020-06-12";
    to!.dispatchEvent(new Event("change", { bubbles: true }));
    await app.settle();

    const series = seriesCalls(calls);
    expect(series.length).toBeGreaterThan(0);
    for (const url of series) {
      expect(url.searchParams.get("range")).toBe("custom");
      expect(url.searchParams.get("from")).toBe("2020-06-10");
      expect(url.searchParams.get("to")).toBe("2020-06-12");
    }
  });
});

describe("initial load", () => {
  it("issues each request URL at most once", async () => {
    const { calls } = await mount();
    expect(new Set(calls).size).toBe(calls.length);
  });

  it("summarizes corpus health from the health payload", async () => {
    const { root } = await mount();
    const line = root.querySelector(".health-line")!.textContent!;
    expect(line).toContain("123 tweets");
    expect(line).toContain("3 days");
  });
});
