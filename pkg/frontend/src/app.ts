/** Dashboard controller. Owns the ViewState, decides which panels must
 * refetch when it changes, and keeps the URL in sync so any view can be
 * shared as a link.
 *
 * Fetch discipline, per panel: a dependency key derived from the ViewState
 * (unchanged key means no new request), a URL-keyed cache (revisiting a
 * state reuses the earlier response), and a sequence gate (a slow response
 * that has been superseded is dropped, never rendered). */

import {
  ApiClient,
  ApiError,
  buildUrl,
  timeframeParams,
  type HealthResponse,
  type LdaTermsResponse,
  type LdaTopicsResponse,
  type MobilityWeeklyResponse,
  type SentimentSeriesResponse,
  type Timeframe,
  type TopicTrendsResponse,
  type WordcloudResponse,
  type WordsTopResponse,
} from "./api";
import { RequestCache } from "./cache";
import { clear, el } from "./dom";
import { LdaPanel } from "./panels/ldaPanel";
import { MapPanel } from "./panels/mapPanel";
import { MobilityPanel } from "./panels/mobilityPanel";
import { SeriesPanel } from "./panels/seriesPanel";
import { TrendsPanel } from "./panels/trendsPanel";
import { WordcloudPanel } from "./panels/wordcloudPanel";
import { SequenceGate } from "./seq";
import { TILES, stateName } from "./tiles";
import {
  clampLambda,
  decodeViewState,
  encodeViewState,
  type ViewState,
} from "./viewstate";

const TOP_TERMS = 30;
const CLOUD_WORDS = 60;
const TREND_TOPICS = 8;

const TIMEFRAME_LABELS: Record<Timeframe, string> = {
  today: "Today",
  yesterday: "Yesterday",
  all: "All days",
  custom: "Custom range",
};

type PanelName =
  | "health"
  | "map"
  | "series"
  | "clouds"
  | "trends"
  | "mobility"
  | "ldaMap"
  | "ldaTerms";

export class Dashboard {
  readonly view: ViewState;
  readonly ready: Promise<void>;

  private readonly inflight = new Set<Promise<unknown>>();
  private readonly lastKeys = new Map<PanelName, string>();
  private readonly gates: Record<PanelName, SequenceGate> = {
    health: new SequenceGate(),
    map: new SequenceGate(),
    series: new SequenceGate(),
    clouds: new SequenceGate(),
    trends: new SequenceGate(),
    mobility: new SequenceGate(),
    ldaMap: new SequenceGate(),
    ldaTerms: new SequenceGate(),
  };
  private readonly caches: Record<PanelName, RequestCache> = {
    health: new RequestCache(),
    map: new RequestCache(),
    series: new RequestCache(),
    clouds: new RequestCache(),
    trends: new RequestCache(),
    mobility: new RequestCache(),
    ldaMap: new RequestCache(),
    ldaTerms: new RequestCache(),
  };

  private readonly mapPanel: MapPanel;
  private readonly seriesPanel: SeriesPanel;
  private readonly cloudPanel: WordcloudPanel;
  private readonly trendsPanel: TrendsPanel;
  private readonly mobilityPanel: MobilityPanel;
  private readonly ldaPanel: LdaPanel;

  private readonly healthLine: HTMLElement;
  private readonly banner: HTMLElement;
  private readonly scopeLabelEl: HTMLElement;
  private readonly timeframeSelect: HTMLSelectElement;
  private readonly fromInput: HTMLInputElement;
  private readonly toInput: HTMLInputElement;
  private readonly customRow: HTMLElement;

  constructor(
    root: HTMLElement,
    private readonly api: ApiClient,
    initialQuery: string = window.location.search,
  ) {
    this.view = decodeViewState(initialQuery);

    this.mapPanel = new MapPanel((code) => this.selectState(code));
    this.seriesPanel = new SeriesPanel();
    this.cloudPanel = new WordcloudPanel();
    this.trendsPanel = new TrendsPanel((topic, on) => this.toggleTopic(topic, on));
    this.mobilityPanel = new MobilityPanel();
    this.ldaPanel = new LdaPanel(
      (topic) => this.setLdaTopic(topic),
      (lambda) => this.setLambda(lambda),
    );

    this.healthLine = el("p", { class: "health-line" }, "Connecting…");
    this.banner = el("div", { class: "error-banner", role: "alert" });
    this.banner.hidden = true;
    this.scopeLabelEl = el("span", { class: "scope-label" });
    this.timeframeSelect = el("select", {
      class: "timeframe-select",
      change: () => this.setTimeframe(this.timeframeSelect.value as Timeframe),
    });
    for (const tf of Object.keys(TIMEFRAME_LABELS) as Timeframe[]) {
      this.timeframeSelect.append(el("option", { value: tf }, TIMEFRAME_LABELS[tf]));
    }
    const onRange = () => this.setCustomRange(this.fromInput.value, this.toInput.value);
    this.fromInput = el("input", { type: "date", change: onRange });
    this.toInput = el("input", { type: "date", change: onRange });
    this.customRow = el("span", { class: "custom-range" },
      " from ", this.fromInput, " to ", this.toInput,
    );

    clear(root);
    root.append(
      el("header", { class: "topbar" },
        el("h1", {}, "Tweet analytics"),
        this.healthLine,
        el("div", { class: "toolbar" },
          this.scopeLabelEl,
          el("button", {
            type: "button",
            class: "small-button nationwide-button",
            click: () => this.selectState(null),
          }, "Nationwide"),
          el("label", { class: "control" }, "Timeframe ", this.timeframeSelect),
          this.customRow,
        ),
        this.banner,
      ),
      el("main", { class: "panel-grid" },
        this.mapPanel.root,
        this.seriesPanel.root,
        this.trendsPanel.root,
        this.cloudPanel.root,
        this.mobilityPanel.root,
        this.ldaPanel.root,
      ),
    );

    this.mapPanel.setSelected(this.view.state);
    this.ldaPanel.setLambda(this.view.lambda);
    this.syncControls();
    window.addEventListener("popstate", () => {
      this.applyView(decodeViewState(window.location.search));
    });

    this.ready = Promise.resolve().then(() => {
      this.refresh();
      return this.settle();
    });
  }

  /** Resolves once every request issued so far (and any they trigger) has
   * been applied or discarded. */
  async settle(): Promise<void> {
    while (this.inflight.size > 0) {
      await Promise.allSettled([...this.inflight]);
    }
  }

  // ----- user actions -------------------------------------------------

  selectState(code: string | null): void {
    this.view.state = code;
    this.mapPanel.setSelected(code);
    this.afterViewChange();
  }

  setTimeframe(timeframe: Timeframe): void {
    this.view.timeframe = timeframe;
    if (timeframe !== "custom") {
      this.view.from = null;
      this.view.to = null;
    }
    this.syncControls();
    this.afterViewChange();
  }

  setCustomRange(from: string, to: string): void {
    this.view.timeframe = "custom";
    this.view.from = from || null;
    this.view.to = to || null;
    this.syncControls();
    this.afterViewChange();
  }

  toggleTopic(topic: string, on: boolean): void {
    const index = this.view.topics.indexOf(topic);
    if (on && index < 0) this.view.topics.push(topic);
    if (!on && index >= 0) this.view.topics.splice(index, 1);
    this.trendsPanel.updateSelection(this.view.topics);
    this.syncUrl();
  }

  /** Clicking the already-selected bubble deselects back to the overview. */
  setLdaTopic(topic: number): void {
    this.view.ldaTopic = this.view.ldaTopic === topic ? null : topic;
    this.ldaPanel.setSelected(this.view.ldaTopic);
    this.afterViewChange();
  }

  setLambda(lambda: number): void {
    this.view.lambda = clampLambda(lambda);
    this.afterViewChange();
  }

  private afterViewChange(): void {
    this.syncUrl();
    this.clearError();
    this.refresh();
  }

  private applyView(next: ViewState): void {
    this.view.state = next.state;
    this.view.timeframe = next.timeframe;
    this.view.from = next.from;
    this.view.to = next.to;
    this.view.topics = next.topics;
    this.view.ldaTopic = next.ldaTopic;
    this.view.lambda = next.lambda;
    this.mapPanel.setSelected(next.state);
    this.ldaPanel.setSelected(next.ldaTopic);
    this.ldaPanel.setLambda(next.lambda);
    this.trendsPanel.updateSelection(next.topics);
    this.syncControls();
    this.clearError();
    this.refresh();
  }

  private syncControls(): void {
    this.timeframeSelect.value = this.view.timeframe;
    this.customRow.hidden = this.view.timeframe !== "custom";
    this.fromInput.value = this.view.from ?? "";
    this.toInput.value = this.view.to ?? "";
    clear(this.scopeLabelEl);
    this.scopeLabelEl.append(this.view.state ? stateName(this.view.state) : "Nationwide");
  }

  private syncUrl(): void {
    const qs = encodeViewState(this.view);
    const target = qs ? `?${qs}` : window.location.pathname;
    window.history.replaceState(null, "", target);
  }

  // ----- fetching -----------------------------------------------------

  private track<T>(promise: Promise<T>): Promise<T> {
    const wrapped = promise.finally(() => {
      this.inflight.delete(wrapped);
    });
    this.inflight.add(wrapped);
    wrapped.catch(() => {});
    return wrapped;
  }

  private schedule(name: PanelName, key: string, run: () => Promise<void>): void {
    if (this.lastKeys.get(name) === key) return;
    this.lastKeys.set(name, key);
    this.track(
      run().catch((err: unknown) => {
        // Failed loads may be retried by the next matching view change.
        this.lastKeys.delete(name);
        this.showError(err);
      }),
    );
  }

  private fetchCached<T>(name: PanelName, url: string): Promise<T> {
    return this.caches[name].get(url, (u) => this.api.getJson<T>(u));
  }

  private tfQuery(state: string | null) {
    return {
      state,
      range: this.view.timeframe,
      from: this.view.from,
      to: this.view.to,
    };
  }

  /** A custom timeframe is only queryable once both bounds are set in order;
   * until then the timeframe-scoped panels keep their previous view. */
  private timeframeReady(): boolean {
    if (this.view.timeframe !== "custom") return true;
    return this.view.from !== null && this.view.to !== null && this.view.from <= this.view.to;
  }

  private refresh(): void {
    const tfKey = `${this.view.timeframe}|${this.view.from}|${this.view.to}`;
    this.schedule("health", "static", () => this.loadHealth());
    this.schedule("trends", "static", () => this.loadTrends());
    this.schedule("mobility", "static", () => this.loadMobility());
    this.schedule("ldaMap", "static", () => this.loadLdaMap());
    if (this.timeframeReady()) {
      this.schedule("map", tfKey, () => this.loadMap());
      this.schedule("series", `${this.view.state}|${tfKey}`, () => this.loadSeries());
      this.schedule("clouds", tfKey, () => this.loadClouds());
    }
    const termsKey =
      this.view.ldaTopic === null ? "overview" : `${this.view.ldaTopic}|${this.view.lambda}`;
    this.schedule("ldaTerms", termsKey, () => this.loadLdaTerms());
  }

  private async loadHealth(): Promise<void> {
    const ticket = this.gates.health.issue();
    const data = await this.fetchCached<HealthResponse>("health", buildUrl("/api/health"));
    if (!this.gates.health.isCurrent(ticket)) return;
    clear(this.healthLine);
    const span =
      data.first_day && data.last_day ? ` (${data.first_day} to ${data.last_day})` : "";
    this.healthLine.append(
      `${data.record_count} tweets · ${data.day_count} days${span} · as of ${data.as_of ?? "n/a"}`,
    );
  }

  private async loadMap(): Promise<void> {
    const ticket = this.gates.map.issue();
    const entries = await Promise.all(
      TILES.map((tile) => {
        const url = buildUrl("/api/sentiment/series", timeframeParams(this.tfQuery(tile.code)));
        return this.fetchCached<SentimentSeriesResponse>("map", url).then(
          (data) => [tile.code, data.window_mean_compound] as const,
          () => [tile.code, null] as const,
        );
      }),
    );
    if (!this.gates.map.isCurrent(ticket)) return;
    this.mapPanel.setColors(new Map(entries));
  }

  private async loadSeries(): Promise<void> {
    const ticket = this.gates.series.issue();
    const url = buildUrl(
      "/api/sentiment/series",
      timeframeParams(this.tfQuery(this.view.state)),
    );
    const data = await this.fetchCached<SentimentSeriesResponse>("series", url);
    if (!this.gates.series.isCurrent(ticket)) return;
    this.seriesPanel.render(data, this.view.state ? stateName(this.view.state) : "Nationwide");
  }

  private async loadClouds(): Promise<void> {
    const ticket = this.gates.clouds.issue();
    const [pos, neg] = await Promise.all(
      (["pos", "neg"] as const).map((polarity) => {
        const url = buildUrl("/api/wordcloud", {
          polarity,
          k: CLOUD_WORDS,
          ...timeframeParams(this.tfQuery(null)),
        });
        return this.fetchCached<WordcloudResponse>("clouds", url);
      }),
    );
    if (!this.gates.clouds.isCurrent(ticket)) return;
    if (pos) this.cloudPanel.render(pos);
    if (neg) this.cloudPanel.render(neg);
  }

  private async loadTrends(): Promise<void> {
    const ticket = this.gates.trends.issue();
    const url = buildUrl("/api/topics/frequent", { k: TREND_TOPICS });
    const data = await this.fetchCached<TopicTrendsResponse>("trends", url);
    if (!this.gates.trends.isCurrent(ticket)) return;
    this.trendsPanel.render(data, this.view.topics);
  }

  private async loadMobility(): Promise<void> {
    const ticket = this.gates.mobility.issue();
    const data = await this.fetchCached<MobilityWeeklyResponse>(
      "mobility",
      buildUrl("/api/mobility/weekly"),
    );
    if (!this.gates.mobility.isCurrent(ticket)) return;
    this.mobilityPanel.render(data);
  }

  private async loadLdaMap(): Promise<void> {
    const ticket = this.gates.ldaMap.issue();
    let data: LdaTopicsResponse;
    try {
      data = await this.fetchCached<LdaTopicsResponse>("ldaMap", buildUrl("/api/lda/topics"));
    } catch (err) {
      if (err instanceof ApiError && err.code === "LDA_UNAVAILABLE") {
        if (this.gates.ldaMap.isCurrent(ticket)) {
          this.ldaPanel.renderUnavailable("Topic model not fitted for this corpus.");
        }
        return;
      }
      throw err;
    }
    if (!this.gates.ldaMap.isCurrent(ticket)) return;
    this.ldaPanel.renderMap(data, this.view.ldaTopic);
  }

  private async loadLdaTerms(): Promise<void> {
    const ticket = this.gates.ldaTerms.issue();
    if (this.view.ldaTopic === null) {
      const url = buildUrl("/api/words/top", { k: TOP_TERMS });
      const data = await this.fetchCached<WordsTopResponse>("ldaTerms", url);
      if (!this.gates.ldaTerms.isCurrent(ticket)) return;
      this.ldaPanel.renderBars(
        "Corpus-wide top terms",
        data.words.map((w) => ({ term: w.word, value: w.count })),
        0,
      );
      return;
    }
    const url = buildUrl("/api/lda/terms", {
      topic: this.view.ldaTopic,
      lambda: this.view.lambda,
      n: TOP_TERMS,
    });
    let data: LdaTermsResponse;
    try {
      data = await this.fetchCached<LdaTermsResponse>("ldaTerms", url);
    } catch (err) {
      if (err instanceof ApiError && err.code === "LDA_UNAVAILABLE") {
        if (this.gates.ldaTerms.isCurrent(ticket)) {
          this.ldaPanel.renderUnavailable("Topic model not fitted for this corpus.");
        }
        return;
      }
      throw err;
    }
    if (!this.gates.ldaTerms.isCurrent(ticket)) return;
    this.ldaPanel.renderBars(
      `Topic ${data.topic} terms · λ = ${data.lambda.toFixed(2)}`,
      data.terms.map((t) => ({ term: t.term, value: t.relevance })),
      3,
    );
  }

  // ----- errors ---------------------------------------------------------

  private showError(err: unknown): void {
    const message =
      err instanceof ApiError
        ? `${err.code}: ${err.message}`
        : err instanceof Error
          ? err.message
          : String(err);
    clear(this.banner);
    this.banner.append(`Request failed — showing last loaded data. (${message})`);
    this.banner.hidden = false;
  }

  private clearError(): void {
    this.banner.hidden = true;
  }
}
