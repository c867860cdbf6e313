/** Shared test harness: fixture payloads for every endpoint, a routing
 * fetch stub that records each request URL, and a mount helper that builds
 * the dashboard against the stub and waits for the initial load. */

import { ApiClient } from "../src/api";
import { Dashboard } from "../src/app";

export const DAYS = ["2020-06-10", "2020-06-11", "2020-06-12"];
const AS_OF = "2020-06-12T12:00:00Z";

export interface Stub {
  status: number;
  body: unknown;
}

export function asResponse(stub: Stub): Response {
  return {
    ok: stub.status < 400,
    status: stub.status,
    json: async () => stub.body,
  } as unknown as Response;
}

export function deferred<T>(): { promise: Promise<T>; resolve: (value: T) => void } {
  let resolve!: (value: T) => void;
  const promise = new Promise<T>((r) => {
    resolve = r;
  });
  return { promise, resolve };
}

/** Deterministic per-state polarity so map colors differ between states. */
function meanFor(state: string | null): number {
  if (state === null) return 0.12;
  return ((state.charCodeAt(0) + state.charCodeAt(1)) % 21 - 10) / 25;
}

function sentimentSeries(url: URL): Stub {
  const state = url.searchParams.get("state");
  return {
    status: 200,
    body: {
      as_of: AS_OF,
      scope: state,
      range: url.searchParams.get("range") ?? "all",
      from: url.searchParams.get("from") ?? DAYS[0],
      to: url.searchParams.get("to") ?? DAYS[DAYS.length - 1],
      window_mean_compound: meanFor(state),
      points: DAYS.map((date, i) => ({
        date,
        mean_compound: meanFor(state) + i * 0.01,
        mean_subjectivity: 0.4 + i * 0.05,
        count: 5 + i,
      })),
    },
  };
}

const CLOUDS = {
  pos: [
    { word: "recovery", count: 30 },
    { word: "hope", count: 21 },
    { word: "vaccine", count: 12 },
  ],
  neg: [
    { word: "virus", count: 25 },
    { word: "death", count: 18 },
    { word: "fear", count: 9 },
  ],
};

export const TOPIC_SERIES = [
  { topic: "cases", total: 40, points: DAYS.map((date, i) => ({ date, count: 10 + i })) },
  { topic: "masks", total: 22, points: DAYS.map((date, i) => ({ date, count: 8 - i })) },
  { topic: "vaccine", total: 13, points: DAYS.map((date, i) => ({ date, count: 4 + i })) },
];

export const MOBILITY = {
  as_of: AS_OF,
  lag: 1,
  week_epoch: "2020-03-05",
  weeks: [
    {
      week_start: "2020-06-04",
      week_end: "2020-06-11",
      counts: { NY: 3, PA: 1 },
    },
    {
      week_start: "2020-06-11",
      week_end: "2020-06-18",
      counts: { NY: 2, NJ: 4 },
    },
  ],
  overflow: 0,
  joined: [
    { state: "NY", week_start: "2020-06-11", mobility: 3, cases: 120 },
    { state: "PA", week_start: "2020-06-11", mobility: 1, cases: 45 },
  ],
  correlation: { pooled: 0.87, per_week: { "2020-06-11": 1.0 }, insufficient_weeks: [] },
};

/** Term orders differ by lambda band so re-ranking is observable. */
export const TERMS_HIGH_LAMBDA = ["economy", "market", "stocks", "jobs", "trade"];
export const TERMS_LOW_LAMBDA = ["furlough", "stimulus", "jobs", "market", "economy"];

function ldaTerms(url: URL): Stub {
  const lambda = Number(url.searchParams.get("lambda") ?? "0.6");
  const order = lambda >= 0.5 ? TERMS_HIGH_LAMBDA : TERMS_LOW_LAMBDA;
  return {
    status: 200,
    body: {
      as_of: AS_OF,
      topic: Number(url.searchParams.get("topic") ?? "0"),
      lambda,
      terms: order.map((term, i) => ({ term, relevance: 1 - i * 0.13 })),
    },
  };
}

export const CORPUS_WORDS = [
  { word: "corona", count: 90 },
  { word: "cases", count: 61 },
  { word: "masks", count: 40 },
  { word: "vaccine", count: 28 },
];

export function route(url: URL): Stub {
  switch (url.pathname) {
    case "/api/health":
      return {
        status: 200,
        body: {
          status: "ok",
          as_of: AS_OF,
          record_count: 123,
          day_count: DAYS.length,
          first_day: DAYS[0],
          last_day: DAYS[DAYS.length - 1],
          topics_available: true,
        },
      };
    case "/api/sentiment/series":
      return sentimentSeries(url);
    case "/api/wordcloud": {
      const polarity = (url.searchParams.get("polarity") ?? "pos") as "pos" | "neg";
      return {
        status: 200,
        body: {
          as_of: AS_OF,
          scope: url.searchParams.get("state"),
          range: url.searchParams.get("range") ?? "all",
          polarity,
          cohort: "all",
          k: Number(url.searchParams.get("k") ?? "50"),
          words: CLOUDS[polarity],
        },
      };
    }
    case "/api/topics/frequent":
      return {
        status: 200,
        body: { as_of: AS_OF, scope: null, k: TOPIC_SERIES.length, series: TOPIC_SERIES },
      };
    case "/api/mobility/weekly":
      return { status: 200, body: MOBILITY };
    case "/api/lda/topics":
      return {
        status: 200,
        body: {
          as_of: AS_OF,
          schema: "topicvis/1",
          k: 3,
          alpha: 0.5,
          beta: 0.01,
          iterations: 50,
          seed: 7,
          topics: [0, 1, 2].map((topic) => ({
            topic,
            prevalence: 0.5 - topic * 0.15,
            x: topic * 0.8 - 0.8,
            y: topic % 2 === 0 ? 0.4 : -0.4,
            terms: TERMS_HIGH_LAMBDA.map((term, i) => ({ term, relevance: 1 - i * 0.1 })),
            lambda: 0.6,
          })),
        },
      };
    case "/api/lda/terms":
      return ldaTerms(url);
    case "/api/words/top":
      return {
        status: 200,
        body: {
          as_of: AS_OF,
          scope: null,
          k: Number(url.searchParams.get("k") ?? "50"),
          words: CORPUS_WORDS,
        },
      };
    default:
      return {
        status: 404,
        body: { error: { code: "NOT_FOUND", message: `no route for ${url.pathname}` } },
      };
  }
}

export type Intercept = (url: URL) => Stub | Promise<Response> | null;

export interface Mounted {
  app: Dashboard;
  root: HTMLElement;
  calls: string[];
  /** Drop the call log so assertions start from a clean slate. */
  resetCalls: () => void;
}

export async function mount(query = "", intercept?: Intercept): Promise<Mounted> {
  window.history.replaceState(null, "", query ? `/?${query}` : "/");
  const calls: string[] = [];
  const fetchFn = (rawUrl: string): Promise<Response> => {
    calls.push(rawUrl);
    const url = new URL(rawUrl, "http://dashboard.test");
    const custom = intercept?.(url);
    if (custom) {
      return custom instanceof Promise ? custom : Promise.resolve(asResponse(custom));
    }
    return Promise.resolve(asResponse(route(url)));
  };
  const root = document.createElement("div");
  document.body.append(root);
  const app = new Dashboard(root, new ApiClient("", fetchFn), query);
  await app.ready;
  await app.settle();
  return { app, root, calls, resetCalls: () => calls.splice(0) };
}

export function parseCall(rawUrl: string): URL {
  return new URL(rawUrl, "http://dashboard.test");
}

export function click(target: Element): void {
  target.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}
