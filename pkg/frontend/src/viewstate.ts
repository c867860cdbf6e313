/** The full UI state: which state is focused, the active timeframe, the set
 * of topics picked in the trend explorer, the selected LDA topic, and the
 * relevance slider position. Serializable to and from a URL query string so
 * a pasted link restores the exact view. */

import type { Timeframe } from "./api";

export interface ViewState {
  /** Two-letter state code, or null for the nationwide view. */
  state: string | null;
  timeframe: Timeframe;
  /** Custom range bounds; only meaningful when timeframe is "custom". */
  from: string | null;
  to: string | null;
  /** Topics selected in the trend explorer, in insertion order. */
  topics: string[];
  /** LDA topic index shown in the term panel, or null for the overview. */
  ldaTopic: number | null;
  /** Relevance weighting for ranked terms. */
  lambda: number;
}

export const DEFAULT_LAMBDA = 0.6;

export function defaultViewState(): ViewState {
  return {
    state: null,
    timeframe: "all",
    from: null,
    to: null,
    topics: [],
    ldaTopic: null,
    lambda: DEFAULT_LAMBDA,
  };
}

const TIMEFRAMES: readonly Timeframe[] = ["today", "yesterday", "all", "custom"];
const DATE_RE = /^\d{4}-\d{2}-\d{2}$/;

export function clampLambda(value: number): number {
  if (!Number.isFinite(value)) return DEFAULT_LAMBDA;
  return Math.min(1, Math.max(0, value));
}

/** Encode only fields that differ from the defaults, keeping URLs short. */
export function encodeViewState(state: ViewState): string {
  const params = new URLSearchParams();
  if (state.state) params.set("state", state.state);
  if (state.timeframe !== "all") params.set("range", state.timeframe);
  if (state.timeframe === "custom") {
    if (state.from) params.set("from", state.from);
    if (state.to) params.set("to", state.to);
  }
  if (state.topics.length > 0) params.set("topics", state.topics.join(","));
  if (state.ldaTopic !== null) params.set("topic", String(state.ldaTopic));
  if (state.lambda !== DEFAULT_LAMBDA) params.set("lambda", state.lambda.toFixed(2));
  return params.toString();
}

/** Decode a query string back into a ViewState. Unknown or malformed values
 * fall back to the defaults field by field so a mangled link still loads. */
export function decodeViewState(query: string): ViewState {
  const params = new URLSearchParams(query.startsWith("?") ? query.slice(1) : query);
  const state = defaultViewState();

  const code = params.get("state");
  if (code && /^[A-Za-z]{2}$/.test(code)) state.state = code.toUpperCase();

  const range = params.get("range");
  if (range && (TIMEFRAMES as readonly string[]).includes(range)) {
    state.timeframe = range as Timeframe;
  }

  if (state.timeframe === "custom") {
    const from = params.get("from");
    const to = params.get("to");
    if (from && DATE_RE.test(from)) state.from = from;
    if (to && DATE_RE.test(to)) state.to = to;
    // A custom range needs ordered bounds; otherwise not meaningfully custom.
    if (!state.from || !state.to || state.from > state.to) {
      state.timeframe = "all";
      state.from = null;
      state.to = null;
    }
  }

  const topics = params.get("topics");
  if (topics) {
    const seen = new Set<string>();
    for (const raw of topics.split(",")) {
      const topic = raw.trim().toLowerCase();
      if (topic && !seen.has(topic)) {
        seen.add(topic);
        state.topics.push(topic);
      }
    }
  }

  const topic = params.get("topic");
  if (topic !== null && /^\d+$/.test(topic)) state.ldaTopic = Number(topic);

  const lambda = params.get("lambda");
  if (lambda !== null && lambda !== "" && !Number.isNaN(Number(lambda))) {
    state.lambda = clampLambda(Number(lambda));
  }

  return state;
}

export function viewStatesEqual(a: ViewState, b: ViewState): boolean {
  return (
    a.state === b.state &&
    a.timeframe === b.timeframe &&
    a.from === b.from &&
    a.to === b.to &&
    a.topics.length === b.topics.length &&
    a.topics.every((t, i) => t === b.topics[i]) &&
    a.ldaTopic === b.ldaTopic &&
    a.lambda === b.lambda
  );
}
