/** Typed client for the analytics JSON API. Every panel goes through this
 * module; nothing else in the app touches fetch or builds query strings. */

export type Timeframe = "today" | "yesterday" | "all" | "custom";

export interface HealthResponse {
  status: string;
  as_of: string | null;
  record_count: number;
  day_count: number;
  first_day: string | null;
  last_day: string | null;
  topics_available: boolean;
}

export interface DayCount {
  date: string;
  count: number;
}

export interface FrequencyResponse {
  as_of: string | null;
  scope: string | null;
  from: string | null;
  to: string | null;
  points: DayCount[];
  total: number;
}

export interface WordCount {
  word: string;
  count: number;
}

export interface WordsTopResponse {
  as_of: string | null;
  scope: string | null;
  k: number;
  words: WordCount[];
}

export interface BigramsTopResponse {
  as_of: string | null;
  scope: string | null;
  k: number;
  bigrams: { bigram: [string, string]; count: number }[];
}

export interface TopicSeries {
  topic: string;
  total: number;
  points: DayCount[];
}

export interface TopicTrendsResponse {
  as_of: string | null;
  scope: string | null;
  k: number;
  watchlist_size?: number;
  series: TopicSeries[];
}

export interface SentimentPoint {
  date: string;
  mean_compound: number | null;
  mean_subjectivity: number | null;
  count: number;
}

export interface SentimentSeriesResponse {
  as_of: string | null;
  scope: string | null;
  range: Timeframe;
  from: string | null;
  to: string | null;
  window_mean_compound: number | null;
  points: SentimentPoint[];
}

export interface WordcloudResponse {
  as_of: string | null;
  scope: string | null;
  range: Timeframe;
  polarity: "pos" | "neg";
  cohort: string;
  k: number;
  words: WordCount[];
}

export interface MobilityWeek {
  week_start: string;
  week_end: string;
  counts: Record<string, number>;
}

export interface JoinedRow {
  state: string;
  week_start: string;
  mobility: number;
  cases: number;
}

export interface MobilityWeeklyResponse {
  as_of: string | null;
  lag: number;
  week_epoch: string;
  weeks: MobilityWeek[];
  overflow: number;
  joined: JoinedRow[];
  correlation: {
    pooled: number;
    per_week: Record<string, number>;
    insufficient_weeks: string[];
  } | null;
}

export interface LdaTopic {
  topic: number;
  prevalence: number;
  x: number;
  y: number;
  terms: { term: string; relevance: number }[];
  lambda: number | null;
}

export interface LdaTopicsResponse {
  as_of: string | null;
  schema: string;
  k: number;
  alpha: number;
  beta: number;
  iterations: number;
  seed: number;
  topics: LdaTopic[];
}

export interface LdaTermsResponse {
  as_of: string | null;
  topic: number;
  lambda: number;
  terms: { term: string; relevance: number }[];
}

/** Error body the service returns for every non-2xx response. */
export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type QueryParams = Record<string, string | number | undefined>;

/** Build the canonical request path; undefined params are omitted. Callers
 * fix the key order, so equal queries always produce equal URL strings and
 * can be used directly as cache keys. */
export function buildUrl(path: string, params: QueryParams = {}): string {
  const search = new URLSearchParams();
  for (const [key, value] of Object.entries(params)) {
    if (value !== undefined) search.set(key, String(value));
  }
  const qs = search.toString();
  return qs ? `${path}?${qs}` : path;
}

export interface TimeframeQuery {
  state?: string | null;
  range: Timeframe;
  from?: string | null;
  to?: string | null;
}

/** Query params for the endpoints that accept a state plus a timeframe.
 * `range` is always sent explicitly; from/to only apply to custom ranges. */
export function timeframeParams(query: TimeframeQuery): QueryParams {
  return {
    state: query.state ?? undefined,
    range: query.range,
    from: query.range === "custom" ? query.from ?? undefined : undefined,
    to: query.range === "custom" ? query.to ?? undefined : undefined,
  };
}

export type FetchLike = (url: string) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (url) => fetch(url),
  ) {}

  /** GET a JSON endpoint; non-2xx responses become ApiError with the code
   * from the service's error envelope. */
  async getJson<T>(url: string): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + url);
    const body = await response.json().catch(() => null);
    if (!response.ok) {
      const err = (body as { error?: { code?: string; message?: string } } | null)?.error ?? {};
      throw new ApiError(
        response.status,
        err.code ?? "UNKNOWN",
        err.message ?? `request failed with status ${response.status}`,
      );
    }
    return body as T;
  }
}
