import { describe, expect, it } from "vitest";
import { ApiClient, ApiError, buildUrl } from "../src/api";
import { RequestCache } from "../src/cache";
import { NO_DATA_COLOR, polarityColor } from "../src/color";
import { SequenceGate } from "../src/seq";
import { asResponse } from "./helpers";

describe("buildUrl", () => {
  it("serializes params in caller order and skips undefined", () => {
    expect(buildUrl("/api/x", { a: 1, b: undefined, c: "z" })).toBe("/api/x?a=1&c=z");
    expect(buildUrl("/api/x")).toBe("/api/x");
  });
});

describe("ApiClient", () => {
  it("unwraps the service error envelope into ApiError", async () => {
    const client = new ApiClient("", async () =>
      asResponse({
        status: 400,
        body: { error: { code: "STATE_UNKNOWN", message: "no such state" } },
      }),
    );
    const err = await client.getJson("/api/frequency?state=ZZ").catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).status).toBe(400);
    expect((err as ApiError).code).toBe("STATE_UNKNOWN");
  });

  it("falls back to a generic code when the body is not the envelope", async () => {
    const client = new ApiClient("", async () =>
      ({ ok: false, status: 502, json: async () => { throw new Error("not json"); } }) as unknown as Response,
    );
    const err = await client.getJson("/api/health").catch((e: unknown) => e);
    expect((err as ApiError).code).toBe("UNKNOWN");
  });
});

describe("SequenceGate", () => {
  it("treats only the most recent ticket as current", () => {
    const gate = new SequenceGate();
    const first = gate.issue();
    const second = gate.issue();
    expect(gate.isCurrent(first)).toBe(false);
    expect(gate.isCurrent(second)).toBe(true);
  });
});

describe("RequestCache", () => {
  it("fetches each distinct URL once", async () => {
    const cache = new RequestCache();
    let hits = 0;
    const load = async () => {
      hits += 1;
      return hits;
    };
    expect(await cache.get("/a", load)).toBe(1);
    expect(await cache.get("/a", load)).toBe(1);
    expect(await cache.get("/b", load)).toBe(2);
    expect(hits).toBe(2);
  });

  it("does not cache failures", async () => {
    const cache = new RequestCache();
    let attempts = 0;
    const flaky = async () => {
      attempts += 1;
      if (attempts === 1) throw new Error("boom");
      return "ok";
    };
    await expect(cache.get("/a", flaky)).rejects.toThrow("boom");
    expect(await cache.get("/a", flaky)).toBe("ok");
  });
});

describe("polarityColor", () => {
  it("clamps beyond the fixed domain", () => {
    expect(polarityColor(0.5)).toBe(polarityColor(3));
    expect(polarityColor(-0.5)).toBe(polarityColor(-2));
  });

  it("diverges around neutral and greys out missing data", () => {
    expect(polarityColor(0.3)).not.toBe(polarityColor(-0.3));
    expect(polarityColor(null)).toBe(NO_DATA_COLOR);
  });
});
