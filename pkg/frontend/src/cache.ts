/** In-flight and completed request cache keyed by URL. Repeating a query,
 * such as clicking the already-selected state, reuses the stored promise so
 * the network sees exactly one request per distinct URL. */
export class RequestCache {
  private entries = new Map<string, Promise<unknown>>();

  get<T>(url: string, load: (url: string) => Promise<T>): Promise<T> {
    const hit = this.entries.get(url);
    if (hit) return hit as Promise<T>;
    const pending = load(url).catch((err) => {
      // Failures are not cached; the next attempt retries the network.
      this.entries.delete(url);
      throw err;
    });
    this.entries.set(url, pending);
    return pending;
  }

  clear(): void {
    this.entries.clear();
  }

  get size(): number {
    return this.entries.size;
  }
}
