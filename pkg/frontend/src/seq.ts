/** Monotonic ticket counter per panel. Responses arriving out of order are
 * dropped: only the reply to the most recently issued ticket is applied. */
export class SequenceGate {
  private next = 0;
  private latest = -1;

  /** Claim a ticket for a request about to be issued. */
  issue(): number {
    this.latest = this.next;
    return this.next++;
  }

  /** True when the response for `ticket` is still the freshest in flight. */
  isCurrent(ticket: number): boolean {
    return ticket === this.latest;
  }
}
