import { interpolateRdBu, scaleSequential } from "d3";

/** Mean compound polarity rarely leaves a narrow band around zero, so the
 * map scale clamps to [-0.5, +0.5]; values outside saturate at the ends. */
export const POLARITY_DOMAIN: readonly [number, number] = [-0.5, 0.5];

const scale = scaleSequential(interpolateRdBu).domain(POLARITY_DOMAIN).clamp(true);

export const NO_DATA_COLOR = "#d8d8d8";

/** Diverging fill for a state's mean polarity, centered on neutral zero.
 * Null (no tweets in the window) renders as flat grey. */
export function polarityColor(meanCompound: number | null): string {
  if (meanCompound === null || Number.isNaN(meanCompound)) return NO_DATA_COLOR;
  return scale(meanCompound);
}
