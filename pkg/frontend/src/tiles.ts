/** Equal-area tile grid for the 50 states plus DC. Every state gets one
 * square, so small dense states stay clickable and color panels compare
 * fairly. Coordinates are (column, row) in grid units. */

export interface Tile {
  code: string;
  name: string;
  col: number;
  row: number;
}

export const TILES: readonly Tile[] = [
  { code: "AK", name: "Alaska", col: 0, row: 0 },
  { code: "ME", name: "Maine", col: 11, row: 0 },
  { code: "VT", name: "Vermont", col: 10, row: 1 },
  { code: "NH", name: "New Hampshire", col: 11, row: 1 },
  { code: "WA", name: "Washington", col: 1, row: 2 },
  { code: "ID", name: "Idaho", col: 2, row: 2 },
  { code: "MT", name: "Montana", col: 3, row: 2 },
  { code: "ND", name: "North Dakota", col: 4, row: 2 },
  { code: "MN", name: "Minnesota", col: 5, row: 2 },
  { code: "IL", name: "Illinois", col: 6, row: 2 },
  { code: "WI", name: "Wisconsin", col: 7, row: 2 },
  { code: "MI", name: "Michigan", col: 8, row: 2 },
  { code: "NY", name: "New York", col: 9, row: 2 },
  { code: "MA", name: "Massachusetts", col: 10, row: 2 },
  { code: "RI", name: "Rhode Island", col: 11, row: 2 },
  { code: "OR", name: "Oregon", col: 1, row: 3 },
  { code: "NV", name: "Nevada", col: 2, row: 3 },
  { code: "WY", name: "Wyoming", col: 3, row: 3 },
  { code: "SD", name: "South Dakota", col: 4, row: 3 },
  { code: "IA", name: "Iowa", col: 5, row: 3 },
  { code: "IN", name: "Indiana", col: 6, row: 3 },
  { code: "OH", name: "Ohio", col: 7, row: 3 },
  { code: "PA", name: "Pennsylvania", col: 8, row: 3 },
  { code: "NJ", name: "New Jersey", col: 9, row: 3 },
  { code: "CT", name: "Connecticut", col: 10, row: 3 },
  { code: "CA", name: "California", col: 1, row: 4 },
  { code: "UT", name: "Utah", col: 2, row: 4 },
  { code: "CO", name: "Colorado", col: 3, row: 4 },
  { code: "NE", name: "Nebraska", col: 4, row: 4 },
  { code: "MO", name: "Missouri", col: 5, row: 4 },
  { code: "KY", name: "Kentucky", col: 6, row: 4 },
  { code: "WV", name: "West Virginia", col: 7, row: 4 },
  { code: "VA", name: "Virginia", col: 8, row: 4 },
  { code: "MD", name: "Maryland", col: 9, row: 4 },
  { code: "DE", name: "Delaware", col: 10, row: 4 },
  { code: "AZ", name: "Arizona", col: 2, row: 5 },
  { code: "NM", name: "New Mexico", col: 3, row: 5 },
  { code: "KS", name: "Kansas", col: 4, row: 5 },
  { code: "AR", name: "Arkansas", col: 5, row: 5 },
  { code: "TN", name: "Tennessee", col: 6, row: 5 },
  { code: "NC", name: "North Carolina", col: 7, row: 5 },
  { code: "SC", name: "South Carolina", col: 8, row: 5 },
  { code: "DC", name: "District of Columbia", col: 9, row: 5 },
  { code: "OK", name: "Oklahoma", col: 4, row: 6 },
  { code: "LA", name: "Louisiana", col: 5, row: 6 },
  { code: "MS", name: "Mississippi", col: 6, row: 6 },
  { code: "AL", name: "Alabama", col: 7, row: 6 },
  { code: "GA", name: "Georgia", col: 8, row: 6 },
  { code: "HI", name: "Hawaii", col: 0, row: 7 },
  { code: "TX", name: "Texas", col: 4, row: 7 },
  { code: "FL", name: "Florida", col: 9, row: 7 },
];

export const GRID_COLS = 12;
export const GRID_ROWS = 8;

const BY_CODE = new Map(TILES.map((t) => [t.code, t]));

export function stateName(code: string): string {
  return BY_CODE.get(code)?.name ?? code;
}
