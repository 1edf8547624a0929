import type { QuiverJson } from './types.js';

// Builtin picker entries: standard orientations of the catalog seeds, one per
// name reported by GET /catalog.  A_n and D_n are paths and trees, C_n is the
// oriented n-cycle, the E family are the usual tree/doubled shapes and X6/X7
// the double-edge stars.  The classify round trip in the tests pins each
// entry to the verdict the service derives for it, so a typo here cannot
// survive the suite.

const TABLE: Record<string, [number, number, number][]> = {
  'A2': [[1, 2, 1]],
  'A3': [[1, 2, 1], [2, 3, 1]],
  'A4': [[1, 2, 1], [2, 3, 1], [3, 4, 1]],
  'A5': [[1, 2, 1], [2, 3, 1], [3, 4, 1], [4, 5, 1]],
  'A6': [[1, 2, 1], [2, 3, 1], [3, 4, 1], [4, 5, 1], [5, 6, 1]],
  'A7': [[1, 2, 1], [2, 3, 1], [3, 4, 1], [4, 5, 1], [5, 6, 1], [6, 7, 1]],
  'A8': [[1, 2, 1], [2, 3, 1], [3, 4, 1], [4, 5, 1], [5, 6, 1], [6, 7, 1], [7, 8, 1]],
  'D4': [[1, 3, 1], [2, 3, 1], [3, 4, 1]],
  'D5': [[1, 3, 1], [2, 3, 1], [3, 4, 1], [4, 5, 1]],
  'D6': [[1, 3, 1], [2, 3, 1], [3, 4, 1], [4, 5, 1], [5, 6, 1]],
  'D7': [[1, 3, 1], [2, 3, 1], [3, 4, 1], [4, 5, 1], [5, 6, 1], [6, 7, 1]],
  'D8': [[1, 3, 1], [2, 3, 1], [3, 4, 1], [4, 5, 1], [5, 6, 1], [6, 7, 1], [7, 8, 1]],
  'C4': [[1, 2, 1], [4, 1, 1], [2, 3, 1], [3, 4, 1]],
  'C5': [[1, 2, 1], [5, 1, 1], [2, 3, 1], [3, 4, 1], [4, 5, 1]],
  'C6': [[1, 2, 1], [6, 1, 1], [2, 3, 1], [3, 4, 1], [4, 5, 1], [5, 6, 1]],
  'C7': [[1, 2, 1], [7, 1, 1], [2, 3, 1], [3, 4, 1], [4, 5, 1], [5, 6, 1], [6, 7, 1]],
  'C8': [[1, 2, 1], [8, 1, 1], [2, 3, 1], [3, 4, 1], [4, 5, 1], [5, 6, 1], [6, 7, 1], [7, 8, 1]],
  'E6': [[1, 2, 1], [2, 3, 1], [3, 4, 1], [3, 6, 1], [4, 5, 1]],
  'E7': [[1, 2, 1], [2, 3, 1], [3, 4, 1], [3, 7, 1], [4, 5, 1], [5, 6, 1]],
  'E8': [[1, 2, 1], [2, 3, 1], [3, 4, 1], [3, 8, 1], [4, 5, 1], [5, 6, 1], [6, 7, 1]],
  'E6^(1)': [[1, 2, 1], [2, 3, 1], [3, 4, 1], [3, 6, 1], [4, 5, 1], [6, 7, 1]],
  'E7^(1)': [[1, 2, 1], [2, 3, 1], [3, 4, 1], [4, 5, 1], [4, 8, 1], [5, 6, 1], [6, 7, 1]],
  'E8^(1)': [[1, 2, 1], [2, 3, 1], [3, 4, 1], [3, 9, 1], [4, 5, 1], [5, 6, 1], [6, 7, 1], [7, 8, 1]],
  'E6^(1,1)': [[1, 2, 2], [3, 1, 1], [4, 1, 1], [5, 1, 1], [2, 3, 1], [2, 4, 1], [2, 5, 1],
               [3, 6, 1], [4, 7, 1], [5, 8, 1]],
  'E7^(1,1)': [[1, 2, 2], [3, 1, 1], [4, 1, 1], [5, 1, 1], [2, 3, 1], [2, 4, 1], [2, 5, 1],
               [3, 6, 1], [4, 8, 1], [6, 7, 1], [8, 9, 1]],
  'E8^(1,1)': [[1, 2, 2], [3, 1, 1], [4, 1, 1], [5, 1, 1], [2, 3, 1], [2, 4, 1], [2, 5, 1],
               [3, 6, 1], [4, 7, 1], [7, 8, 1], [8, 9, 1], [9, 10, 1]],
  'X6': [[1, 2, 1], [3, 1, 1], [1, 4, 1], [5, 1, 1], [1, 6, 1], [2, 3, 2], [4, 5, 2]],
  'X7': [[1, 2, 1], [3, 1, 1], [1, 4, 1], [5, 1, 1], [1, 6, 1], [7, 1, 1], [2, 3, 2],
         [4, 5, 2], [6, 7, 2]],
};

export function builtinSeed(name: string): QuiverJson | null {
  const arrows = TABLE[name];
  if (!arrows) return null;
  let n = 0;
  for (const [i, j] of arrows) n = Math.max(n, i, j);
  return { n, arrows: arrows.map((a) => [...a] as [number, number, number]) };
}

export const BUILTIN_SEED_NAMES: string[] = Object.keys(TABLE);
