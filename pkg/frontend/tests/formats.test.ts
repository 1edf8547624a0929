import { describe, expect, it } from 'vitest';

import {
  formatJsonQuiver,
  formatTextQuiver,
  ParseError,
  parseJsonQuiver,
  parseTextQuiver,
  parseUpload,
} from '../src/formats.js';
import type { Arrow, QuiverJson } from '../src/types.js';

describe('text format', () => {
  it('parses the documented example', () => {
    const q = parseTextQuiver('# a comment\nn 4\n1 2 1\n2 3 2\n');
    expect(q).toEqual({ n: 4, arrows: [[1, 2, 1], [2, 3, 2]] });
  });

  it('ignores blank lines and trailing comments', () => {
    const q = parseTextQuiver('\nn 2\n\n1 2 1   # the only arrow\n\n');
    expect(q).toEqual({ n: 2, arrows: [[1, 2, 1]] });
  });

  it('round-trips through the printer', () => {
    const q: QuiverJson = { n: 5, arrows: [[1, 2, 1], [5, 1, 2], [2, 3, 1]] };
    expect(parseTextQuiver(formatTextQuiver(q))).toEqual(q);
  });

  it('reports the offending line number', () => {
    expect(() => parseTextQuiver('n 3\n1 2 1\n2 2 1\n')).toThrow(/line 3: loop forbidden/);
    expect(() => parseTextQuiver('n 3\n1 5 1\n')).toThrow(/line 2: vertex out of range 1\.\.3/);
    expect(() => parseTextQuiver('n 3\n1 2 1\n2 1 3\n')).toThrow(/line 3: conflicting edge/);
    expect(() => parseTextQuiver('n 3\n1 2 0\n')).toThrow(/line 2: arrow weight must be >= 1/);
    expect(() => parseTextQuiver('vertices 3\n')).toThrow(/line 1: expected header/);
    expect(() => parseTextQuiver('n 3\n1 2\n')).toThrow(/line 2: expected '<i> <j> <w>'/);
    expect(() => parseTextQuiver('n 3\n1 two 1\n')).toThrow(/line 2: .*not an integer/);
  });

  it('rejects empty input', () => {
    expect(() => parseTextQuiver('# nothing here\n')).toThrow(/missing 'n <count>' header/);
  });

  it('carries the line on the error object for inline diagnostics', () => {
    try {
      parseTextQuiver('n 2\nbroken\n');
      expect.unreachable();
    } catch (err) {
      expect(err).toBeInstanceOf(ParseError);
      expect((err as ParseError).line).toBe(2);
    }
  });
});

describe('json format', () => {
  it('parses and rejects like the service', () => {
    expect(parseJsonQuiver('{"n": 3, "arrows": [[1, 2, 1]]}')).toEqual({
      n: 3,
      arrows: [[1, 2, 1]],
    });
    expect(() => parseJsonQuiver('[1, 2]')).toThrow(/must be an object/);
    expect(() => parseJsonQuiver('{"n": 2}')).toThrow(/needs keys 'n' and 'arrows'/);
    expect(() => parseJsonQuiver('{"n": 2, "arrows": [], "extra": 1}')).toThrow(/unexpected keys/);
    expect(() => parseJsonQuiver('{"n": -1, "arrows": []}')).toThrow(/non-negative/);
    expect(() => parseJsonQuiver('{"n": true, "arrows": []}')).toThrow(/non-negative/);
    expect(() => parseJsonQuiver('{"n": 2, "arrows": [[1, 1, 1]]}')).toThrow(/loop/);
    expect(() => parseJsonQuiver('{"n": 2, "arrows": [[1, 2, 1.5]]}')).toThrow(/integer triple/);
    expect(() => parseJsonQuiver('{"n": 2, "arrows": [[1, 2]]}')).toThrow(/arrow #1/);
    expect(() => parseJsonQuiver('not json')).toThrow(/not valid JSON/);
  });

  it('compact printer matches JSON.stringify of the object', () => {
    const q: QuiverJson = { n: 3, arrows: [[2, 1, 1], [2, 3, 1]] };
    expect(formatJsonQuiver(q)).toBe('{"n":3,"arrows":[[2,1,1],[2,3,1]]}');
    expect(parseJsonQuiver(formatJsonQuiver(q))).toEqual(q);
  });
});

describe('upload dispatch', () => {
  it('guesses the format from the content', () => {
    expect(parseUpload('  {"n": 1, "arrows": []}')).toEqual({ n: 1, arrows: [] });
    expect(parseUpload('n 1\n')).toEqual({ n: 1, arrows: [] });
  });
});

describe('randomized round trips', () => {
  // small deterministic LCG; no external RNG dependency for a handful of cases
  let state = 0x2d5f1e03;
  const rnd = (m: number) => {
    state = (state * 1103515245 + 12345) & 0x7fffffff;
    return state % m;
  };

  function randomQuiver(): QuiverJson {
    const n = 2 + rnd(7);
    const arrows: Arrow[] = [];
    const used = new Set<string>();
    const count = rnd(n * 2);
    for (let t = 0; t < count; t++) {
      const i = 1 + rnd(n);
      const j = 1 + rnd(n);
      if (i === j) continue;
      const key = i < j ? `${i},${j}` : `${j},${i}`;
      if (used.has(key)) continue;
      used.add(key);
      arrows.push([i, j, 1 + rnd(3)]);
    }
    return { n, arrows };
  }

  it('both formats are exact inverses on 200 random quivers', () => {
    for (let t = 0; t < 200; t++) {
      const q = randomQuiver();
      expect(parseTextQuiver(formatTextQuiver(q))).toEqual(q);
      expect(parseJsonQuiver(formatJsonQuiver(q))).toEqual(q);
    }
  });
});
