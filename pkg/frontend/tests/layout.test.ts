import { describe, expect, it } from "vitest";
import { BOARD, contractPositions, forceLayout, mulberry32 } from "../src/layout.js";

const C5: [number, number][] = [[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]];

describe("seeded prng", () => {
  it("is deterministic and uniform-ish", () => {
    const a = mulberry32(42);
    const b = mulberry32(42);
    const xs = Array.from({ length: 100 }, () => a());
    const ys = Array.from({ length: 100 }, () => b());
    expect(xs).toEqual(ys);
    expect(Math.min(...xs)).toBeGreaterThanOrEqual(0);
    expect(Math.max(...xs)).toBeLessThan(1);
  });
});

describe("force layout", () => {
  it("same seed gives identical positions", () => {
    expect(forceLayout(5, C5, 7)).toEqual(forceLayout(5, C5, 7));
  });

  it("different seeds give different boards", () => {
    expect(forceLayout(5, C5, 7)).not.toEqual(forceLayout(5, C5, 8));
  });

  it("keeps every vertex inside the canvas", () => {
    for (const p of forceLayout(10, C5, 3)) {
      expect(p.x).toBeGreaterThanOrEqual(0);
      expect(p.x).toBeLessThanOrEqual(BOARD);
      expect(p.y).toBeGreaterThanOrEqual(0);
      expect(p.y).toBeLessThanOrEqual(BOARD);
    }
  });

  it("separates adjacent vertices", () => {
    const pos = forceLayout(5, C5, 1);
    for (const [u, v] of C5) {
      const d = Math.hypot(pos[u].x - pos[v].x, pos[u].y - pos[v].y);
      expect(d).toBeGreaterThan(20);
    }
  });
});

describe("contraction geometry", () => {
  it("merged vertex sits at the endpoint midpoint", () => {
    const pos = [
      { x: 0, y: 0 },
      { x: 10, y: 20 },
      { x: 100, y: 100 },
    ];
    const next = contractPositions(pos, 0, 1);
    expect(next).toHaveLength(2);
    expect(next[0]).toEqual({ x: 5, y: 10 });
    expect(next[1]).toEqual({ x: 100, y: 100 }); // untouched, shifted down
  });

  it("handles either endpoint order", () => {
    const pos = [
      { x: 2, y: 2 },
      { x: 4, y: 6 },
    ];
    expect(contractPositions(pos, 1, 0)).toEqual(contractPositions(pos, 0, 1));
  });
});
