import type { Point } from "./types.js";

/** Deterministic PRNG (mulberry32) so a session's board never jumps
 * between page loads or test runs. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export const BOARD = 520; // square canvas, px

/** Seeded force-directed layout: spring edges, pairwise repulsion,
 * centering pull.  Runs to a fixed iteration count for determinism. */
export function forceLayout(
  n: number,
  edges: [number, number][],
  seed: number,
): Point[] {
  const rand = mulberry32(seed);
  const pos: Point[] = [];
  const radius = BOARD * 0.38;
  for (let i = 0; i < n; i++) {
    // ring start with jitter keeps the simulation stable and symmetric
    const angle = (2 * Math.PI * i) / Math.max(n, 1) + (rand() - 0.5) * 0.3;
    pos.push({
      x: BOARD / 2 + radius * Math.cos(angle) * (0.8 + 0.3 * rand()),
      y: BOARD / 2 + radius * Math.sin(angle) * (0.8 + 0.3 * rand()),
    });
  }
  if (n <= 1) return pos;
  const ideal = Math.min(170, (2.4 * BOARD) / n + 60);
  for (let iter = 0; iter < 260; iter++) {
    const step = 0.085 * (1 - iter / 300);
    const fx = new Array(n).fill(0);
    const fy = new Array(n).fill(0);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = pos[i].x - pos[j].x;
        let dy = pos[i].y - pos[j].y;
        let d2 = dx * dx + dy * dy;
        if (d2 < 1) {
          dx = 1;
          d2 = 1;
        }
        const rep = (ideal * ideal) / d2;
        const d = Math.sqrt(d2);
        fx[i] += (dx / d) * rep * 14;
        fy[i] += (dy / d) * rep * 14;
        fx[j] -= (dx / d) * rep * 14;
        fy[j] -= (dy / d) * rep * 14;
      }
    }
    for (const [u, v] of edges) {
      const dx = pos[v].x - pos[u].x;
      const dy = pos[v].y - pos[u].y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const pull = (d - ideal) * 0.28;
      fx[u] += (dx / d) * pull;
      fy[u] += (dy / d) * pull;
      fx[v] -= (dx / d) * pull;
      fy[v] -= (dy / d) * pull;
    }
    for (let i = 0; i < n; i++) {
      fx[i] += (BOARD / 2 - pos[i].x) * 0.012;
      fy[i] += (BOARD / 2 - pos[i].y) * 0.012;
      pos[i].x += fx[i] * step;
      pos[i].y += fy[i] * step;
    }
  }
  const margin = 30;
  for (const p of pos) {
    p.x = Math.min(BOARD - margin, Math.max(margin, p.x));
    p.y = Math.min(BOARD - margin, Math.max(margin, p.y));
  }
  return pos;
}

/** Positions after contracting (u,v): the merged vertex sits at the
 * midpoint of its endpoints, vertices above max(u,v) shift down one
 * index.  No fresh simulation, so the rest of the board stays put. */
export function contractPositions(pos: Point[], u: number, v: number): Point[] {
  const [lo, hi] = u < v ? [u, v] : [v, u];
  const merged = {
    x: (pos[lo].x + pos[hi].x) / 2,
    y: (pos[lo].y + pos[hi].y) / 2,
  };
  const out: Point[] = [];
  for (let i = 0; i < pos.length; i++) {
    if (i === hi) continue;
    out.push(i === lo ? merged : { ...pos[i] });
  }
  return out;
}
