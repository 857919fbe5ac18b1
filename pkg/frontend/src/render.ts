import { BOARD } from "./layout.js";
import type { GameState, MoveInfo, Point } from "./types.js";

export interface ViewModel {
  state: GameState | null;
  positions: Point[];
  selected: [number, number] | null;
  hints: MoveInfo[] | null;
  humanLabel: string;
  error: string | null;
  busy: boolean;
}

function escapeHtml(text: string): string {
  return text.replace(/[&<>"]/g, (c) =>
    c === "&" ? "&amp;" : c === "<" ? "&lt;" : c === ">" ? "&gt;" : "&quot;",
  );
}

function edgeKey(u: number, v: number): string {
  return u < v ? `${u}-${v}` : `${v}-${u}`;
}

function hintFor(hints: MoveInfo[] | null, u: number, v: number): string {
  if (!hints) return "";
  const del = hints.find(
    (m) => edgeKey(m.edge[0], m.edge[1]) === edgeKey(u, v) && m.action === "delete",
  );
  const con = hints.find(
    (m) => edgeKey(m.edge[0], m.edge[1]) === edgeKey(u, v) && m.action === "contract",
  );
  if (!del || del.value === undefined || !con || con.value === undefined) return "";
  return `d${del.value} c${con.value}`;
}

/** The playing board as an SVG string.  Every edge carries a data-edge
 * attribute so tests and the click handler agree on what is shown. */
export function renderBoard(vm: ViewModel): string {
  const { state, positions, selected, hints } = vm;
  if (!state) return `<svg class="board" viewBox="0 0 ${BOARD} ${BOARD}"></svg>`;
  const parts: string[] = [];
  for (const [u, v] of state.edges) {
    const a = positions[u];
    const b = positions[v];
    if (!a || !b) continue;
    const sel = selected && edgeKey(u, v) === edgeKey(selected[0], selected[1]);
    parts.push(
      `<line class="edge${sel ? " selected" : ""}" data-edge="${edgeKey(u, v)}" ` +
        `x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}" ` +
        `x2="${b.x.toFixed(1)}" y2="${b.y.toFixed(1)}"/>`,
    );
    // wide invisible twin as the click target
    parts.push(
      `<line class="edge-hit" data-edge="${edgeKey(u, v)}" ` +
        `x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}" ` +
        `x2="${b.x.toFixed(1)}" y2="${b.y.toFixed(1)}"/>`,
    );
    const label = hintFor(hints, u, v);
    if (label) {
      const mx = (a.x + b.x) / 2;
      const my = (a.y + b.y) / 2;
      parts.push(
        `<text class="hint" data-hint="${edgeKey(u, v)}" x="${mx.toFixed(1)}" ` +
          `y="${(my - 6).toFixed(1)}">${label}</text>`,
      );
    }
  }
  positions.forEach((p, i) => {
    if (i >= state.n) return;
    parts.push(
      `<circle class="vertex" data-vertex="${i}" cx="${p.x.toFixed(1)}" ` +
        `cy="${p.y.toFixed(1)}" r="11"/>`,
      `<text class="vertex-label" x="${p.x.toFixed(1)}" y="${(p.y + 4).toFixed(1)}">${i}</text>`,
    );
  });
  return `<svg class="board" viewBox="0 0 ${BOARD} ${BOARD}">${parts.join("")}</svg>`;
}

export function renderStatus(vm: ViewModel): string {
  const { state, error, busy, humanLabel } = vm;
  const bits: string[] = [];
  if (error) bits.push(`<div class="banner error">${escapeHtml(error)}</div>`);
  if (!state) {
    bits.push(`<div class="status">Pick a starting graph to play.</div>`);
    return bits.join("");
  }
  if (state.finished) {
    const youWon = state.winner === humanLabel;
    const text =
      state.engine_side === "none"
        ? `Player ${state.winner} wins!`
        : youWon
          ? "You win!"
          : "Engine wins!";
    bits.push(`<div class="banner winner" data-winner="${state.winner}">${text}</div>`);
  } else {
    const turn =
      state.to_move === humanLabel
        ? "Your move: pick an edge, then delete or contract."
        : state.engine_side === "none"
          ? `Player ${state.to_move} to move.`
          : "Engine is thinking...";
    bits.push(`<div class="status" data-to-move="${state.to_move}">${turn}</div>`);
  }
  bits.push(
    `<div class="counts">${state.n} vertices, ${state.edges.length} edges` +
      (busy ? " &middot; working" : "") +
      `</div>`,
  );
  return bits.join("");
}

/** Edge set currently drawn on a rendered board: the test hook for the
 * board == API-state invariant. */
export function edgesInSvg(svg: string): string[] {
  const seen = new Set<string>();
  for (const match of svg.matchAll(/class="edge(?: selected)?" data-edge="(\d+-\d+)"/g)) {
    seen.add(match[1]);
  }
  return [...seen].sort();
}
