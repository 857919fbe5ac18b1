import { describe, expect, it } from "vitest";
import { forceLayout } from "../src/layout.js";
import { edgesInSvg, renderBoard, renderStatus, type ViewModel } from "../src/render.js";
import type { GameState } from "../src/types.js";

function stateOf(n: number, edges: [number, number][], extra: Partial<GameState> = {}): GameState {
  return {
    id: "t1",
    n,
    edges,
    to_move: "human",
    finished: false,
    winner: null,
    engine_side: "second",
    history: [],
    ...extra,
  };
}

function vm(state: GameState | null, extra: Partial<ViewModel> = {}): ViewModel {
  return {
    state,
    positions: state ? forceLayout(state.n, state.edges, 5) : [],
    selected: null,
    hints: null,
    humanLabel: "human",
    error: null,
    busy: false,
    ...extra,
  };
}

describe("board rendering", () => {
  it("draws exactly the state's edge set", () => {
    const state = stateOf(4, [[0, 1], [1, 2], [2, 3], [0, 3]]);
    const svg = renderBoard(vm(state));
    expect(edgesInSvg(svg)).toEqual(["0-1", "0-3", "1-2", "2-3"]);
    expect(svg.match(/class="vertex"/g)).toHaveLength(4);
  });

  it("marks the selected edge", () => {
    const state = stateOf(3, [[0, 1], [1, 2], [0, 2]]);
    const svg = renderBoard(vm(state, { selected: [0, 2] }));
    expect(svg).toContain('class="edge selected" data-edge="0-2"');
  });

  it("renders hint labels with both action values", () => {
    const state = stateOf(3, [[0, 1], [1, 2], [0, 2]]);
    const hints = [
      { edge: [0, 1] as [number, number], action: "delete" as const, value: 0 },
      { edge: [0, 1] as [number, number], action: "contract" as const, value: 1 },
    ];
    const svg = renderBoard(vm(state, { hints }));
    expect(svg).toContain('data-hint="0-1"');
    expect(svg).toContain(">d0 c1<");
    expect(svg).not.toContain('data-hint="1-2"'); // no values known there
  });

  it("empty board before any game", () => {
    expect(edgesInSvg(renderBoard(vm(null)))).toEqual([]);
  });
});

describe("status rendering", () => {
  it("prompts the human on their turn", () => {
    const html = renderStatus(vm(stateOf(3, [[0, 1]])));
    expect(html).toContain("Your move");
  });

  it("shows the win banner when the human finished it", () => {
    const state = stateOf(2, [], { finished: true, winner: "human" });
    const html = renderStatus(vm(state));
    expect(html).toContain("You win!");
    expect(html).toContain('data-winner="human"');
  });

  it("shows the engine banner when the engine made the last move", () => {
    const state = stateOf(2, [], { finished: true, winner: "engine" });
    expect(renderStatus(vm(state))).toContain("Engine wins!");
  });

  it("escapes error text", () => {
    const html = renderStatus(vm(null, { error: "<b>boom</b>" }));
    expect(html).toContain("&lt;b&gt;boom&lt;/b&gt;");
  });
});
