import { beforeEach, describe, expect, it, vi } from "vitest";
import { GameApi } from "../src/api.js";
import { GameApp } from "../src/app.js";
import type { GameState } from "../src/types.js";

/** Minimal in-memory stand-in for the play service. */
class FakeServer {
  state: GameState = {
    id: "fake",
    n: 2,
    edges: [[0, 1]],
    to_move: "human",
    finished: false,
    winner: null,
    engine_side: "second",
    history: [],
  };

  fetch = vi.fn(async (url: string, init?: RequestInit) => {
    const body = init?.body ? JSON.parse(init.body as string) : null;
    if (url.endsWith("/games") && init?.method === "POST") {
      return json({ id: "fake", state: this.state });
    }
    if (url.endsWith("/moves")) {
      return json({
        to_move: this.state.to_move,
        moves: [
          { edge: [0, 1], action: "delete", value: 0 },
          { edge: [0, 1], action: "contract", value: 0 },
        ],
      });
    }
    if (url.endsWith("/move") && body) {
      if (!this.state.edges.length) {
        return json({ detail: "game is finished" }, 409);
      }
      this.state = {
        ...this.state,
        n: body.action === "contract" ? this.state.n - 1 : this.state.n,
        edges: [],
        finished: true,
        winner: this.state.to_move,
        history: [...this.state.history, { ...body, by: this.state.to_move }],
      };
      return json(this.state);
    }
    if (url.includes("/games/fake")) {
      return json(this.state);
    }
    return json({ detail: "not found" }, 404);
  });
}

function json(data: unknown, status = 200): Response {
  return new Response(JSON.stringify(data), {
    status,
    headers: { "content-type": "application/json" },
  });
}

describe("game controller", () => {
  let server: FakeServer;

  beforeEach(() => {
    server = new FakeServer();
    vi.stubGlobal("fetch", server.fetch);
  });

  it("plays a full single-edge game", async () => {
    const app = new GameApp(new GameApi("http://test"));
    await app.newGame({ family: "path", args: [1] }, "second", 3);
    expect(app.boardMatchesState()).toBe(true);

    app.selectEdge(0, 1);
    expect(app.selected).toEqual([0, 1]);
    await app.chooseAction("delete");

    expect(app.state?.finished).toBe(true);
    expect(app.state?.winner).toBe("human");
    expect(app.statusHtml()).toContain("You win!");
    expect(app.boardMatchesState()).toBe(true);
  });

  it("shows hint values after toggling", async () => {
    const app = new GameApp(new GameApi("http://test"));
    await app.newGame({ family: "path", args: [1] }, "second", 3);
    await app.toggleHints();
    expect(app.boardSvg()).toContain(">d0 c0<");
  });

  it("contraction drops one rendered vertex at the midpoint", async () => {
    const app = new GameApp(new GameApi("http://test"));
    await app.newGame({ family: "path", args: [1] }, "second", 3);
    const before = app.positions.map((p) => ({ ...p }));
    app.selectEdge(0, 1);
    await app.chooseAction("contract");
    expect(app.positions).toHaveLength(1);
    expect(app.positions[0].x).toBeCloseTo((before[0].x + before[1].x) / 2);
    expect(app.positions[0].y).toBeCloseTo((before[0].y + before[1].y) / 2);
  });

  it("shows an error banner when the API is unreachable", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(async () => {
        throw new TypeError("fetch failed");
      }),
    );
    const app = new GameApp(new GameApi("http://nowhere"));
    await app.newGame({ family: "cycle", args: [4] }, "second", 1);
    expect(app.error).toContain("cannot reach the game server");
    expect(app.statusHtml()).toContain("banner error");
  });

  it("surfaces server rejections as readable errors", async () => {
    const app = new GameApp(new GameApi("http://test"));
    await app.newGame({ family: "path", args: [1] }, "second", 3);
    app.selectEdge(0, 1);
    await app.chooseAction("delete");
    // game over; force another move attempt against the dead session
    app.state!.finished = false;
    app.state!.edges = [[0, 1]];
    app.selectEdge(0, 1);
    await app.chooseAction("delete");
    expect(app.error).toContain("Not your turn");
    expect(app.statusHtml()).toContain("banner error");
  });
});
