import type { GameState, GraphSpec, MoveAction, MoveInfo } from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  let resp: Response;
  try {
    resp = await fetch(url, init);
  } catch (err) {
    throw new ApiError(0, `cannot reach the game server (${String(err)})`);
  }
  if (resp.status === 204) return undefined as T;
  const body = await resp.json().catch(() => ({}));
  if (!resp.ok) {
    const detail = typeof body.detail === "string" ? body.detail : resp.statusText;
    throw new ApiError(resp.status, detail);
  }
  return body as T;
}

export class GameApi {
  constructor(public baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  newGame(graph: GraphSpec, engineSide: string): Promise<{ id: string; state: GameState }> {
    return request(this.url("/games"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ graph, engine_side: engineSide }),
    });
  }

  state(id: string): Promise<GameState> {
    return request(this.url(`/games/${id}`));
  }

  moves(id: string): Promise<{ to_move: string; moves: MoveInfo[] }> {
    return request(this.url(`/games/${id}/moves`));
  }

  move(id: string, edge: [number, number], action: MoveAction): Promise<GameState> {
    return request(this.url(`/games/${id}/move`), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ edge, action }),
    });
  }

  engineMove(id: string): Promise<GameState> {
    return request(this.url(`/games/${id}/engine-move`), { method: "POST" });
  }

  remove(id: string): Promise<void> {
    return request(this.url(`/games/${id}`), { method: "DELETE" });
  }
}
