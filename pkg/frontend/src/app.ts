import { GameApi, ApiError } from "./api.js";
import { contractPositions, forceLayout } from "./layout.js";
import { edgesInSvg, renderBoard, renderStatus, type ViewModel } from "./render.js";
import type { GameState, GraphSpec, MoveAction, MoveInfo, Point } from "./types.js";

function hashString(text: string): number {
  let h = 2166136261;
  for (let i = 0; i < text.length; i++) {
    h = Math.imul(h ^ text.charCodeAt(i), 16777619);
  }
  return h >>> 0;
}

/** Session controller: owns the game state, the board geometry and the
 * hint overlay.  The DOM layer only forwards clicks and re-renders. */
export class GameApp {
  state: GameState | null = null;
  positions: Point[] = [];
  selected: [number, number] | null = null;
  hintsOn = false;
  hints: MoveInfo[] | null = null;
  error: string | null = null;
  busy = false;
  private seed = 1;
  private inFlight = false; // at most one mutation on the wire

  constructor(
    private api: GameApi,
    private onChange: () => void = () => {},
  ) {}

  viewModel(): ViewModel {
    return {
      state: this.state,
      positions: this.positions,
      selected: this.selected,
      hints: this.hintsOn ? this.hints : null,
      humanLabel: this.state?.engine_side === "none" ? "" : "human",
      error: this.error,
      busy: this.busy,
    };
  }

  boardSvg(): string {
    return renderBoard(this.viewModel());
  }

  statusHtml(): string {
    return renderStatus(this.viewModel());
  }

  /** The invariant every interaction must keep: what is drawn is what
   * the server says. */
  boardMatchesState(): boolean {
    if (!this.state) return true;
    const drawn = edgesInSvg(this.boardSvg());
    const real = this.state.edges
      .map(([u, v]) => (u < v ? `${u}-${v}` : `${v}-${u}`))
      .sort();
    return JSON.stringify(drawn) === JSON.stringify(real);
  }

  async newGame(spec: GraphSpec, engineSide: string, seed?: number): Promise<void> {
    this.error = null;
    this.busy = true;
    this.onChange();
    try {
      const created = await this.api.newGame(spec, engineSide);
      this.state = created.state;
      // per-session deterministic: the same session id always lays out
      // the same board
      this.seed = seed ?? hashString(created.id);
      this.positions = forceLayout(this.state.n, this.state.edges, this.seed);
      this.selected = null;
      this.hints = null;
      if (this.hintsOn) await this.refreshHints();
      if (this.state.to_move === "engine") await this.engineReply();
    } catch (err) {
      this.fail(err);
    } finally {
      this.busy = false;
      this.onChange();
    }
  }

  selectEdge(u: number, v: number): void {
    if (!this.state || this.state.finished) return;
    if (this.state.engine_side !== "none" && this.state.to_move !== "human") return;
    const key = u < v ? [u, v] : [v, u];
    this.selected = [key[0], key[1]];
    this.onChange();
  }

  async chooseAction(action: MoveAction): Promise<void> {
    if (!this.state || !this.selected || this.inFlight) return;
    const [u, v] = this.selected;
    this.inFlight = true;
    this.busy = true;
    this.error = null;
    this.onChange();
    try {
      const next = await this.api.move(this.state.id, [u, v], action);
      this.applyTransition(next, action, [u, v]);
      this.selected = null;
      if (this.hintsOn && !next.finished) await this.refreshHints();
      if (!next.finished && next.to_move === "engine") await this.engineReply();
    } catch (err) {
      this.fail(err);
    } finally {
      this.busy = false;
      this.inFlight = false;
      this.onChange();
    }
  }

  private async engineReply(): Promise<void> {
    if (!this.state || this.state.finished) return;
    const before = this.state.history.length;
    const next = await this.api.engineMove(this.state.id);
    const step = next.history[before];
    this.applyTransition(next, step.action, step.edge);
    if (this.hintsOn && !next.finished) await this.refreshHints();
  }

  /** Contractions merge the two endpoint positions at their midpoint;
   * deletions keep every vertex where it was. */
  private applyTransition(
    next: GameState,
    action: MoveAction,
    edge: [number, number],
  ): void {
    if (action === "contract") {
      this.positions = contractPositions(this.positions, edge[0], edge[1]);
    }
    this.state = next;
  }

  async toggleHints(): Promise<void> {
    this.hintsOn = !this.hintsOn;
    if (this.hintsOn && this.state && !this.state.finished) {
      await this.refreshHints();
    }
    this.onChange();
  }

  private async refreshHints(): Promise<void> {
    if (!this.state) return;
    try {
      const reply = await this.api.moves(this.state.id);
      this.hints = reply.moves;
      if (this.hints.some((m) => m.value === undefined)) {
        this.hints = null; // server runs with hints disabled
      }
    } catch (err) {
      this.fail(err);
    }
  }

  /** Re-fetch the authoritative state (used by tests and the retry
   * button; rendering from it must reproduce the board). */
  async resync(): Promise<void> {
    if (!this.state) return;
    try {
      this.state = await this.api.state(this.state.id);
    } catch (err) {
      this.fail(err);
    }
    this.onChange();
  }

  private fail(err: unknown): void {
    this.error =
      err instanceof ApiError
        ? err.status === 422
          ? `Illegal move: ${err.message}`
          : err.status === 409
            ? `Not your turn: ${err.message}`
            : err.message
        : String(err);
  }
}
