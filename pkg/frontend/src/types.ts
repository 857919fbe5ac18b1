export type MoveAction = "delete" | "contract";

export interface HistoryStep {
  edge: [number, number];
  action: MoveAction;
  by: string;
}

export interface GameState {
  id: string;
  n: number;
  edges: [number, number][];
  to_move: string;
  finished: boolean;
  winner: string | null;
  engine_side: string;
  history: HistoryStep[];
}

export interface MoveInfo {
  edge: [number, number];
  action: MoveAction;
  value?: number;
}

export type GraphSpec =
  | { g6: string }
  | { n: number; edges: [number, number][] }
  | { family: string; args: number[] };

export interface Point {
  x: number;
  y: number;
}
