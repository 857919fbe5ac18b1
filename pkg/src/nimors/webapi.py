"""HTTP play service.

Game sessions live in memory, keyed by unguessable ids.  State bodies
are JSON with stable field names (documented in the README):

  state = {id, n, edges: [[u,v],...], to_move, finished, winner,
           engine_side, history: [{edge, action, by}, ...]}

Endpoints:
  POST   /games                  {graph: <spec>, engine_side, hints?}
  GET    /games/{id}             state
  GET    /games/{id}/moves       legal moves, each with the value of the
                                 position it reaches (omitted with hints off)
  POST   /games/{id}/move        {edge: [u,v], action: "delete"|"contract"}
  POST   /games/{id}/engine-move engine plays its best move
  DELETE /games/{id}

A graph spec is one of {"g6": text}, {"n": int, "edges": [[u,v],...]},
or {"family": name, "args": [..]} with families cycle, path, complete,
complete_bipartite, fused_cycle, petersen.
"""

from __future__ import annotations

import secrets
import threading
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from . import families, graph6
from .engine import MemoTable, best_move, nim_value
from .graph import Action, Graph, Move


FAMILY_BUILDERS = {
    "cycle": families.cycle_graph,
    "path": families.path_graph,
    "complete": families.complete_graph,
    "complete_bipartite": families.complete_bipartite_graph,
    "fused_cycle": families.fused_cycle_graph,
    "petersen": families.petersen_graph,
}


def build_graph_spec(spec: dict) -> Graph:
    """Resolve a graph spec object to a Graph; ValueError when invalid."""
    if not isinstance(spec, dict):
        raise ValueError("graph spec must be an object")
    if "g6" in spec:
        return graph6.decode(spec["g6"])
    if "family" in spec:
        name = spec["family"]
        if name not in FAMILY_BUILDERS:
            raise ValueError(f"unknown family {name!r}")
        args = [int(a) for a in spec.get("args", [])]
        return FAMILY_BUILDERS[name](*args)
    if "edges" in spec:
        edges = [tuple(e) for e in spec["edges"]]
        n = int(spec.get("n", max((max(e) for e in edges), default=-1) + 1))
        return Graph(n, edges)
    raise ValueError("graph spec needs one of g6 / family / edges")


@dataclass
class GameSession:
    id: str
    initial: Graph
    current: Graph
    engine_side: str  # "first" | "second" | "none"
    to_move: str      # "human" | "engine" | "a" | "b"
    history: list[dict] = field(default_factory=list)
    finished: bool = False
    winner: str | None = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    def next_player(self) -> str:
        if self.engine_side == "none":
            return "b" if self.to_move == "a" else "a"
        return "engine" if self.to_move == "human" else "human"

    def state(self) -> dict:
        return {
            "id": self.id,
            "n": self.current.n,
            "edges": [[u, v] for u, v in self.current.edges()],
            "to_move": self.to_move,
            "finished": self.finished,
            "winner": self.winner,
            "engine_side": self.engine_side,
            "history": self.history,
        }


class NewGameRequest(BaseModel):
    graph: dict
    engine_side: str = "second"


class MoveRequest(BaseModel):
    edge: list[int]
    action: str


def create_app(memo: MemoTable | None = None, hints: bool = True) -> FastAPI:
    app = FastAPI(title="nimors play service")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    if memo is None:
        memo = MemoTable()
    sessions: dict[str, GameSession] = {}
    app.state.sessions = sessions
    app.state.memo = memo
    hints_enabled = hints

    def get_session(game_id: str) -> GameSession:
        session = sessions.get(game_id)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown game id")
        return session

    def apply_move(session: GameSession, move: Move, by: str) -> None:
        session.current = session.current.apply(move)
        session.history.append(
            {
                "edge": [move.edge[0], move.edge[1]],
                "action": "delete" if move.action is Action.DELETE else "contract",
                "by": by,
            }
        )
        if session.current.m == 0:
            session.finished = True
            session.winner = by
        else:
            session.to_move = session.next_player()

    @app.post("/games")
    def create_game(body: NewGameRequest):
        if body.engine_side not in ("first", "second", "none"):
            raise HTTPException(status_code=422, detail="engine_side must be first/second/none")
        try:
            g = build_graph_spec(body.graph)
        except (ValueError, TypeError, graph6.MalformedGraph6Error) as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        if body.engine_side == "none":
            to_move = "a"
        elif body.engine_side == "first":
            to_move = "engine"
        else:
            to_move = "human"
        session = GameSession(
            id=secrets.token_urlsafe(9),
            initial=g,
            current=g,
            engine_side=body.engine_side,
            to_move=to_move,
            finished=g.m == 0,
        )
        sessions[session.id] = session
        return {"id": session.id, "state": session.state(), "hints": hints_enabled}

    @app.get("/games/{game_id}")
    def get_state(game_id: str):
        return get_session(game_id).state()

    @app.get("/games/{game_id}/moves")
    def legal_moves(game_id: str):
        session = get_session(game_id)
        with session.lock:
            moves = []
            for mv, child in session.current.options():
                entry = {
                    "edge": [mv.edge[0], mv.edge[1]],
                    "action": "delete" if mv.action is Action.DELETE else "contract",
                }
                if hints_enabled:
                    entry["value"] = nim_value(child, memo)
                moves.append(entry)
            return {"to_move": session.to_move, "moves": moves}

    @app.post("/games/{game_id}/move")
    def play_move(game_id: str, body: MoveRequest):
        session = get_session(game_id)
        with session.lock:
            if session.finished:
                raise HTTPException(status_code=409, detail="game is finished")
            if session.to_move == "engine":
                raise HTTPException(status_code=409, detail="engine to move")
            if body.action not in ("delete", "contract"):
                raise HTTPException(status_code=422, detail="action must be delete or contract")
            if len(body.edge) != 2:
                raise HTTPException(status_code=422, detail="edge must be [u, v]")
            u, v = sorted(int(x) for x in body.edge)
            if not session.current.has_edge(u, v):
                raise HTTPException(status_code=422, detail=f"no edge ({u},{v})")
            action = Action.DELETE if body.action == "delete" else Action.CONTRACT
            apply_move(session, Move((u, v), action), by=session.to_move)
            return session.state()

    @app.post("/games/{game_id}/engine-move")
    def engine_move(game_id: str):
        session = get_session(game_id)
        with session.lock:
            if session.finished:
                raise HTTPException(status_code=409, detail="game is finished")
            if session.to_move != "engine":
                raise HTTPException(status_code=409, detail="not the engine's turn")
            move = best_move(session.current, memo)
            apply_move(session, move, by="engine")
            return session.state()

    @app.delete("/games/{game_id}", status_code=204)
    def delete_game(game_id: str):
        get_session(game_id)
        del sessions[game_id]

    return app
