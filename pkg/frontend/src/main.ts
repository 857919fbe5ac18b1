import { GameApi } from "./api.js";
import { GameApp } from "./app.js";
import type { GraphSpec } from "./types.js";

const PRESETS: Record<string, (a: number, b: number) => GraphSpec> = {
  cycle: (a) => ({ family: "cycle", args: [a] }),
  complete: (a) => ({ family: "complete", args: [a] }),
  complete_bipartite: (a, b) => ({ family: "complete_bipartite", args: [a, b] }),
  fused_cycle: (a, b) => ({ family: "fused_cycle", args: [a, b] }),
  petersen: () => ({ family: "petersen", args: [] }),
};

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

export function boot(baseUrl: string): GameApp {
  const app = new GameApp(new GameApi(baseUrl), render);
  const board = el<HTMLDivElement>("board");
  const status = el<HTMLDivElement>("status");
  const actions = el<HTMLDivElement>("actions");

  function render(): void {
    board.innerHTML = app.boardSvg();
    status.innerHTML = app.statusHtml();
    actions.style.visibility = app.selected ? "visible" : "hidden";
    el<HTMLSpanElement>("chosen-edge").textContent = app.selected
      ? `${app.selected[0]}–${app.selected[1]}`
      : "";
  }

  board.addEventListener("click", (event) => {
    const target = event.target as Element;
    const key = target.getAttribute && target.getAttribute("data-edge");
    if (!key) return;
    const [u, v] = key.split("-").map(Number);
    app.selectEdge(u, v);
  });
  el<HTMLButtonElement>("btn-delete").addEventListener("click", () => {
    void app.chooseAction("delete");
  });
  el<HTMLButtonElement>("btn-contract").addEventListener("click", () => {
    void app.chooseAction("contract");
  });
  el<HTMLInputElement>("hints").addEventListener("change", () => {
    void app.toggleHints();
  });
  el<HTMLSelectElement>("family").addEventListener("change", () => {
    const family = el<HTMLSelectElement>("family").value;
    el<HTMLInputElement>("param-b").style.display =
      family === "complete_bipartite" || family === "fused_cycle" ? "" : "none";
    el<HTMLInputElement>("param-a").style.display =
      family === "petersen" ? "none" : "";
  });
  el<HTMLFormElement>("new-game").addEventListener("submit", (event) => {
    event.preventDefault();
    const family = el<HTMLSelectElement>("family").value;
    const a = Number(el<HTMLInputElement>("param-a").value) || 5;
    const b = Number(el<HTMLInputElement>("param-b").value) || 5;
    const side = el<HTMLSelectElement>("engine-side").value;
    void app.newGame(PRESETS[family](a, b), side);
  });

  render();
  return app;
}

declare global {
  interface Window {
    nimorsApp?: GameApp;
  }
}

if (typeof document !== "undefined" && document.getElementById("board")) {
  const base =
    new URLSearchParams(location.search).get("api") ?? "http://127.0.0.1:8000";
  window.nimorsApp = boot(base);
}
