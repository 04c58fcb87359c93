import { ApiError, GameClient } from "./api.js";
import type { WireMove, WireSession } from "./types.js";
import { describeHint, parsePiles, toGameView } from "./view.js";

// One in-flight request per session: every control is disabled while a
// request is out, so the UI can never race the engine's reply.

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

const apiInput = $<HTMLInputElement>("api-url");
const pilesInput = $<HTMLInputElement>("piles");
const engineFirstInput = $<HTMLInputElement>("engine-first");
const startButton = $<HTMLButtonElement>("start");
const setupError = $<HTMLElement>("setup-error");
const gameSection = $<HTMLElement>("game");
const bannerEl = $<HTMLElement>("banner");
const pilesEl = $<HTMLElement>("board");
const movesEl = $<HTMLElement>("moves");
const historyEl = $<HTMLElement>("history");
const hintButton = $<HTMLButtonElement>("hint");
const hintEl = $<HTMLElement>("hint-text");

let client = new GameClient();
let sessionId: string | null = null;
let lastSession: WireSession | null = null;
let busy = false;

const params = new URLSearchParams(window.location.search);
apiInput.value = params.get("api") ?? "http://127.0.0.1:8000";

function setBusy(value: boolean): void {
  busy = value;
  startButton.disabled = value;
  hintButton.disabled = value || sessionId === null;
  for (const button of movesEl.querySelectorAll("button")) {
    button.disabled = value;
  }
}

function render(session: WireSession): void {
  lastSession = session;
  sessionId = session.id;
  const view = toGameView(session);

  gameSection.hidden = false;
  bannerEl.textContent = view.banner;
  bannerEl.className = view.finished ? "banner finished" : "banner";

  pilesEl.replaceChildren(
    ...view.piles.map((count, i) => {
      const pile = document.createElement("div");
      pile.className = "pile";
      pile.innerHTML = `<span class="pile-label">pile ${i + 1}</span><span class="pile-count">${count}</span>`;
      return pile;
    }),
  );

  movesEl.replaceChildren(
    ...view.selectableMoves.map((move) => {
      const button = document.createElement("button");
      button.textContent = `take ${move.amount} from pile ${move.index}`;
      button.dataset.index = String(move.index);
      button.dataset.amount = String(move.amount);
      button.addEventListener("click", () => void play(move));
      return button;
    }),
  );

  historyEl.replaceChildren(
    ...view.historyLines.map((line) => {
      const item = document.createElement("li");
      item.textContent = line;
      return item;
    }),
  );

  hintEl.textContent = "";
  hintButton.disabled = view.finished;
}

function showError(err: unknown): void {
  const message =
    err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
  setupError.textContent = message;
}

async function start(): Promise<void> {
  if (busy) return;
  setupError.textContent = "";
  let piles: number[];
  try {
    piles = parsePiles(pilesInput.value);
  } catch (err) {
    showError(err);
    return;
  }
  client = new GameClient(apiInput.value.replace(/\/$/, ""));
  setBusy(true);
  try {
    render(await client.createSession(piles, !engineFirstInput.checked));
  } catch (err) {
    showError(err);
  } finally {
    setBusy(false);
  }
}

async function play(move: WireMove): Promise<void> {
  if (busy || sessionId === null) return;
  setBusy(true);
  try {
    render(await client.playMove(sessionId, move));
  } catch (err) {
    showError(err);
    if (sessionId) render(await client.getSession(sessionId));
  } finally {
    setBusy(false);
  }
}

async function showHint(): Promise<void> {
  if (busy || sessionId === null || lastSession?.status !== "ongoing") return;
  setBusy(true);
  try {
    const advice = await client.hint(sessionId);
    hintEl.textContent = describeHint(advice);
    if (advice.move) {
      const selector = `button[data-index="${advice.move.index}"][data-amount="${advice.move.amount}"]`;
      movesEl.querySelector(selector)?.classList.add("hinted");
    }
  } catch (err) {
    showError(err);
  } finally {
    setBusy(false);
  }
}

startButton.addEventListener("click", () => void start());
hintButton.addEventListener("click", () => void showHint());
