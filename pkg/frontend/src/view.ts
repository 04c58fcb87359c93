import type { WireAdvice, WireHistoryEntry, WireSession } from "./types.js";

/** Everything the page renders, derived purely from the last service
 * response. The client never invents moves: only `selectableMoves`
 * (server-sourced) can be played. */
export interface GameView {
  piles: number[];
  selectableMoves: { index: number; amount: number }[];
  historyLines: string[];
  banner: string;
  finished: boolean;
}

export function describeEntry(entry: WireHistoryEntry): string {
  const who = entry.mover === "human" ? "you" : "engine";
  return `${who} took ${entry.amount} from pile ${entry.index}`;
}

export function bannerFor(session: WireSession): string {
  if (session.status === "finished") {
    return session.winner === "human"
      ? "you win — you made the last move"
      : "engine wins — it made the last move";
  }
  return "your turn — pick a move";
}

export function toGameView(session: WireSession): GameView {
  const finished = session.status === "finished";
  return {
    piles: [...session.position],
    selectableMoves: finished
      ? []
      : session.legal_moves.map((m) => ({ index: m.index, amount: m.amount })),
    historyLines: session.history.map(describeEntry),
    banner: bannerFor(session),
    finished,
  };
}

export function describeHint(advice: WireAdvice): string {
  switch (advice.status) {
    case "winning":
      return advice.move
        ? `winning: take ${advice.move.amount} from pile ${advice.move.index}`
        : "winning";
    case "losing":
      return advice.fallback
        ? `no winning move exists; e.g. take ${advice.fallback.amount} from pile ${advice.fallback.index}`
        : "no winning move exists";
    default:
      return "the game is over";
  }
}

export function parsePiles(text: string): number[] {
  const parts = text.trim().split(/[\s,]+/).filter((p) => p.length > 0);
  const piles = parts.map((p) => Number(p));
  if (piles.length === 0 || piles.some((n) => !Number.isInteger(n) || n < 0)) {
    throw new Error("piles must be a space-separated list of nonnegative integers");
  }
  return piles;
}
