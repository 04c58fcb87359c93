// Wire types for the play service. Field names are frozen by the service;
// see the repository README for the schema.

export interface WireMove {
  index: number; // 1-based pile index
  amount: number;
}

export interface WireHistoryEntry extends WireMove {
  mover: "human" | "engine";
}

export interface WireAdvice {
  status: "winning" | "losing" | "terminal";
  move?: WireMove;
  fallback?: WireMove;
  target_sg?: number;
}

export interface WireSession {
  id: string;
  position: number[];
  initial: number[];
  to_move: "human" | "engine" | null;
  status: "ongoing" | "finished";
  winner: "human" | "engine" | null;
  history: WireHistoryEntry[];
  legal_moves: WireMove[];
  sg?: number;
  hint?: WireAdvice;
}

export interface WireError {
  code: string;
  message: string;
}
