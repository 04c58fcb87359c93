import type { WireAdvice, WireError, WireMove, WireSession } from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function parse<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let code = "http_error";
    let message = `${response.status} ${response.statusText}`;
    try {
      const body = (await response.json()) as WireError;
      if (body.code) {
        code = body.code;
        message = body.message;
      }
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, code, message);
  }
  return (await response.json()) as T;
}

/** Thin typed client for the play service. All game logic lives server
 * side; this class only moves JSON back and forth. */
export class GameClient {
  constructor(readonly baseUrl: string = "") {}

  async createSession(piles: number[], humanFirst: boolean): Promise<WireSession> {
    const response = await fetch(`${this.baseUrl}/sessions`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ piles, human_first: humanFirst }),
    });
    return parse<WireSession>(response);
  }

  async getSession(id: string): Promise<WireSession> {
    return parse<WireSession>(await fetch(`${this.baseUrl}/sessions/${id}`));
  }

  async playMove(id: string, move: WireMove): Promise<WireSession> {
    const response = await fetch(`${this.baseUrl}/sessions/${id}/moves`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ index: move.index, amount: move.amount }),
    });
    return parse<WireSession>(response);
  }

  async hint(id: string): Promise<WireAdvice> {
    return parse<WireAdvice>(await fetch(`${this.baseUrl}/sessions/${id}/hint`));
  }
}
