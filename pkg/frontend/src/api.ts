// Thin fetch client for the sdnim service. Every non-2xx response carries
// a {code, message} body, surfaced here as ApiError.

import type {
  AdviceJson,
  ApiErrorBody,
  ClassifyResponse,
  LegalMoveJson,
} from './types.js';

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.code = body.code;
    this.status = status;
  }
}

async function post<T>(base: string, path: string, payload: unknown): Promise<T> {
  const resp = await fetch(base + path, {
    method: 'POST',
    headers: { 'content-type': 'application/json' },
    body: JSON.stringify(payload),
  });
  if (!resp.ok) {
    const body = (await resp.json()) as ApiErrorBody;
    throw new ApiError(resp.status, body);
  }
  return (await resp.json()) as T;
}

export class Client {
  constructor(private readonly base: string = '') {}

  async health(): Promise<boolean> {
    try {
      const resp = await fetch(this.base + '/api/health');
      return resp.ok;
    } catch {
      return false;
    }
  }

  async classify(piles: number[]): Promise<ClassifyResponse> {
    return post(this.base, '/api/classify', { piles });
  }

  async moves(piles: number[]): Promise<LegalMoveJson[]> {
    const body = await post<{ moves: LegalMoveJson[] }>(this.base, '/api/moves', { piles });
    return body.moves;
  }

  async engineMove(piles: number[], budget?: number): Promise<AdviceJson> {
    const payload = budget === undefined ? { piles } : { piles, budget };
    const body = await post<{ advice: AdviceJson }>(this.base, '/api/engine-move', payload);
    return body.advice;
  }
}
