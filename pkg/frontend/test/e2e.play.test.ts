// End-to-end: drive the real HTTP service through the client-side game
// machine. The engine opens from <310,208,304,432> and must play the
// rule-cascade move, then beat a seeded random human in every run.

import { spawn, type ChildProcess } from 'node:child_process';
import { fileURLToPath } from 'node:url';
import path from 'node:path';
import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { Client } from '../src/api.js';
import {
  applyEngineAdvice,
  historyIsConsistent,
  newGame,
  submitHumanMove,
  withSelection,
} from '../src/state.js';
import type { GameState } from '../src/types.js';

const repoRoot = path.resolve(path.dirname(fileURLToPath(import.meta.url)), '..', '..');
const port = 8620 + (process.pid % 200);
const base = `http://127.0.0.1:${port}`;
const client = new Client(base);

let server: ChildProcess;

// Small deterministic PRNG for the scripted human.
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

beforeAll(async () => {
  server = spawn('python3', ['-m', 'sdnim.cli', 'serve', '--port', String(port)], {
    cwd: repoRoot,
    stdio: 'ignore',
  });
  const deadline = Date.now() + 30_000;
  while (Date.now() < deadline) {
    if (await client.health()) return;
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error('service did not come up');
}, 35_000);

afterAll(() => {
  server?.kill();
});

async function playHumanPly(state: GameState, rng: () => number): Promise<GameState> {
  const legal = await client.moves(state.piles);
  expect(legal.length).toBeGreaterThan(0);
  const pick = legal[Math.floor(rng() * legal.length)];
  const selected = withSelection(state, {
    deleteIndex: pick.move.delete_index,
    splitIndex: pick.move.split_index,
    amount: pick.move.left,
  });
  const result = submitHumanMove(selected, legal);
  expect(result.ok).toBe(true);
  if (!result.ok) throw new Error(result.error);
  return result.state;
}

describe('scripted browser session', () => {
  it('engine opens with the rule-cascade move and wins all 50 seeded runs', async () => {
    for (let seed = 0; seed < 50; seed += 1) {
      const rng = mulberry32(seed + 1);
      let state = newGame([310, 208, 304, 432], false);
      let engineMoves = 0;
      while (state.phase !== 'game_over') {
        if (state.phase === 'engine_turn') {
          const advice = await client.engineMove(state.piles);
          if (engineMoves === 0) {
            expect(advice.rule).toBe('3.2-b');
            expect(advice.claimed_class).toBe('P2');
            expect(advice.resulting).toEqual([294, 16, 304, 432]);
          }
          state = applyEngineAdvice(state, advice);
          engineMoves += 1;
        } else {
          state = await playHumanPly(state, rng);
        }
      }
      expect(historyIsConsistent(state)).toBe(true);
      const lastMover = state.history[state.history.length - 1].mover;
      expect(lastMover).toBe('engine');
    }
  }, 180_000);

  it('serves classification diagnostics for the opening position', async () => {
    const body = await client.classify([310, 208, 304, 432]);
    expect(body.outcome).toBe('N');
    if ('conditions' in body.report) {
      expect(body.report.conditions['2A']).toBe(false);
    } else {
      throw new Error('expected 4-pile diagnostics');
    }
  });
});
