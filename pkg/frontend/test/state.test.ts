import { describe, expect, it } from 'vitest';

import {
  allOnes,
  applyEngineAdvice,
  describeAdvice,
  deserialize,
  historyIsConsistent,
  loadGame,
  newGame,
  saveGame,
  serialize,
  submitHumanMove,
  undoPly,
  withSelection,
  STORAGE_KEY,
  type StringStore,
} from '../src/state.js';
import type { AdviceJson, GameState, LegalMoveJson } from '../src/types.js';

// Legal moves for <4,3> as the service reports them.
const MOVES_4_3: LegalMoveJson[] = [
  { move: { delete_index: 0, split_index: 1, left: 1, right: 2 }, resulting: [1, 2], outcome: 'N' },
  { move: { delete_index: 1, split_index: 0, left: 1, right: 3 }, resulting: [3, 1], outcome: 'P' },
  { move: { delete_index: 1, split_index: 0, left: 2, right: 2 }, resulting: [2, 2], outcome: 'N' },
];

const ENGINE_ADVICE: AdviceJson = {
  delete_index: 1,
  split_index: 0,
  left: 16,
  right: 294,
  resulting: [294, 16, 304, 432],
  rule: '3.2-b',
  claimed_class: 'P2',
};

class FakeStore implements StringStore {
  private map = new Map<string, string>();
  getItem(key: string) {
    return this.map.get(key) ?? null;
  }
  setItem(key: string, value: string) {
    this.map.set(key, value);
  }
  removeItem(key: string) {
    this.map.delete(key);
  }
}

describe('newGame', () => {
  it('gives the turn to the chosen side', () => {
    expect(newGame([4, 3], true).phase).toBe('human_turn');
    expect(newGame([4, 3], false).phase).toBe('engine_turn');
  });

  it('is over immediately on all ones', () => {
    expect(newGame([1, 1, 1, 1], true).phase).toBe('game_over');
    expect(allOnes([1, 1, 1, 1])).toBe(true);
  });

  it('rejects invalid piles', () => {
    expect(() => newGame([4], true)).toThrow();
    expect(() => newGame([0, 3], true)).toThrow();
    expect(() => newGame([1.5, 3], true)).toThrow();
  });
});

describe('submitHumanMove', () => {
  it('advances to the server-computed resulting position', () => {
    let state = newGame([4, 3], true);
    state = withSelection(state, { deleteIndex: 1, splitIndex: 0, amount: 1 });
    const result = submitHumanMove(state, MOVES_4_3);
    expect(result.ok).toBe(true);
    if (result.ok) {
      expect(result.state.piles).toEqual([3, 1]);
      expect(result.state.phase).toBe('engine_turn');
      expect(result.state.history).toHaveLength(1);
      expect(result.state.history[0].mover).toBe('human');
      expect(historyIsConsistent(result.state)).toBe(true);
    }
  });

  it('matches the amount against either split part', () => {
    let state = newGame([4, 3], true);
    state = withSelection(state, { deleteIndex: 1, splitIndex: 0, amount: 3 });
    const result = submitHumanMove(state, MOVES_4_3);
    expect(result.ok).toBe(true);
    if (result.ok) expect(result.state.piles).toEqual([3, 1]);
  });

  it('rejects an illegal selection without changing state', () => {
    const base = newGame([4, 3], true);
    const picked = withSelection(base, { deleteIndex: 1, splitIndex: 0, amount: 0 });
    const before = JSON.stringify(picked);
    const result = submitHumanMove(picked, MOVES_4_3);
    expect(result.ok).toBe(false);
    expect(JSON.stringify(picked)).toBe(before);
  });

  it('rejects an incomplete selection', () => {
    const state = withSelection(newGame([4, 3], true), { deleteIndex: 0 });
    const result = submitHumanMove(state, MOVES_4_3);
    expect(result.ok).toBe(false);
    if (!result.ok) expect(result.error).toMatch(/pick/);
  });

  it('ends the game when the move reaches all ones', () => {
    let state = newGame([1, 1, 1, 2], true);
    state = withSelection(state, { deleteIndex: 0, splitIndex: 3, amount: 1 });
    const legal: LegalMoveJson[] = [
      {
        move: { delete_index: 0, split_index: 3, left: 1, right: 1 },
        resulting: [1, 1, 1, 1],
        outcome: 'P',
      },
    ];
    const result = submitHumanMove(state, legal);
    expect(result.ok && result.state.phase).toBe('game_over');
  });
});

describe('applyEngineAdvice', () => {
  it('applies the advice and labels the ply', () => {
    const state = applyEngineAdvice(newGame([310, 208, 304, 432], false), ENGINE_ADVICE);
    expect(state.piles).toEqual([294, 16, 304, 432]);
    expect(state.phase).toBe('human_turn');
    expect(state.history[0].label).toBe('3.2-b: condition (2)');
    expect(historyIsConsistent(state)).toBe(true);
  });

  it('refuses to move out of turn', () => {
    expect(() => applyEngineAdvice(newGame([4, 3], true), ENGINE_ADVICE)).toThrow();
  });
});

describe('describeAdvice', () => {
  it('maps claimed classes to condition labels', () => {
    expect(describeAdvice(ENGINE_ADVICE)).toBe('3.2-b: condition (2)');
    expect(describeAdvice({ ...ENGINE_ADVICE, rule: 'search', claimed_class: null })).toBe('search');
    expect(describeAdvice({ ...ENGINE_ADVICE, rule: 'star-split', claimed_class: 'STAR' })).toBe(
      'star-split: equal valuations',
    );
  });
});

describe('undoPly', () => {
  it('restores the prior state byte for byte', () => {
    const before = newGame([4, 3], true);
    const picked = withSelection(before, { deleteIndex: 1, splitIndex: 0, amount: 1 });
    const result = submitHumanMove(picked, MOVES_4_3);
    expect(result.ok).toBe(true);
    if (result.ok) {
      const undone = undoPly(result.state);
      expect(JSON.stringify(undone)).toBe(JSON.stringify(before));
    }
  });

  it('is a no-op with no history', () => {
    const state = newGame([4, 3], true);
    expect(undoPly(state)).toBe(state);
  });

  it('returns the turn to whoever moved', () => {
    const afterEngine = applyEngineAdvice(newGame([310, 208, 304, 432], false), ENGINE_ADVICE);
    expect(undoPly(afterEngine).phase).toBe('engine_turn');
  });
});

describe('serialization', () => {
  it('round-trips through a store', () => {
    const store = new FakeStore();
    let state = newGame([4, 3], true);
    state = withSelection(state, { deleteIndex: 1 });
    saveGame(store, state);
    expect(store.getItem(STORAGE_KEY)).not.toBeNull();
    const loaded = loadGame(store);
    expect(JSON.stringify(loaded)).toBe(JSON.stringify(state));
  });

  it('rejects corrupt payloads', () => {
    expect(deserialize('nonsense')).toBeNull();
    expect(deserialize('{"version":99}')).toBeNull();
    const inconsistent: GameState = {
      piles: [5, 5],
      history: [
        {
          position: [4, 3],
          move: { delete_index: 1, split_index: 0, left: 1, right: 3 },
          mover: 'human',
          resulting: [3, 1],
        },
      ],
      phase: 'engine_turn',
      selection: { deleteIndex: null, splitIndex: null, amount: null },
    };
    expect(deserialize(serialize(inconsistent))).toBeNull();
  });
});
