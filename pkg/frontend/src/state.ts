// Client-side game state machine. All transitions are pure; positions are
// only ever advanced with server-provided `resulting` arrays, never
// computed locally, so the client cannot drift from the rules engine.

import type {
  AdviceJson,
  GameState,
  HistoryEntry,
  LegalMoveJson,
  MoveJson,
  Selection,
} from './types.js';

export const STORAGE_KEY = 'sdnim.game.v1';

export function allOnes(piles: number[]): boolean {
  return piles.every((p) => p === 1);
}

export function emptySelection(): Selection {
  return { deleteIndex: null, splitIndex: null, amount: null };
}

export function newGame(piles: number[], humanFirst: boolean): GameState {
  if (piles.length < 2 || piles.some((p) => !Number.isInteger(p) || p < 1)) {
    throw new Error('a position needs at least 2 piles of at least 1 stone');
  }
  return {
    piles: [...piles],
    history: [],
    phase: allOnes(piles) ? 'game_over' : humanFirst ? 'human_turn' : 'engine_turn',
    selection: emptySelection(),
  };
}

export function withSelection(state: GameState, patch: Partial<Selection>): GameState {
  if (state.phase !== 'human_turn') return state;
  return { ...state, selection: { ...state.selection, ...patch } };
}

export type SubmitResult =
  | { ok: true; state: GameState }
  | { ok: false; error: string };

function matchesSelection(move: MoveJson, sel: Selection): boolean {
  return (
    move.delete_index === sel.deleteIndex &&
    move.split_index === sel.splitIndex &&
    (move.left === sel.amount || move.right === sel.amount)
  );
}

/** Apply the human's selection if it names one of the served legal moves. */
export function submitHumanMove(state: GameState, legal: LegalMoveJson[]): SubmitResult {
  if (state.phase !== 'human_turn') {
    return { ok: false, error: 'not your turn' };
  }
  const sel = state.selection;
  if (sel.deleteIndex === null || sel.splitIndex === null || sel.amount === null) {
    return { ok: false, error: 'pick a pile to delete, a pile to split, and an amount' };
  }
  const found = legal.find((entry) => matchesSelection(entry.move, sel));
  if (!found) {
    return { ok: false, error: 'that is not a legal move here' };
  }
  const entry: HistoryEntry = {
    position: [...state.piles],
    move: found.move,
    mover: 'human',
    resulting: [...found.resulting],
  };
  return {
    ok: true,
    state: {
      piles: [...found.resulting],
      history: [...state.history, entry],
      phase: allOnes(found.resulting) ? 'game_over' : 'engine_turn',
      selection: emptySelection(),
    },
  };
}

export function describeAdvice(advice: AdviceJson): string {
  const byClass: Record<string, string> = {
    P1: 'condition (1)',
    P2: 'condition (2)',
    P3: 'condition (3)',
    P4: 'condition (4)',
    P5: 'condition (5)',
    STAR: 'equal valuations',
    BOTH_ODD: 'both piles odd',
  };
  const target = advice.claimed_class ? byClass[advice.claimed_class] ?? advice.claimed_class : null;
  return target ? `${advice.rule}: ${target}` : advice.rule;
}

export function applyEngineAdvice(state: GameState, advice: AdviceJson): GameState {
  if (state.phase !== 'engine_turn') {
    throw new Error(`engine cannot move during ${state.phase}`);
  }
  const move: MoveJson = {
    delete_index: advice.delete_index,
    split_index: advice.split_index,
    left: advice.left,
    right: advice.right,
  };
  const entry: HistoryEntry = {
    position: [...state.piles],
    move,
    mover: 'engine',
    resulting: [...advice.resulting],
    label: describeAdvice(advice),
  };
  return {
    piles: [...advice.resulting],
    history: [...state.history, entry],
    phase: allOnes(advice.resulting) ? 'game_over' : 'human_turn',
    selection: emptySelection(),
  };
}

/** Pop the last ply; the prior state (by value) comes back exactly. */
export function undoPly(state: GameState): GameState {
  const last = state.history[state.history.length - 1];
  if (!last) return state;
  return {
    piles: [...last.position],
    history: state.history.slice(0, -1),
    phase: `${last.mover}_turn`,
    selection: emptySelection(),
  };
}

/** History must chain: each entry's resulting is the next one's position,
 * and the last resulting is the current piles. */
export function historyIsConsistent(state: GameState): boolean {
  const same = (a: number[], b: number[]) =>
    a.length === b.length && a.every((v, i) => v === b[i]);
  for (let i = 0; i + 1 < state.history.length; i += 1) {
    if (!same(state.history[i].resulting, state.history[i + 1].position)) return false;
  }
  if (state.history.length > 0) {
    if (!same(state.history[state.history.length - 1].resulting, state.piles)) return false;
  }
  return (state.phase === 'game_over') === allOnes(state.piles);
}

export function serialize(state: GameState): string {
  return JSON.stringify({ version: 1, state });
}

export function deserialize(text: string): GameState | null {
  try {
    const parsed = JSON.parse(text) as { version?: number; state?: GameState };
    if (parsed.version !== 1 || !parsed.state) return null;
    const state = parsed.state;
    if (!Array.isArray(state.piles) || !Array.isArray(state.history)) return null;
    if (!historyIsConsistent(state)) return null;
    return state;
  } catch {
    return null;
  }
}

export interface StringStore {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

export function saveGame(store: StringStore, state: GameState): void {
  store.setItem(STORAGE_KEY, serialize(state));
}

export function loadGame(store: StringStore): GameState | null {
  const text = store.getItem(STORAGE_KEY);
  return text === null ? null : deserialize(text);
}

export function clearGame(store: StringStore): void {
  store.removeItem(STORAGE_KEY);
}
