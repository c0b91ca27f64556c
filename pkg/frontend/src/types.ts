// Wire types for the sdnim HTTP API and the client-side game state.

export type Outcome = 'P' | 'N' | 'Unknown';

export interface MoveJson {
  delete_index: number;
  split_index: number;
  left: number;
  right: number;
}

export interface LegalMoveJson {
  move: MoveJson;
  resulting: number[];
  outcome: Outcome;
}

export interface AdviceJson extends MoveJson {
  resulting: number[];
  rule: string;
  claimed_class: string | null;
}

export interface FourPileReport {
  pattern: string;
  vals: number[];
  conditions: Record<string, boolean>;
  outcome: Outcome;
}

export interface ThreePileReport {
  star: boolean;
  vals: number[];
  outcome: Outcome;
}

export interface TwoPileReport {
  both_odd: boolean;
  outcome: Outcome;
}

export interface FamilyReport {
  family: 'all_odd' | 'all_twos' | null;
  outcome: Outcome;
}

export type Report = FourPileReport | ThreePileReport | TwoPileReport | FamilyReport;

export interface ClassifyResponse {
  outcome: Outcome;
  report: Report;
}

export interface ApiErrorBody {
  code: string;
  message: string;
}

export type Phase = 'human_turn' | 'engine_turn' | 'game_over';
export type Mover = 'human' | 'engine';

export interface HistoryEntry {
  position: number[]; // before the move
  move: MoveJson;
  mover: Mover;
  resulting: number[]; // server-computed, never derived locally
  label?: string;
}

export interface Selection {
  deleteIndex: number | null;
  splitIndex: number | null;
  amount: number | null;
}

export interface GameState {
  piles: number[];
  history: HistoryEntry[];
  phase: Phase;
  selection: Selection;
}
