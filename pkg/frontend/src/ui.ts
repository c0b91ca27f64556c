// DOM wiring: setup screen, play screen, and the live diagnostics panel.
// One in-flight request at a time; inputs are disabled while the engine
// (or any fetch) is busy, and a spinner appears only past 200 ms.

import { ApiError, Client } from './api.js';
import { binaryRows } from './binary.js';
import { PRESETS } from './presets.js';
import {
  allOnes,
  applyEngineAdvice,
  clearGame,
  emptySelection,
  loadGame,
  newGame,
  saveGame,
  submitHumanMove,
  undoPly,
  withSelection,
} from './state.js';
import type {
  ClassifyResponse,
  FourPileReport,
  GameState,
  LegalMoveJson,
  Report,
} from './types.js';

const SPINNER_DELAY_MS = 200;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  ...children: (Node | string)[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (key === 'class') node.className = value;
    else node.setAttribute(key, value);
  }
  node.append(...children);
  return node;
}

function isFourPileReport(report: Report): report is FourPileReport {
  return 'conditions' in report;
}

export class App {
  private state: GameState | null = null;
  private legal: LegalMoveJson[] = [];
  private classification: ClassifyResponse | null = null;
  private busy = false;
  private banner: string | null = null;
  private lastEngineNote: string | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly client: Client,
    private readonly store: Storage,
  ) {}

  async start(): Promise<void> {
    const saved = loadGame(this.store);
    if (saved) {
      this.state = saved;
      await this.refreshPosition();
      await this.stepEngineIfNeeded();
    } else {
      this.render();
    }
  }

  private async beginGame(piles: number[], humanFirst: boolean): Promise<void> {
    try {
      this.state = newGame(piles, humanFirst);
    } catch (err) {
      this.banner = (err as Error).message;
      this.render();
      return;
    }
    saveGame(this.store, this.state);
    this.banner = null;
    this.lastEngineNote = null;
    await this.refreshPosition();
    await this.stepEngineIfNeeded();
  }

  private async withBusy<T>(work: () => Promise<T>): Promise<T> {
    this.busy = true;
    const spinnerTimer = setTimeout(() => this.render(), SPINNER_DELAY_MS);
    try {
      return await work();
    } finally {
      clearTimeout(spinnerTimer);
      this.busy = false;
    }
  }

  /** Pull legal moves and diagnostics for the current position. */
  private async refreshPosition(): Promise<void> {
    if (!this.state) return;
    try {
      await this.withBusy(async () => {
        this.classification = await this.client.classify(this.state!.piles);
        this.legal =
          this.state!.phase === 'human_turn' ? await this.client.moves(this.state!.piles) : [];
      });
      this.banner = null;
    } catch (err) {
      this.banner = this.describeError(err);
    }
    this.render();
  }

  private async stepEngineIfNeeded(): Promise<void> {
    if (!this.state || this.state.phase !== 'engine_turn') return;
    try {
      const advice = await this.withBusy(() => this.client.engineMove(this.state!.piles));
      this.state = applyEngineAdvice(this.state, advice);
      this.lastEngineNote = this.state.history[this.state.history.length - 1].label ?? null;
      saveGame(this.store, this.state);
      await this.refreshPosition();
    } catch (err) {
      this.banner = this.describeError(err);
      this.render();
    }
  }

  private describeError(err: unknown): string {
    if (err instanceof ApiError) return `${err.code}: ${err.message}`;
    return `network error: ${(err as Error).message ?? err}`;
  }

  private async onSubmit(): Promise<void> {
    if (!this.state) return;
    const result = submitHumanMove(this.state, this.legal);
    if (!result.ok) {
      this.banner = result.error;
      this.render();
      return;
    }
    this.state = result.state;
    this.banner = null;
    saveGame(this.store, this.state);
    await this.refreshPosition();
    await this.stepEngineIfNeeded();
  }

  private async onUndo(): Promise<void> {
    if (!this.state || this.state.history.length === 0) return;
    // Pop back to the most recent human turn so play can resume there.
    let state = undoPly(this.state);
    while (state.phase === 'engine_turn' && state.history.length > 0) {
      state = undoPly(state);
    }
    this.state = state;
    this.banner = null;
    saveGame(this.store, this.state);
    await this.refreshPosition();
    await this.stepEngineIfNeeded();
  }

  private onNewGame(): void {
    this.state = null;
    this.legal = [];
    this.classification = null;
    this.banner = null;
    this.lastEngineNote = null;
    clearGame(this.store);
    this.render();
  }

  // ---- rendering ----

  private render(): void {
    this.root.replaceChildren();
    if (!this.state) {
      this.root.append(this.renderSetup());
      return;
    }
    this.root.append(this.renderGame());
  }

  private renderSetup(): HTMLElement {
    const input = el('input', {
      id: 'piles-input',
      placeholder: 'e.g. 310,208,304,432',
      value: '310,208,304,432',
    });
    const engineFirst = el('input', { type: 'checkbox', id: 'engine-first' });
    (engineFirst as HTMLInputElement).checked = true;
    const startButton = el('button', { class: 'primary' }, 'start game');
    startButton.addEventListener('click', () => {
      const piles = (input as HTMLInputElement).value
        .split(',')
        .map((s) => Number.parseInt(s.trim(), 10));
      if (piles.some((p) => Number.isNaN(p))) {
        this.banner = 'piles must be comma-separated positive integers';
        this.render();
        return;
      }
      void this.beginGame(piles, !(engineFirst as HTMLInputElement).checked);
    });

    const presetList = el('div', { class: 'presets' });
    for (const preset of PRESETS) {
      const button = el(
        'button',
        { class: 'preset' },
        `${preset.name} (${preset.piles.join(',')}) [${preset.expected}]`,
      );
      button.addEventListener('click', () => {
        (input as HTMLInputElement).value = preset.piles.join(',');
      });
      presetList.append(button);
    }

    return el(
      'section',
      { class: 'setup' },
      el('h1', {}, 'single-delete nim'),
      el('p', {}, 'delete one pile, then split another; all ones loses.'),
      this.banner ? el('p', { class: 'banner error' }, this.banner) : '',
      el('label', { for: 'piles-input' }, 'piles'),
      input,
      el('label', { class: 'row' }, engineFirst, ' engine moves first'),
      startButton,
      el('h2', {}, 'presets'),
      presetList,
    );
  }

  private renderGame(): HTMLElement {
    const state = this.state!;
    const section = el('section', { class: 'game' });

    const status =
      state.phase === 'game_over'
        ? `${state.history[state.history.length - 1]?.mover ?? 'nobody'} made the last move and wins`
        : state.phase === 'human_turn'
          ? 'your move'
          : 'engine is thinking';
    section.append(el('h1', {}, 'single-delete nim'), el('p', { class: 'status' }, status));

    if (this.banner) {
      const bannerBox = el('p', { class: 'banner error' }, this.banner);
      if (state.phase === 'engine_turn') {
        const retry = el('button', {}, 'retry');
        retry.addEventListener('click', () => void this.stepEngineIfNeeded());
        bannerBox.append(' ', retry);
      }
      section.append(bannerBox);
    }
    if (this.busy) section.append(el('p', { class: 'spinner' }, 'waiting for engine...'));
    if (this.lastEngineNote) {
      section.append(el('p', { class: 'engine-note' }, `engine used ${this.lastEngineNote}`));
    }

    section.append(this.renderPiles(state));
    if (state.phase === 'human_turn') section.append(this.renderMoveForm(state));
    section.append(this.renderDiagnostics(state));
    section.append(this.renderHistory(state));

    const controls = el('div', { class: 'controls' });
    const undo = el('button', {}, 'undo');
    (undo as HTMLButtonElement).disabled = this.busy || state.history.length === 0;
    undo.addEventListener('click', () => void this.onUndo());
    const restart = el('button', {}, 'new game');
    restart.addEventListener('click', () => this.onNewGame());
    controls.append(undo, restart);
    section.append(controls);
    return section;
  }

  private renderPiles(state: GameState): HTMLElement {
    const container = el('div', { class: 'piles' });
    state.piles.forEach((pile, index) => {
      const card = el(
        'div',
        { class: 'pile-card', 'data-index': String(index) },
        el('div', { class: 'pile-number' }, `#${index + 1}`),
        el('div', { class: 'pile-size' }, String(pile)),
      );
      const sel = state.selection;
      if (sel.deleteIndex === index) card.classList.add('marked-delete');
      if (sel.splitIndex === index) card.classList.add('marked-split');
      container.append(card);
    });
    return container;
  }

  private renderMoveForm(state: GameState): HTMLElement {
    const form = el('div', { class: 'move-form' });
    const deletePick = el('select', { id: 'delete-pick' });
    const splitPick = el('select', { id: 'split-pick' });
    for (const [select, label] of [
      [deletePick, 'delete'],
      [splitPick, 'split'],
    ] as const) {
      select.append(el('option', { value: '' }, `pile to ${label}`));
      state.piles.forEach((pile, index) => {
        select.append(el('option', { value: String(index) }, `#${index + 1} (${pile})`));
      });
    }
    const amount = el('input', {
      type: 'number',
      id: 'split-amount',
      min: '1',
      placeholder: 'stones in one new pile',
    });
    const setSel = () => {
      const toInt = (v: string) => (v === '' ? null : Number.parseInt(v, 10));
      this.state = withSelection(this.state!, {
        deleteIndex: toInt((deletePick as HTMLSelectElement).value),
        splitIndex: toInt((splitPick as HTMLSelectElement).value),
        amount: toInt((amount as HTMLInputElement).value),
      });
      saveGame(this.store, this.state);
    };
    const sel = state.selection;
    if (sel.deleteIndex !== null) (deletePick as HTMLSelectElement).value = String(sel.deleteIndex);
    if (sel.splitIndex !== null) (splitPick as HTMLSelectElement).value = String(sel.splitIndex);
    if (sel.amount !== null) (amount as HTMLInputElement).value = String(sel.amount);
    deletePick.addEventListener('change', setSel);
    splitPick.addEventListener('change', setSel);
    amount.addEventListener('change', setSel);

    const submit = el('button', { class: 'primary' }, 'play move');
    (submit as HTMLButtonElement).disabled = this.busy;
    submit.addEventListener('click', () => {
      setSel();
      void this.onSubmit();
    });
    form.append(deletePick, splitPick, amount, submit);
    return form;
  }

  private renderDiagnostics(state: GameState): HTMLElement {
    const panel = el('div', { class: 'diagnostics' });
    panel.append(el('h2', {}, 'why this position is what it is'));
    if (this.classification) {
      panel.append(
        el('p', { class: `outcome outcome-${this.classification.outcome}` },
          `outcome: ${this.classification.outcome}`),
      );
    }
    const table = el('table', { class: 'binary-table' });
    for (const row of binaryRows(state.piles)) {
      const tr = el('tr', {});
      tr.append(el('td', { class: 'dec' }, String(row.value)));
      const digitsCell = el('td', { class: 'bits' });
      [...row.digits].forEach((digit, column) => {
        const span = el('span', { class: column === row.markColumn ? 'bit mark' : 'bit' }, digit);
        digitsCell.append(span);
      });
      tr.append(digitsCell);
      table.append(tr);
    }
    panel.append(table);

    const report = this.classification?.report;
    if (report && isFourPileReport(report)) {
      panel.append(
        el('p', {}, `pattern ${report.pattern}, valuations (${report.vals.join(', ')})`),
      );
      const list = el('ul', { class: 'conditions' });
      for (const label of Object.keys(report.conditions).sort()) {
        const ok = report.conditions[label];
        list.append(el('li', { class: ok ? 'pass' : 'fail' }, `${label}: ${ok ? 'pass' : 'fail'}`));
      }
      panel.append(list);
    } else if (report && 'star' in report) {
      panel.append(el('p', {}, `valuations (${report.vals.join(', ')}) ${report.star ? 'all equal' : 'not all equal'}`));
    } else if (report && 'both_odd' in report) {
      panel.append(el('p', {}, report.both_odd ? 'both piles odd' : 'not both piles odd'));
    } else if (report) {
      panel.append(el('p', {}, `family: ${report.family ?? 'none known'}`));
    }
    return panel;
  }

  private renderHistory(state: GameState): HTMLElement {
    const box = el('div', { class: 'history' });
    box.append(el('h2', {}, 'moves'));
    const list = el('ol', {});
    for (const entry of state.history) {
      const text =
        `${entry.mover}: delete #${entry.move.delete_index + 1}, ` +
        `split #${entry.move.split_index + 1} into ${entry.move.left}+${entry.move.right}` +
        ` -> ${entry.resulting.join(',')}` +
        (entry.label ? `  [${entry.label}]` : '');
      list.append(el('li', {}, text));
    }
    box.append(list);
    return box;
  }
}

export function mount(root: HTMLElement): App {
  const app = new App(root, new Client(''), window.localStorage);
  void app.start();
  return app;
}
