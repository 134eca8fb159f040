/**
 * Dashboard bootstrap: loads the strategy library, seeds the session with
 * the halftime profile, and wires sliders through a 150 ms debounce and a
 * sequence-numbered gate into live what-if calls.
 */

import { ApiClient } from './apiClient';
import { debounce, SLIDER_DEBOUNCE_MS } from './debounce';
import { createRequestGate } from './requestGate';
import { buildRankingView, renderRankingHtml } from './rankingView';
import { buildRadarView, renderRadarSvg } from './radar';
import { buildWhatIfView, renderWhatIfHtml } from './whatifPanel';
import {
  applyRecommendation,
  createSessionState,
  setEnergy,
  setScoreState,
  setTeamAttribute,
  setTimeRemaining,
  statePayload,
  teamPayload,
  type UiSessionState,
} from './state';
import type { RecommendationPayload, StrategyPayload, WhatIfRequest } from './types';

const PILOT_TEAM: Record<string, number> = { A1: 0.85, A2: 0.5, A4: 0.85, A5: 0.5, A8: 0.35 };
const PILOT_ACTIVE = ['A1', 'A2', 'A4', 'A5', 'A8'];

const api = new ApiClient(
  (globalThis as { TOUCHLINE_API?: string }).TOUCHLINE_API ?? 'http://127.0.0.1:8000',
);
const gate = createRequestGate();

function el<T extends HTMLElement>(selector: string): T {
  const node = document.querySelector<T>(selector);
  if (!node) {
    throw new Error(`missing element ${selector}`);
  }
  return node;
}

function renderError(message: string | null): void {
  const banner = el<HTMLDivElement>('#error-banner');
  banner.textContent = message ?? '';
  banner.style.display = message ? 'block' : 'none';
}

function renderAll(
  state: UiSessionState,
  strategies: StrategyPayload[],
  baseRec: RecommendationPayload,
): void {
  const ranking = buildRankingView(baseRec, state.lastRecommendation);
  el('#ranking').innerHTML = renderRankingHtml(ranking);

  const chosen = strategies.find((s) => s.name === baseRec.chosen);
  if (chosen) {
    const radar = buildRadarView(state.team, chosen.profile, state.active);
    el('#radar').innerHTML = renderRadarSvg(radar);
  }

  const diag = Object.entries(baseRec.diagnostics)
    .map(([attribute, d]) => {
      const width = Math.min(Math.abs(d.delta) * 100, 100).toFixed(0);
      const side = d.delta >= 0 ? 'pos' : 'neg';
      return `
      <div class="diag-row">
        <span class="diag-label">${attribute}</span>
        <div class="diag-bar ${side} ${d.label}" style="width:${width}px"></div>
        <span class="diag-delta">${d.delta >= 0 ? '+' : ''}${d.delta.toFixed(2)} ${d.label}</span>
      </div>`;
    })
    .join('');
  el('#diagnostics').innerHTML = diag;

  applyRecommendation(state, baseRec);
}

async function refresh(state: UiSessionState, strategies: StrategyPayload[]): Promise<void> {
  const token = gate.next();
  try {
    const baseline = state.lastRecommendation;
    if (!baseline) {
      const rec = await api.recommend({ team: teamPayload(state), state: statePayload(state) });
      if (!gate.isLatest(token)) return; // stale response, a newer edit is in flight
      renderError(null);
      renderAll(state, strategies, rec);
      return;
    }
    const request: WhatIfRequest = {
      base: { team: teamPayload(state), state: statePayload(state) },
      overrides: {},
    };
    const result = await api.whatif(request);
    if (!gate.isLatest(token)) return;
    renderError(null);
    el('#whatif').innerHTML = renderWhatIfHtml(buildWhatIfView(result), renderRankingHtml);
    renderAll(state, strategies, result.variant);
  } catch (err) {
    if (gate.isLatest(token)) {
      renderError(err instanceof Error ? err.message : String(err));
    }
  }
}

function bindSlider(
  selector: string,
  onInput: (value: number) => void,
  refreshDebounced: () => void,
): void {
  const input = el<HTMLInputElement>(selector);
  input.addEventListener('input', () => {
    onInput(Number(input.value));
    refreshDebounced();
  });
}

export async function start(): Promise<void> {
  const state = createSessionState(PILOT_TEAM, PILOT_ACTIVE);
  const library = await api.strategies();
  const refreshDebounced = debounce(() => {
    void refresh(state, library.strategies);
  }, SLIDER_DEBOUNCE_MS);

  bindSlider('#time-slider', (v) => setTimeRemaining(state, v), refreshDebounced);
  bindSlider('#score-slider', (v) => setScoreState(state, v), refreshDebounced);
  bindSlider('#energy-slider', (v) => setEnergy(state, v), refreshDebounced);
  for (const attribute of state.active) {
    const selector = `#attr-${attribute}`;
    if (document.querySelector(selector)) {
      bindSlider(selector, (v) => setTeamAttribute(state, attribute, v), refreshDebounced);
    }
  }
  await refresh(state, library.strategies);
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
  void start();
}
