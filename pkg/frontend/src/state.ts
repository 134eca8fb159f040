/**
 * UI session state: profile edits, match-state sliders, the last successful
 * recommendation, and pinned what-if variants.
 *
 * Slider setters clamp to their valid ranges so the state can never hold an
 * out-of-range value; the displayed ranking only ever updates from a
 * successful API response.
 */

import type { RecommendationPayload, WhatIfPayload } from './types';

export interface PinnedVariant {
  label: string;
  result: WhatIfPayload;
}

export interface UiSessionState {
  team: Record<string, number>;
  opp: Record<string, number> | null;
  active: string[];
  timeRemaining: number;
  scoreState: -1 | 0 | 1;
  energy: number | null;
  lastRecommendation: RecommendationPayload | null;
  pinned: PinnedVariant[];
}

const clamp01 = (v: number) => Math.min(Math.max(v, 0), 1);

export function createSessionState(
  team: Record<string, number>,
  active: string[],
  opp: Record<string, number> | null = null,
): UiSessionState {
  return {
    team: { ...team },
    opp: opp ? { ...opp } : null,
    active: [...active],
    timeRemaining: 1,
    scoreState: 0,
    energy: null,
    lastRecommendation: null,
    pinned: [],
  };
}

export function setTimeRemaining(state: UiSessionState, value: number): void {
  state.timeRemaining = clamp01(value);
}

export function setScoreState(state: UiSessionState, value: number): void {
  state.scoreState = value < 0 ? -1 : value > 0 ? 1 : 0;
}

export function setEnergy(state: UiSessionState, value: number | null): void {
  state.energy = value === null ? null : clamp01(value);
}

export function setTeamAttribute(state: UiSessionState, attribute: string, value: number): void {
  if (!state.active.includes(attribute)) {
    throw new Error(`attribute ${attribute} is not active in this session`);
  }
  state.team[attribute] = clamp01(value);
}

export function applyRecommendation(
  state: UiSessionState,
  recommendation: RecommendationPayload,
): void {
  state.lastRecommendation = recommendation;
}

export function pinVariant(state: UiSessionState, label: string, result: WhatIfPayload): void {
  state.pinned.push({ label, result });
}

export function statePayload(state: UiSessionState) {
  return {
    time_remaining: state.timeRemaining,
    score_state: state.scoreState,
    energy: state.energy,
  };
}

export function teamPayload(state: UiSessionState): Record<string, number | string[]> {
  return { ...state.team, active: [...state.active] };
}
