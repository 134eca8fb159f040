/**
 * Side-by-side base vs variant comparison with per-strategy rank movement.
 */

import { buildRankingView, type RankingView } from './rankingView';
import type { RankDeltaPayload, WhatIfPayload } from './types';

export interface WhatIfView {
  base: RankingView;
  variant: RankingView;
  deltas: RankDeltaPayload[];
  promoted: string[];
  demoted: string[];
  chosenChanged: boolean;
}

export function buildWhatIfView(payload: WhatIfPayload): WhatIfView {
  // variant rows carry movement badges relative to the base ranking
  const base = buildRankingView(payload.base);
  const variant = buildRankingView(payload.variant, payload.base);
  const deltas = [...payload.rank_deltas].sort((a, b) => a.new_rank - b.new_rank);
  return {
    base,
    variant,
    deltas,
    promoted: deltas.filter((d) => d.delta > 0).map((d) => d.name),
    demoted: deltas.filter((d) => d.delta < 0).map((d) => d.name),
    chosenChanged: payload.base.chosen !== payload.variant.chosen,
  };
}

export function renderWhatIfHtml(view: WhatIfView, renderRanking: (v: RankingView) => string): string {
  const movement = view.deltas
    .filter((d) => d.delta !== 0)
    .map((d) => `<li>${d.name}: ${d.base_rank} &rarr; ${d.new_rank}</li>`)
    .join('');
  return `
  <div class="whatif-panel">
    <div class="side">
      <h3>base${view.base.chosen ? `: ${view.base.chosen}` : ''}</h3>
      ${renderRanking(view.base)}
    </div>
    <div class="side">
      <h3>variant${view.variant.chosen ? `: ${view.variant.chosen}` : ''}</h3>
      ${renderRanking(view.variant)}
    </div>
    <div class="movement">
      <h4>${view.chosenChanged ? 'recommendation changed' : 'recommendation unchanged'}</h4>
      <ul>${movement || '<li>no rank movement</li>'}</ul>
    </div>
  </div>`;
}
