/**
 * Ranked strategy list: pure view-model construction plus an HTML renderer.
 *
 * Every number in the view model is copied verbatim from the API payload;
 * formatting happens only at render time. Entries whose combined scores
 * agree within the service's ranking resolution form a tie group and get a
 * shared-distance badge.
 */

import type { RankedEntryPayload, RecommendationPayload } from './types';

// Matches the service's ranking resolution: scores closer than this are
// the same rank group as far as the engine is concerned.
export const TIE_EPSILON = 1e-9;

export interface RankingRow {
  rank: number;
  name: string;
  dEucl: number;
  dAdapt: number;
  dComb: number;
  mu: number;
  tieGroup: number | null;
  rankChange: number | null;
  chosen: boolean;
}

export interface RankingView {
  rows: RankingRow[];
  chosen: string | null;
  empty: boolean;
}

function tieGroups(entries: RankedEntryPayload[]): (number | null)[] {
  const groups: (number | null)[] = new Array(entries.length).fill(null);
  let groupId = 0;
  let i = 0;
  while (i < entries.length) {
    let j = i;
    while (
      j + 1 < entries.length &&
      Math.abs(entries[j + 1].d_comb - entries[i].d_comb) <= TIE_EPSILON
    ) {
      j += 1;
    }
    if (j > i) {
      groupId += 1;
      for (let k = i; k <= j; k += 1) {
        groups[k] = groupId;
      }
    }
    i = j + 1;
  }
  return groups;
}

export function buildRankingView(
  recommendation: RecommendationPayload | null,
  previous: RecommendationPayload | null = null,
): RankingView {
  if (!recommendation || recommendation.entries.length === 0) {
    return { rows: [], chosen: null, empty: true };
  }
  const entries = [...recommendation.entries].sort((a, b) => a.rank - b.rank);
  const groups = tieGroups(entries);
  const previousRanks = new Map<number, number>();
  if (previous) {
    for (const entry of previous.entries) {
      previousRanks.set(entry.id, entry.rank);
    }
  }
  const rows = entries.map((entry, index) => {
    const before = previousRanks.get(entry.id);
    return {
      rank: entry.rank,
      name: entry.name,
      dEucl: entry.d_eucl,
      dAdapt: entry.d_adapt,
      dComb: entry.d_comb,
      mu: entry.mu,
      tieGroup: groups[index],
      rankChange: before === undefined ? null : before - entry.rank,
      chosen: entry.name === recommendation.chosen,
    };
  });
  return { rows, chosen: recommendation.chosen, empty: false };
}

export function formatDistance(value: number): string {
  return value.toFixed(4);
}

function badge(row: RankingRow): string {
  const parts: string[] = [];
  if (row.tieGroup !== null) {
    parts.push(`<span class="badge tie" title="shared distance">=${row.tieGroup}</span>`);
  }
  if (row.rankChange !== null && row.rankChange !== 0) {
    const cls = row.rankChange > 0 ? 'up' : 'down';
    const arrow = row.rankChange > 0 ? '&#9650;' : '&#9660;';
    parts.push(`<span class="badge ${cls}">${arrow}${Math.abs(row.rankChange)}</span>`);
  }
  return parts.join(' ');
}

export function renderRankingHtml(view: RankingView): string {
  if (view.empty) {
    return '<p class="empty-state">No strategies to rank yet.</p>';
  }
  const body = view.rows
    .map(
      (row) => `
    <tr class="${row.chosen ? 'chosen' : ''}">
      <td class="rank">${row.rank}</td>
      <td class="name">${row.name} ${badge(row)}</td>
      <td class="num">${formatDistance(row.dEucl)}</td>
      <td class="num">${formatDistance(row.dAdapt)}</td>
      <td class="num">${formatDistance(row.dComb)}</td>
    </tr>`,
    )
    .join('');
  return `
  <table class="ranking">
    <thead>
      <tr><th>#</th><th>strategy</th><th>d_eucl</th><th>d_adapt</th><th>d_comb</th></tr>
    </thead>
    <tbody>${body}</tbody>
  </table>`;
}
