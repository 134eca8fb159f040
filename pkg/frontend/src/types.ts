/**
 * Payload shapes for the recommendation service API.
 *
 * The dashboard performs no scoring of its own: every number it shows is
 * read from one of these payloads.
 */

export type DiagnosticLabel = 'deficit' | 'aligned' | 'surplus';

export interface RankedEntryPayload {
  id: number;
  name: string;
  d_eucl: number;
  d_adapt: number;
  d_comb: number;
  rank: number;
  mu: number;
}

export interface DiagnosticPayload {
  delta: number;
  label: DiagnosticLabel;
}

export interface MatchStatePayload {
  time_remaining: number;
  score_state: number;
  energy: number | null;
}

export interface RecommendationPayload {
  chosen: string;
  chosen_id: number;
  entries: RankedEntryPayload[];
  weights: Record<string, number>;
  gaps: { delta_tech: number; delta_phys: number };
  state: MatchStatePayload;
  diagnostics: Record<string, DiagnosticPayload>;
}

export interface RankDeltaPayload {
  id: number;
  name: string;
  base_rank: number;
  new_rank: number;
  delta: number;
}

export interface WhatIfPayload {
  base: RecommendationPayload;
  variant: RecommendationPayload;
  rank_deltas: RankDeltaPayload[];
}

export interface StrategyPayload {
  id: number;
  name: string;
  category: string;
  canonical: boolean;
  profile: Record<string, number>;
}

export interface StrategyListPayload {
  count: number;
  strategies: StrategyPayload[];
}

export interface ApiErrorPayload {
  error: string;
  field: string | null;
  message: string;
}

export interface RecommendRequest {
  team: Record<string, number | string[]>;
  opp?: Record<string, number | string[]> | null;
  state?: Partial<MatchStatePayload>;
  params?: Record<string, number>;
  combine_mode?: string;
}

export interface WhatIfRequest {
  base: RecommendRequest;
  overrides: {
    state?: Partial<MatchStatePayload>;
    team?: Record<string, number>;
  };
}
