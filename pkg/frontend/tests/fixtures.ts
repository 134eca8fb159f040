import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

import type {
  RecommendationPayload,
  StrategyListPayload,
  WhatIfPayload,
} from '../src/types';

const FIXTURES_DIR = join(dirname(fileURLToPath(import.meta.url)), '..', 'fixtures');

function load<T>(name: string): T {
  return JSON.parse(readFileSync(join(FIXTURES_DIR, name), 'utf-8')) as T;
}

export const pilotRecommend = () => load<RecommendationPayload>('pilot_recommend.json');
export const pilotWhatIfA8 = () => load<WhatIfPayload>('pilot_whatif_a8.json');
export const strategyList = () => load<StrategyListPayload>('strategies.json');
export const recordedRequests = () =>
  load<{
    recommend: { team: Record<string, number | string[]> };
    whatif_a8: { overrides: { team: Record<string, number> } };
  }>('requests.json');
