/**
 * Thin fetch client for the recommendation service. The fetch function is
 * injectable so tests can drive sequencing without a server.
 */

import type {
  ApiErrorPayload,
  RecommendRequest,
  RecommendationPayload,
  StrategyListPayload,
  WhatIfPayload,
  WhatIfRequest,
} from './types';

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  readonly payload: ApiErrorPayload | null;
  readonly status: number;

  constructor(status: number, payload: ApiErrorPayload | null) {
    super(payload?.message ?? `request failed with status ${status}`);
    this.status = status;
    this.payload = payload;
  }
}

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl = '', fetchFn: FetchLike = fetch.bind(globalThis)) {
    this.baseUrl = baseUrl.replace(/\/$/, '');
    this.fetchFn = fetchFn;
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchFn(`${this.baseUrl}${path}`, init);
    if (!resp.ok) {
      let payload: ApiErrorPayload | null = null;
      try {
        payload = (await resp.json()) as ApiErrorPayload;
      } catch {
        payload = null;
      }
      throw new ApiError(resp.status, payload);
    }
    return (await resp.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
    });
  }

  strategies(): Promise<StrategyListPayload> {
    return this.request<StrategyListPayload>('/strategies');
  }

  recommend(body: RecommendRequest): Promise<RecommendationPayload> {
    return this.post<RecommendationPayload>('/recommend', body);
  }

  whatif(body: WhatIfRequest): Promise<WhatIfPayload> {
    return this.post<WhatIfPayload>('/whatif', body);
  }
}
