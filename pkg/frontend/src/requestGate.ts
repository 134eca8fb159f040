/**
 * Sequence-numbered request gating: responses from superseded requests are
 * discarded so the view can never regress to stale data.
 */

export interface RequestGate {
  next: () => number;
  isLatest: (token: number) => boolean;
  invalidate: () => void;
}

export function createRequestGate(): RequestGate {
  let current = 0;
  return {
    next() {
      current += 1;
      return current;
    },
    isLatest(token: number) {
      return token === current;
    },
    invalidate() {
      current += 1;
    },
  };
}
