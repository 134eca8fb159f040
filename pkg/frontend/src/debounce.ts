/**
 * Trailing debounce for slider interaction. 150 ms keeps perceived latency
 * under the 200 ms budget while collapsing drag events into one request.
 */

export const SLIDER_DEBOUNCE_MS = 150;

export interface Debounced<A extends unknown[]> {
  (...args: A): void;
  cancel: () => void;
  flush: () => void;
}

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number = SLIDER_DEBOUNCE_MS,
): Debounced<A> {
  let timer: ReturnType<typeof setTimeout> | null = null;
  let pending: A | null = null;

  const debounced = (...args: A) => {
    pending = args;
    if (timer !== null) {
      clearTimeout(timer);
    }
    timer = setTimeout(() => {
      timer = null;
      const args2 = pending as A;
      pending = null;
      fn(...args2);
    }, waitMs);
  };

  debounced.cancel = () => {
    if (timer !== null) {
      clearTimeout(timer);
      timer = null;
    }
    pending = null;
  };

  debounced.flush = () => {
    if (timer !== null && pending !== null) {
      clearTimeout(timer);
      timer = null;
      const args = pending;
      pending = null;
      fn(...args);
    }
  };

  return debounced;
}
