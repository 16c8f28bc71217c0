export interface Debounced<A extends unknown[]> {
  (...args: A): void;
  cancel(): void;
  flush(): void;
}

/**
 * Trailing-edge debounce: the wrapped function runs once, `ms` after the
 * last call, with the last call's arguments. Prevents a dragged slider
 * from flooding the server with merge requests.
 */
export function debounce<A extends unknown[]>(fn: (...args: A) => void, ms: number): Debounced<A> {
  let handle: ReturnType<typeof setTimeout> | undefined;
  let pending: A | undefined;

  const wrapped = (...args: A) => {
    pending = args;
    if (handle !== undefined) clearTimeout(handle);
    handle = setTimeout(() => {
      handle = undefined;
      const args = pending as A;
      pending = undefined;
      fn(...args);
    }, ms);
  };
  wrapped.cancel = () => {
    if (handle !== undefined) clearTimeout(handle);
    handle = undefined;
    pending = undefined;
  };
  wrapped.flush = () => {
    if (handle === undefined) return;
    clearTimeout(handle);
    handle = undefined;
    const args = pending as A;
    pending = undefined;
    fn(...args);
  };
  return wrapped;
}
