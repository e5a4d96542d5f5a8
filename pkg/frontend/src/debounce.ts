/**
 * Returns a trailing-edge debounced version of `func`: it runs once, with
 * the latest arguments, after calls have stopped for `waitMs`.
 */
export function debounce<T extends (...args: any[]) => void>(
  func: T,
  waitMs: number
): {
  (...args: Parameters<T>): void;
  flush(): void;
  cancel(): void;
} {
  let timer: ReturnType<typeof setTimeout> | null = null;
  let pendingArgs: Parameters<T> | null = null;

  const debounced = (...args: Parameters<T>) => {
    pendingArgs = args;
    if (timer !== null) {
      clearTimeout(timer);
    }
    timer = setTimeout(() => {
      timer = null;
      const args = pendingArgs as Parameters<T>;
      pendingArgs = null;
      func(...args);
    }, waitMs);
  };

  // run the pending call now instead of waiting out the timer
  debounced.flush = () => {
    if (timer === null) return;
    clearTimeout(timer);
    timer = null;
    const args = pendingArgs as Parameters<T>;
    pendingArgs = null;
    func(...args);
  };

  debounced.cancel = () => {
    if (timer !== null) {
      clearTimeout(timer);
      timer = null;
    }
    pendingArgs = null;
  };

  return debounced;
}
