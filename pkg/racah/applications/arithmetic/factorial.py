import threading

from racah.exceptions import DomainError


class FactorialTable:
    """Memoized n!, grown on demand up to the largest argument requested"""

    def __init__(self):
        self._values = [1]
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._values)

    def __call__(self, n):
        if isinstance(n, bool) or not isinstance(n, int):
            raise DomainError(f'factorial needs an integer argument, got {n!r}')
        if n < 0:
            raise DomainError(f'factorial of negative argument {n}')
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            # only appends happen, so readers outside the lock stay consistent
            while len(values) <= n:
                values.append(values[-1] * len(values))
        return values[n]


factorial = FactorialTable()
