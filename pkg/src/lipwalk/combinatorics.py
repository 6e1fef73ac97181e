"""Exact integer sequences: binomials, the trinomial triangle and Motzkin numbers.

Every value is a Python ``int`` or :class:`fractions.Fraction`; nothing here
touches floating point.  The two triangles are grown row by row from their
recurrences and cached, so asking for row 1000 once makes every smaller row
free afterwards.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

__all__ = [
    "ExactRational",
    "binomial",
    "trinomial",
    "irregular_trinomial",
    "central_trinomial",
    "trinomial_row",
    "motzkin",
    "path_endpoint_probability",
    "path_endpoint_distribution",
    "format_rational",
    "parse_rational",
    "TrinomialTable",
    "MotzkinTable",
]

# Fraction is always reduced with a positive denominator, which is exactly the
# contract we need for average-range values.
ExactRational = Fraction


def format_rational(x) -> str:
    """Canonical ``"p/q"`` form; integers keep an explicit ``/1``."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def binomial(a: int, b: int) -> int:
    """Binomial coefficient, zero whenever ``b < 0`` or ``b > a``.

    The "zero if b > a" convention also covers a negative top argument,
    which the path double sum produces at its boundary terms.
    """
    if b < 0 or b > a:
        return 0
    return comb(a, b)


class TrinomialTable:
    """Rows of the irregular trinomial triangle T*(n, k), 0 <= k <= 2n."""

    def __init__(self):
        self._rows = [(1,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple:
        if n < 0:
            raise ValueError("row index must be non-negative")
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    prev = self._rows[-1]
                    width = len(prev) + 2
                    new = [0] * width
                    for k, v in enumerate(prev):
                        new[k] += v
                        new[k + 1] += v
                        new[k + 2] += v
                    self._rows.append(tuple(new))
        return self._rows[n]

    def __call__(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > 2 * n:
            return 0
        return self.row(n)[k]


class MotzkinTable:
    """Generalized Motzkin numbers M(n, k), 0 <= k <= n."""

    def __init__(self):
        self._rows = [(1,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple:
        if n < 0:
            raise ValueError("row index must be non-negative")
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    prev = self._rows[-1]
                    m = len(prev)  # previous n + 1
                    new = []
                    for k in range(m + 1):
                        v = 0
                        if k < m:
                            v += prev[k]
                        if 0 <= k - 1 < m:
                            v += prev[k - 1]
                        if k + 1 < m:
                            v += prev[k + 1]
                        new.append(v)
                    self._rows.append(tuple(new))
        return self._rows[n]

    def __call__(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        return self.row(n)[k]


_TRINOMIAL = TrinomialTable()
_MOTZKIN = MotzkinTable()


def irregular_trinomial(n: int, k: int) -> int:
    """T*(n, k); zero outside 0 <= k <= 2n."""
    return _TRINOMIAL(n, k)


def trinomial(n: int, k: int) -> int:
    """Centred trinomial coefficient, zero for ``|k| > n``.

    >>> [trinomial(4, k) for k in range(-4, 5)]
    [1, 4, 10, 16, 19, 16, 10, 4, 1]
    """
    return _TRINOMIAL(n, k + n)


def central_trinomial(n: int) -> int:
    return _TRINOMIAL(n, n)


def trinomial_row(n: int) -> tuple:
    return _TRINOMIAL.row(n)


def motzkin(n: int, k: int) -> int:
    """Number of non-negative lattice paths with steps -1/0/+1 from (0,0) to (n,k)."""
    return _MOTZKIN(n, k)


def path_endpoint_probability(n: int, k: int) -> Fraction:
    """P(X_n = k) for a uniform 1-Lipschitz mapping of the path P_n.

    X_n is the value at the far endpoint when the root is the near one.
    Choose which of the n-1 steps are up (k + i of them) and then which of
    the remaining ones are down (i of them).
    """
    if n < 1:
        raise ValueError("path order must be at least 1")
    k = abs(k)
    steps = n - 1
    total = 0
    for i in range((steps - k) // 2 + 1):
        total += binomial(steps, k + i) * binomial(steps - k - i, i)
    return Fraction(total, 3**steps)


def path_endpoint_distribution(n: int) -> dict:
    """All non-zero endpoint probabilities of P_n keyed by value."""
    return {k: path_endpoint_probability(n, k) for k in range(-(n - 1), n)}
