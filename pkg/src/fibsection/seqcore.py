"""Exact Fibonacci and Lucas numbers, and arithmetic in the ring Z[phi].

All values are Python ints, so nothing here ever loses precision.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GoldenInt:
    """The element ``a + b*phi`` of Z[phi], where ``phi**2 == phi + 1``."""

    a: int
    b: int

    @classmethod
    def one(cls) -> GoldenInt:
        return cls(1, 0)

    def __add__(self, other: GoldenInt) -> GoldenInt:
        if not isinstance(other, GoldenInt):
            return NotImplemented
        return GoldenInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: GoldenInt) -> GoldenInt:
        if not isinstance(other, GoldenInt):
            return NotImplemented
        return GoldenInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> GoldenInt:
        return GoldenInt(-self.a, -self.b)

    def __mul__(self, other: GoldenInt | int) -> GoldenInt:
        if isinstance(other, int):
            return GoldenInt(self.a * other, self.b * other)
        if not isinstance(other, GoldenInt):
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return GoldenInt(a * c + bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> GoldenInt:
        return golden_pow(self, k)

    def conjugate(self) -> GoldenInt:
        # phi -> 1 - phi
        return GoldenInt(self.a + self.b, -self.b)

    def __str__(self) -> str:
        return f"{self.a}{self.b:+d}*phi"


ALPHA = GoldenInt(0, 1)
BETA = GoldenInt(1, -1)


def golden_pow(g: GoldenInt, k: int) -> GoldenInt:
    """Binary exponentiation in Z[phi]."""
    if k < 0:
        raise ValueError(f"exponent must be non-negative, got {k}")
    result = GoldenInt.one()
    base = g
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


def _fib_pair(n: int) -> tuple[int, int]:
    """Return ``(F_n, F_{n+1})`` for ``n >= 0`` by fast doubling."""
    a, b = 0, 1
    for bit in bin(n)[2:]:
        # (F_k, F_{k+1}) -> (F_{2k}, F_{2k+1})
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib(n: int) -> int:
    """Fibonacci number ``F_n`` for any integer ``n``.

    Negative indices follow ``F_{-n} = (-1)**(n+1) * F_n``.
    """
    if n >= 0:
        return _fib_pair(n)[0]
    m = -n
    value = _fib_pair(m)[0]
    return value if m % 2 else -value


def lucas(n: int) -> int:
    """Lucas number ``L_n`` for any integer ``n``, via ``L_n = 2F_{n+1} - F_n``."""
    m = abs(n)
    f, f1 = _fib_pair(m)
    value = 2 * f1 - f
    if n < 0 and m % 2:
        return -value
    return value


def binet_fib_lucas(n: int) -> tuple[int, int]:
    """``(F_n, L_n)`` read off from ``alpha**n`` computed exactly in Z[phi].

    With ``alpha**n = p + q*phi`` the conjugate is ``beta**n = (p+q) - q*phi``,
    so ``(alpha**n - beta**n)/sqrt5 = q`` and ``alpha**n + beta**n = 2p + q``.
    Negative ``n`` is delegated to :func:`fib` and :func:`lucas`.
    """
    if n < 0:
        return fib(n), lucas(n)
    power = golden_pow(ALPHA, n)
    return power.b, 2 * power.a + power.b
