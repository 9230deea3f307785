"""Truncated formal power series.

A series stores its first ``N`` coefficients; anything at index ``N`` or
beyond is unknown, so every binary operation truncates to the shorter input.
Coefficients may be ints or :class:`IntPolynomial` values (the ring only
needs ``+``, ``-``, ``*`` and equality with ints).
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any

from .polynomial import IntPolynomial


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Any]) -> None:
        self.coeffs = list(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            other = other.coeffs
        if isinstance(other, (list, tuple)):
            return len(other) == len(self.coeffs) and all(
                a == b for a, b in zip(self.coeffs, other)
            )
        return NotImplemented

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.coeffs!r})"

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def __pow__(self, m: int) -> TruncatedSeries:
        return series_pow(self, m)


def _coeffs(a) -> list:
    if isinstance(a, TruncatedSeries):
        return a.coeffs
    if isinstance(a, IntPolynomial):
        return list(a.coeffs)
    return list(a)


def series_mul(a, b) -> TruncatedSeries:
    """Cauchy product, truncated to the shorter of the two inputs."""
    xs, ys = _coeffs(a), _coeffs(b)
    n = min(len(xs), len(ys))
    out = []
    for k in range(n):
        acc = 0
        for i in range(k + 1):
            x = xs[i]
            if x:
                acc = acc + x * ys[k - i]
        out.append(acc)
    return TruncatedSeries(out)


def series_pow(a, m: int) -> TruncatedSeries:
    """``a**m`` truncated to ``len(a)``, by binary exponentiation."""
    if m < 0:
        raise ValueError(f"exponent must be non-negative, got {m}")
    xs = _coeffs(a)
    n = len(xs)
    result = TruncatedSeries([1] + [0] * (n - 1) if n else [])
    base = TruncatedSeries(xs)
    while m:
        if m & 1:
            result = series_mul(result, base)
        m >>= 1
        if m:
            base = series_mul(base, base)
    return result


def _poly_power(q: list, m: int) -> list:
    # exact (untruncated) power of a short coefficient list
    out: list = [1]
    for _ in range(m):
        nxt: list = [0] * (len(out) + len(q) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(q):
                nxt[i + j] = nxt[i + j] + a * b
        out = nxt
    return out


def expand_rational(P, Q, m: int, N: int) -> TruncatedSeries:
    """First ``N`` coefficients of ``P / Q**m``.

    ``Q**m`` is expanded exactly, then ``c_n = P_n - sum_{k>=1} (Q**m)_k c_{n-k}``.
    ``P`` and ``Q`` are coefficient lists (or IntPolynomials) in the series
    variable; entries may themselves be polynomials in another variable.
    """
    if m < 1:
        raise ValueError(f"exponent must be at least 1, got {m}")
    if N < 0:
        raise ValueError(f"length must be non-negative, got {N}")
    p, q = _coeffs(P), _coeffs(Q)
    if not q or not q[0] == 1:
        raise ValueError("denominator must have constant term 1")
    qm = _poly_power(q, m)
    out: list = []
    for n in range(N):
        c = p[n] if n < len(p) else 0
        for k in range(1, min(n, len(qm) - 1) + 1):
            if qm[k]:
                c = c - qm[k] * out[n - k]
        out.append(c)
    return TruncatedSeries(out)
