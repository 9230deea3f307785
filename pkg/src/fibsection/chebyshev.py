"""Chebyshev polynomials of the second kind and their higher-order relatives.

Three families share one set of explicit binomial sums:

* ``U_n^{(s)}(x)``: coefficients of ``1/(1 - 2tx + t^2)^(s+1)``; ``s = 0`` is
  the classical ``U_n``.
* the signed family, coefficients of ``1/(1 - 2tx - eps*t^2)^(s+1)``, which
  reduces to ``U_n^{(s)}`` at ``eps = -1``.
* the monic-argument family ``V_n^{(s)}(y; eps)``, coefficients of
  ``1/(1 - ty - eps*t^2)^(s+1)``. It is the signed family under ``2x = y`` and
  has integer coefficients with no powers of two, which makes it the natural
  thing to evaluate at an integer such as a Lucas number.

Negative degree indices give the zero polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .polynomial import IntPolynomial, poly_derivative, poly_eval

__all__ = [
    "ChebParams",
    "IntPolynomial",
    "binomial",
    "cheb_u",
    "gegen_u_explicit",
    "signed_u_explicit",
    "monic_signed_u",
    "monic_signed_u_value",
    "poly_eval",
    "poly_derivative",
]


def _check_eps(eps: int) -> None:
    if eps not in (-1, 1):
        raise ValueError(f"eps must be -1 or +1, got {eps!r}")


@dataclass(frozen=True)
class ChebParams:
    n: int
    s: int = 0
    eps: int = -1

    def __post_init__(self) -> None:
        if self.n < 0 or self.s < 0:
            raise ValueError(f"n and s must be non-negative, got n={self.n}, s={self.s}")
        _check_eps(self.eps)


def binomial(a: int, b: int) -> int:
    """C(a, b), zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def cheb_u(n: int) -> IntPolynomial:
    """``U_n(x)`` from ``U_n = 2x U_{n-1} - U_{n-2}``, ``U_0 = 1``, ``U_1 = 2x``."""
    if n < 0:
        return IntPolynomial()
    two_x = IntPolynomial([0, 2])
    prev, cur = IntPolynomial([1]), two_x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def _coefficients(n: int, s: int, eps: int, scaled: bool) -> list[int]:
    # Only powers m = 2k + (n % 2) occur. With half = n // 2 the sums read
    #   even n: eps^(half-k) C(half+k+s,   2k+s)   C(2k+s,   s) [2^(2k)]
    #   odd n:  eps^(half-k) C(half+k+s+1, 2k+s+1) C(2k+s+1, s) [2^(2k+1)]
    half, r = divmod(n, 2)
    out = [0] * (n + 1)
    for k in range(half + 1):
        m = 2 * k + r
        c = binomial(half + k + s + r, m + s) * binomial(m + s, s)
        if eps == -1 and (half - k) % 2:
            c = -c
        if scaled:
            c <<= m
        out[m] = c
    return out


def signed_u_explicit(n: int, s: int, eps: int) -> IntPolynomial:
    """Coefficients of ``t**n`` in ``(1 - 2tx - eps*t^2)**-(s+1)``, as a polynomial in x."""
    _check_eps(eps)
    if s < 0:
        raise ValueError(f"s must be non-negative, got {s}")
    if n < 0:
        return IntPolynomial()
    return IntPolynomial(_coefficients(n, s, eps, scaled=True))


def gegen_u_explicit(n: int, s: int) -> IntPolynomial:
    """``U_n^{(s)}(x)`` assembled from the explicit binomial sums."""
    return signed_u_explicit(n, s, -1)


def monic_signed_u(n: int, s: int, eps: int) -> IntPolynomial:
    """``V_n^{(s)}(y; eps)``, coefficient of ``t**n`` in ``(1 - ty - eps*t^2)**-(s+1)``."""
    _check_eps(eps)
    if s < 0:
        raise ValueError(f"s must be non-negative, got {s}")
    if n < 0:
        return IntPolynomial()
    return IntPolynomial(_coefficients(n, s, eps, scaled=False))


def monic_signed_u_value(n: int, s: int, eps: int, y: int) -> int:
    """``V_n^{(s)}(y; eps)`` as an integer; zero for ``n < 0``."""
    if n < 0:
        _check_eps(eps)
        return 0
    return poly_eval(monic_signed_u(n, s, eps), y)
