"""Fibonacci and Lucas numbers along residue classes, and their convolutions.

For a step ``d >= 1`` and offset ``h`` the sequence ``F_{nd+h}`` has the
rational generating function

    (F_h + (-1)^h F_{d-h} z) / (1 - L_d z + (-1)^d z^2)

and the Lucas analogue has numerator ``L_h + (-1)^(h-1) L_{d-h} z``. Raising it
to the power ``s+1`` gives the s-fold convolution, whose coefficients have a
closed form in terms of ``V_n^{(s)}(L_d; eps)`` with ``eps = (-1)^(d-1)``.

Every closed form here has an independent counterpart: :func:`section_terms`
for the generating function, :func:`conv_oracle` and :func:`conv_rational`
for the convolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .chebyshev import binomial, monic_signed_u_value
from .polynomial import IntPolynomial
from .seqcore import fib, lucas
from .series import expand_rational, series_pow


class Kind(str, Enum):
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"


def _kind(kind: Kind | str) -> Kind:
    return Kind(kind)


def _check_step(d: int) -> None:
    if d < 1:
        raise ValueError(f"step d must be >= 1, got {d}")


@dataclass(frozen=True)
class SectionParams:
    d: int
    h: int = 0
    s: int = 0

    def __post_init__(self) -> None:
        _check_step(self.d)
        if self.s < 0:
            raise ValueError(f"convolution order s must be >= 0, got {self.s}")

    @property
    def eps(self) -> int:
        return 1 if self.d % 2 else -1


@dataclass(frozen=True)
class SectionGF:
    num: IntPolynomial
    den: IntPolynomial
    kind: Kind = Kind.FIBONACCI


def _numerator_pair(d: int, h: int, kind: Kind) -> tuple[int, int]:
    if kind is Kind.FIBONACCI:
        c1 = fib(d - h)
        return fib(h), c1 if h % 2 == 0 else -c1
    c1 = lucas(d - h)
    return lucas(h), -c1 if h % 2 == 0 else c1


def section_gf(d: int, h: int, kind: Kind | str = Kind.FIBONACCI) -> SectionGF:
    """Numerator and denominator of ``sum_n X_{nd+h} z^n`` for X = F or L."""
    _check_step(d)
    kind = _kind(kind)
    c0, c1 = _numerator_pair(d, h, kind)
    den = IntPolynomial([1, -lucas(d), -1 if d % 2 else 1])
    return SectionGF(IntPolynomial([c0, c1]), den, kind)


def section_terms(p: SectionParams, kind: Kind | str = Kind.FIBONACCI, N: int = 0) -> list[int]:
    """``[X_{nd+h} for n in range(N)]`` straight from the sequence itself."""
    seq = fib if _kind(kind) is Kind.FIBONACCI else lucas
    return [seq(n * p.d + p.h) for n in range(N)]


def _v_values(p: SectionParams, N: int) -> list[int]:
    y = lucas(p.d)
    return [monic_signed_u_value(n, p.s, p.eps, y) for n in range(N)]


def _weights(p: SectionParams, kind: Kind) -> list[int]:
    # weight of z^j in the numerator raised to s+1; Python's 0**0 == 1 is the
    # convention that lets h = 0 keep only the j = s+1 term
    c0, c1 = _numerator_pair(p.d, p.h, kind)
    e = p.s + 1
    return [binomial(e, j) * c0 ** (e - j) * c1**j for j in range(e + 1)]


def _combine(weights: list[int], v: list[int], n: int) -> int:
    return sum(w * v[n - j] for j, w in enumerate(weights) if j <= n)


def conv_coeff(p: SectionParams, n: int, kind: Kind | str = Kind.FIBONACCI) -> int:
    """Coefficient of ``z**n`` in the (s+1)-st power of the section's generating function."""
    if n < 0:
        raise ValueError(f"index n must be >= 0, got {n}")
    y = lucas(p.d)
    total = 0
    for j, w in enumerate(_weights(p, _kind(kind))):
        if w:
            total += w * monic_signed_u_value(n - j, p.s, p.eps, y)
    return total


def conv_terms(p: SectionParams, N: int, kind: Kind | str = Kind.FIBONACCI) -> list[int]:
    """``[conv_coeff(p, n) for n in range(N)]``, sharing the V evaluations."""
    weights = _weights(p, _kind(kind))
    v = _v_values(p, N)
    return [_combine(weights, v, n) for n in range(N)]


def conv_oracle(p: SectionParams, N: int, kind: Kind | str = Kind.FIBONACCI) -> list[int]:
    """Convolution by brute force: the (s+1)-st Cauchy power of the raw terms."""
    return list(series_pow(section_terms(p, kind, N), p.s + 1))


def conv_rational(p: SectionParams, N: int, kind: Kind | str = Kind.FIBONACCI) -> list[int]:
    """Convolution by expanding ``num**(s+1) / den**(s+1)`` as a series."""
    gf = section_gf(p.d, p.h, kind)
    return list(expand_rational(gf.num ** (p.s + 1), gf.den, p.s + 1, N))


def h0_shortcut(d: int, s: int, n: int) -> int:
    """For ``h = 0``: ``F_d**(s+1) * V_{n-s-1}^{(s)}(L_d; eps)``."""
    p = SectionParams(d, 0, s)
    if n < 0:
        raise ValueError(f"index n must be >= 0, got {n}")
    return fib(d) ** (s + 1) * monic_signed_u_value(n - s - 1, s, p.eps, lucas(d))


ROUTES = {
    "closed": conv_terms,
    "oracle": conv_oracle,
    "rational": conv_rational,
}
