"""Dense univariate polynomials with integer coefficients."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import zip_longest


class IntPolynomial:
    """Immutable dense polynomial; ``coeffs[i]`` is the coefficient of ``x**i``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    Equality also accepts plain sequences and ints, which makes the class
    usable as a coefficient ring alongside ``int``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPolynomial:
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial.constant(other).coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == IntPolynomial(other).coeffs
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @staticmethod
    def _coerce(other) -> IntPolynomial | None:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        return None

    def __add__(self, other) -> IntPolynomial:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return IntPolynomial(a + b for a, b in zip_longest(self.coeffs, o.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> IntPolynomial:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> IntPolynomial:
        return (-self) + other

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        if k < 0:
            raise ValueError("negative exponent")
        result, base = IntPolynomial.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self) -> IntPolynomial:
        return poly_derivative(self)

    def __call__(self, y: int) -> int:
        return poly_eval(self, y)


def as_poly(p: IntPolynomial | Sequence[int]) -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial(p)


def poly_eval(p: IntPolynomial | Sequence[int], y: int) -> int:
    """Exact value of ``p`` at ``y`` by Horner's rule."""
    acc = 0
    for c in reversed(as_poly(p).coeffs):
        acc = acc * y + c
    return acc


def poly_derivative(p: IntPolynomial | Sequence[int]) -> IntPolynomial:
    cs = as_poly(p).coeffs
    return IntPolynomial(i * c for i, c in enumerate(cs) if i)
