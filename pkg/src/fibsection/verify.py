"""Parameter sweeps that check each closed form against its oracle.

Each suite yields ``(case, ok)`` pairs in sorted parameter order, so reports
built from them are reproducible byte for byte.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field

from .chebyshev import monic_signed_u, poly_derivative, signed_u_explicit
from .dsection import (
    Kind,
    SectionParams,
    conv_coeff,
    conv_oracle,
    conv_rational,
    conv_terms,
    h0_shortcut,
    section_gf,
    section_terms,
)
from .polynomial import IntPolynomial
from .seqcore import binet_fib_lucas, fib, lucas
from .series import expand_rational

DEFAULTS = {
    "prop": {"max_d": 12, "terms": 64},
    "theorem": {"max_d": 8, "max_s": 4, "terms": 40},
    "h0": {"max_d": 10, "max_s": 4, "max_n": 40},
    "chebyshev": {"max_n": 50, "max_s": 5},
    "ladder": {"max_n": 40, "max_s": 4},
    "binet": {"max_n": 2000},
}


@dataclass
class Report:
    suite: str
    cases: int = 0
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return self.cases - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0


def prop_cases(max_d: int, terms: int) -> Iterator[tuple[str, bool]]:
    for d in range(1, max_d + 1):
        for h in range(-3, d + 4):
            for kind in Kind:
                gf = section_gf(d, h, kind)
                got = list(expand_rational(gf.num, gf.den, 1, terms))
                want = section_terms(SectionParams(d, h), kind, terms)
                yield f"d={d} h={h} kind={kind.value}", got == want


def theorem_cases(max_d: int, max_s: int, terms: int) -> Iterator[tuple[str, bool]]:
    for d in range(1, max_d + 1):
        for h in range(d):
            for s in range(max_s + 1):
                p = SectionParams(d, h, s)
                closed = conv_terms(p, terms)
                ok = closed == conv_oracle(p, terms) == conv_rational(p, terms)
                yield f"d={d} h={h} s={s}", ok


def h0_cases(max_d: int, max_s: int, max_n: int) -> Iterator[tuple[str, bool]]:
    for d in range(1, max_d + 1):
        for s in range(max_s + 1):
            p = SectionParams(d, 0, s)
            ok = all(h0_shortcut(d, s, n) == conv_coeff(p, n) for n in range(max_n + 1))
            yield f"d={d} s={s}", ok


def chebyshev_cases(max_n: int, max_s: int) -> Iterator[tuple[str, bool]]:
    x = IntPolynomial([0, 1])
    for s in range(max_s + 1):
        for eps in (-1, 1):
            den = [IntPolynomial([1]), -2 * x, IntPolynomial([-eps])]
            series = expand_rational([IntPolynomial([1])], den, s + 1, max_n + 1)
            for n in range(max_n + 1):
                yield f"n={n} s={s} eps={eps:+d}", series[n] == signed_u_explicit(n, s, eps)


def ladder_cases(max_n: int, max_s: int) -> Iterator[tuple[str, bool]]:
    for n in range(1, max_n + 1):
        for s in range(max_s + 1):
            for eps in (-1, 1):
                lhs = poly_derivative(signed_u_explicit(n, s, eps))
                ok = lhs == signed_u_explicit(n - 1, s + 1, eps) * (2 * (s + 1))
                mono = poly_derivative(monic_signed_u(n, s, eps))
                ok = ok and mono == monic_signed_u(n - 1, s + 1, eps) * (s + 1)
                yield f"n={n} s={s} eps={eps:+d}", ok


def binet_cases(max_n: int) -> Iterator[tuple[str, bool]]:
    for n in range(max_n + 1):
        yield f"n={n}", binet_fib_lucas(n) == (fib(n), lucas(n))


SUITES = {
    "prop": prop_cases,
    "theorem": theorem_cases,
    "h0": h0_cases,
    "chebyshev": chebyshev_cases,
    "ladder": ladder_cases,
    "binet": binet_cases,
}


def run_suite(suite: str, **overrides: int | None) -> Report:
    """Run one suite; ``None`` overrides fall back to :data:`DEFAULTS`."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    kwargs = dict(DEFAULTS[suite])
    for key, value in overrides.items():
        if value is not None and key in kwargs:
            kwargs[key] = value
    report = Report(suite)
    for case, ok in SUITES[suite](**kwargs):
        report.cases += 1
        if ok:
            report.passed += 1
        else:
            report.failures.append(case)
    return report
