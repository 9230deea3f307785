import pytest
import sympy

from fibsection.chebyshev import monic_signed_u_value
from fibsection.dsection import (
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
from fibsection.series import expand_rational

from conftest import fib_by_recursion, lucas_by_recursion

z = sympy.symbols("z")


@pytest.mark.parametrize(
    "d, h, kind, num, den",
    [
        (2, 0, "fibonacci", [0, 1], [1, -3, 1]),
        (3, 2, "fibonacci", [1, 1], [1, -4, -1]),
        (2, 1, "lucas", [1, 1], [1, -3, 1]),
    ],
)
def test_section_gf_examples(d, h, kind, num, den):
    gf = section_gf(d, h, kind)
    assert gf.num == num
    assert gf.den == den
    assert gf.kind is Kind(kind)


def test_section_gf_first_terms():
    gf = section_gf(3, 2)
    assert expand_rational(gf.num, gf.den, 1, 4) == [1, 5, 21, 89]
    gf = section_gf(2, 1, Kind.LUCAS)
    assert expand_rational(gf.num, gf.den, 1, 5) == [1, 4, 11, 29, 76]


def test_section_gf_rejects_nonpositive_step():
    with pytest.raises(ValueError):
        section_gf(0, 1)
    with pytest.raises(ValueError):
        SectionParams(-2, 0, 0)
    with pytest.raises(ValueError):
        SectionParams(2, 0, -1)


@pytest.mark.parametrize(
    "d, h, kind, N, expected",
    [
        (2, 0, "fibonacci", 6, [0, 1, 3, 8, 21, 55]),
        (1, 0, "fibonacci", 5, [0, 1, 1, 2, 3]),
        (2, 1, "lucas", 5, [1, 4, 11, 29, 76]),
    ],
)
def test_section_terms_examples(d, h, kind, N, expected):
    assert section_terms(SectionParams(d, h), kind, N) == expected


@pytest.mark.parametrize("d, h", [(1, 0), (2, 3), (3, -2), (5, 1), (4, 7)])
def test_prop_against_sympy_series(d, h):
    # rational function expanded by sympy, compared with the recursion-only reference
    for kind, seq in ((Kind.FIBONACCI, fib_by_recursion), (Kind.LUCAS, lucas_by_recursion)):
        gf = section_gf(d, h, kind)
        expr = (gf.num[0] + gf.num[1] * z) / (1 + gf.den[1] * z + gf.den[2] * z**2)
        poly = sympy.series(expr, z, 0, 12).removeO()
        assert [int(poly.coeff(z, n)) for n in range(12)] == [seq(n * d + h) for n in range(12)]


def test_prop_identity_sweep():
    for d in range(1, 13):
        for h in range(-3, d + 4):
            for kind in Kind:
                gf = section_gf(d, h, kind)
                assert expand_rational(gf.num, gf.den, 1, 64) == section_terms(
                    SectionParams(d, h), kind, 64
                ), (d, h, kind)


@pytest.mark.parametrize(
    "d, h, s, n, expected", [(2, 1, 1, 4, 145), (2, 0, 1, 3, 6), (3, 2, 0, 2, 21)]
)
def test_conv_coeff_examples(d, h, s, n, expected):
    assert conv_coeff(SectionParams(d, h, s), n) == expected


def test_conv_coeff_hand_combination():
    # d=2, h=1, s=1: numerator (1 - z)^2, so the coefficient is V_4 - 2V_3 + V_2 at y = L_2
    v = [monic_signed_u_value(n, 1, -1, 3) for n in (2, 3, 4)]
    assert v == [25, 90, 300]
    assert v[2] - 2 * v[1] + v[0] == 145


def test_conv_terms_examples():
    assert conv_terms(SectionParams(2, 1, 1), 5) == [1, 4, 14, 46, 145]
    assert conv_terms(SectionParams(2, 0, 1), 6) == [0, 0, 1, 6, 25, 90]
    assert conv_oracle(SectionParams(2, 1, 1), 5) == [1, 4, 14, 46, 145]
    assert conv_oracle(SectionParams(2, 0, 1), 6) == [0, 0, 1, 6, 25, 90]


def test_single_fold_is_the_section():
    for d in range(1, 7):
        for h in range(-2, d + 2):
            p = SectionParams(d, h, 0)
            assert conv_terms(p, 20) == section_terms(p, Kind.FIBONACCI, 20)
            assert conv_oracle(p, 20) == section_terms(p, Kind.FIBONACCI, 20)


def test_conv_terms_agree_with_conv_coeff():
    p = SectionParams(5, 3, 2)
    assert conv_terms(p, 15) == [conv_coeff(p, n) for n in range(15)]


def test_three_routes_agree():
    for d in range(1, 9):
        for h in range(d):
            for s in range(5):
                p = SectionParams(d, h, s)
                closed = conv_terms(p, 40)
                assert closed == conv_oracle(p, 40) == conv_rational(p, 40), (d, h, s)


def test_routes_agree_outside_base_window_and_for_lucas():
    for d, h, s in [(3, -2, 2), (2, 5, 1), (4, 4, 3), (1, -1, 2)]:
        p = SectionParams(d, h, s)
        for kind in Kind:
            closed = conv_terms(p, 25, kind)
            assert closed == conv_oracle(p, 25, kind) == conv_rational(p, 25, kind)


@pytest.mark.parametrize("d, s, n, expected", [(2, 1, 2, 1), (2, 1, 1, 0), (2, 1, 4, 25)])
def test_h0_examples(d, s, n, expected):
    assert h0_shortcut(d, s, n) == expected


def test_h0_collapse():
    for d in range(1, 11):
        for s in range(5):
            p = SectionParams(d, 0, s)
            for n in range(41):
                assert h0_shortcut(d, s, n) == conv_coeff(p, n)


def test_h0_shift_structure():
    for d in range(1, 9):
        for s in range(5):
            terms = conv_terms(SectionParams(d, 0, s), 20)
            assert terms[: s + 1] == [0] * (s + 1)
            assert terms[s + 1] == fib_by_recursion(d) ** (s + 1)


def test_nonnegative_on_sweep():
    for d in range(1, 9):
        for h in range(d + 1):
            for s in range(5):
                assert all(c >= 0 for c in conv_terms(SectionParams(d, h, s), 40))


def test_eps_derived_from_step():
    assert SectionParams(1).eps == 1
    assert SectionParams(2).eps == -1
    assert SectionParams(7).eps == 1
