"""Exact Fibonacci/Lucas d-sections, their convolutions, and the Chebyshev-type
polynomials that give the convolution coefficients in closed form."""

__version__ = "0.1.0"

from .chebyshev import (
    ChebParams,
    cheb_u,
    gegen_u_explicit,
    monic_signed_u,
    signed_u_explicit,
)
from .dsection import (
    Kind,
    SectionGF,
    SectionParams,
    conv_coeff,
    conv_oracle,
    conv_rational,
    conv_terms,
    h0_shortcut,
    section_gf,
    section_terms,
)
from .polynomial import IntPolynomial, poly_derivative, poly_eval
from .seqcore import ALPHA, BETA, GoldenInt, binet_fib_lucas, fib, golden_pow, lucas
from .series import TruncatedSeries, expand_rational, series_mul, series_pow
