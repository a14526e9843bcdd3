import math
from fractions import Fraction

import mpmath as mp
import numpy as np
import pytest
import scipy.special
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qgzeta import special as sp
from qgzeta.errors import DomainError, OrderTooLarge, PoleAtNonpositiveInteger, PoleAtOne

mp.mp.dps = 30


def close(value, ref, rel=1e-13, abs_=0.0):
    return abs(complex(value) - complex(ref)) <= rel * abs(complex(ref)) + abs_


reals = st.floats(-12.0, 12.0, allow_nan=False)
imags = st.floats(-8.0, 8.0, allow_nan=False)
offsets = st.floats(1e-3, 1.0, allow_nan=False)


# Bernoulli

def test_bernoulli_numbers_known():
    assert sp.bernoulli_number(0) == 1
    assert sp.bernoulli_number(1) == Fraction(-1, 2)
    assert sp.bernoulli_number(2) == Fraction(1, 6)
    assert sp.bernoulli_number(12) == Fraction(-691, 2730)
    assert all(sp.bernoulli_number(n) == 0 for n in range(3, 61, 2))


@pytest.mark.parametrize("n", [2, 10, 20, 40, 60])
def test_bernoulli_numbers_match_mpmath(n):
    assert float(sp.bernoulli_number(n)) == pytest.approx(float(mp.bernoulli(n)), rel=1e-15)


def test_bernoulli_order_limit():
    with pytest.raises(OrderTooLarge):
        sp.bernoulli_number(61)
    with pytest.raises(OrderTooLarge):
        sp.bernoulli_polynomial(61, 0.3)


def test_b2_quarter():
    assert sp.bernoulli_polynomial(2, 0.25) == -1 / 48


@settings(max_examples=80, deadline=None)
@given(n=st.integers(0, 20), x=st.floats(0.0, 1.0))
def test_bernoulli_polynomial_matches_mpmath(n, x):
    assert close(sp.bernoulli_polynomial(n, x), mp.bernpoly(n, x), rel=1e-14, abs_=1e-15)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 20), x=st.floats(0.0, 1.0))
def test_bernoulli_reflection(n, x):
    # B_n(1 - x) = (-1)^n B_n(x)
    lhs = sp.bernoulli_polynomial(n, 1.0 - x)
    rhs = (-1) ** n * sp.bernoulli_polynomial(n, x)
    assert lhs == pytest.approx(rhs, abs=1e-12)


# gamma

@settings(max_examples=100, deadline=None)
@given(x=reals, y=imags)
def test_log_gamma_matches_mpmath(x, y):
    z = complex(x, y)
    assume(abs(z - round(x)) > 1e-3 or x > 0.5)
    ref = complex(mp.loggamma(mp.mpc(x, y)))
    got = sp.log_gamma(z)
    # on the negative real axis the two sides of the cut differ by 2πi
    turns = round((got.imag - ref.imag) / (2 * math.pi)) if y == 0.0 else 0
    assert close(got - 2j * math.pi * turns, ref, rel=1e-13, abs_=1e-13)


def test_gamma_values():
    assert sp.gamma(5).real == 24.0
    assert close(sp.gamma(0.5), math.sqrt(math.pi))
    assert close(sp.gamma(-1.5), 4 * math.sqrt(math.pi) / 3)
    assert close(sp.gamma(2 + 3j), complex(scipy.special.gamma(2 + 3j)), rel=1e-12)
    with pytest.raises(PoleAtNonpositiveInteger):
        sp.gamma(-2)


def test_sin_pi_exact():
    assert sp.sin_pi(3) == 0
    assert sp.sin_pi(-1.5) == 1
    assert sp.sin_pi(0.5) == 1
    assert sp.sin_pi(2.5) == 1
    assert sp.sin_pi(1.5) == -1


# Riemann zeta and eta

@pytest.mark.parametrize(
    "z, ref",
    [
        (2, math.pi**2 / 6),
        (4, math.pi**4 / 90),
        (0, -0.5),
        (-1, -1 / 12),
        (-3, 1 / 120),
        (-2, 0.0),
        (-10, 0.0),
    ],
)
def test_riemann_zeta_exact_values(z, ref):
    assert sp.riemann_zeta(z).value.real == pytest.approx(ref, rel=1e-14, abs=1e-16)


def test_riemann_zeta_derivative_at_zero():
    assert sp.riemann_zeta_deriv0() == pytest.approx(float(mp.zeta(0, derivative=1)), rel=1e-15)


def test_riemann_zeta_pole():
    with pytest.raises(PoleAtOne):
        sp.riemann_zeta(1)


@settings(max_examples=150, deadline=None)
@given(x=st.floats(-20.0, 20.0), y=st.floats(-30.0, 30.0))
def test_riemann_zeta_matches_mpmath(x, y):
    z = complex(x, y)
    assume(abs(z - 1) > 1e-3)
    r = sp.riemann_zeta(z)
    ref = complex(mp.zeta(mp.mpc(x, y)))
    assert abs(r.value - ref) <= max(r.abs_error_estimate, 1e-300) + 1e-15 * abs(ref)
    assert close(r.value, ref, rel=1e-11, abs_=1e-15)


@settings(max_examples=60, deadline=None)
@given(r=st.floats(-0.2, 0.2), t=st.floats(0, 2 * math.pi), scale=st.sampled_from([1.0, 1e-4, 1e-9]))
def test_riemann_zeta_near_zero(r, t, scale):
    z = complex(r * scale * math.cos(t), r * scale * math.sin(t))
    assert close(sp.riemann_zeta(z).value, complex(mp.zeta(mp.mpc(z.real, z.imag))), rel=1e-13)


@pytest.mark.parametrize("z", [1, 0.5, 2, 0, -1, -2.5 + 1j, 3 + 10j])
def test_dirichlet_eta_matches_mpmath(z):
    ref = complex(mp.altzeta(mp.mpc(complex(z).real, complex(z).imag)))
    assert close(sp.dirichlet_eta(z).value, ref, rel=1e-13, abs_=1e-16)


# Hurwitz

@settings(max_examples=200, deadline=None)
@given(x=st.floats(-10.0, 12.0), y=imags, a=offsets)
def test_hurwitz_matches_mpmath_with_honest_error(x, y, a):
    z = complex(x, y)
    assume(abs(z - 1) > 1e-3)
    r = sp.hurwitz_zeta(z, a)
    ref = complex(mp.zeta(mp.mpc(x, y), a))
    assert abs(r.value - ref) <= r.abs_error_estimate + 1e-15 * abs(ref)
    assert close(r.value, ref, rel=1e-7, abs_=1e-12)


@settings(max_examples=60, deadline=None)
@given(r=st.integers(0, 8), a=offsets)
def test_hurwitz_negative_integers_are_bernoulli(r, a):
    expected = -sp.bernoulli_polynomial(r + 1, a) / (r + 1)
    assert sp.hurwitz_zeta(-r, a).value.real == pytest.approx(expected, abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(x=st.floats(1.5, 10.0), a=st.floats(0.05, 1.0))
def test_hurwitz_matches_scipy_on_real_axis(x, a):
    assert close(sp.hurwitz_zeta(x, a).value.real, scipy.special.zeta(x, a), rel=1e-13)


@settings(max_examples=60, deadline=None)
@given(x=st.integers(-6000, 6000).map(lambda k: k / 1000), a=st.floats(0.05, 0.95))
def test_hurwitz_shift_relation(x, a):
    # ζ_H(z, a) = a^{-z} + ζ_H(z, a + 1)
    assume(abs(x - 1) > 1e-2)
    lhs = sp.hurwitz_zeta(x, a).value
    rhs = a ** (-x) + complex(mp.zeta(x, a + 1))
    assert close(lhs, rhs, rel=1e-10, abs_=1e-12)


def test_hurwitz_at_one_is_riemann():
    for z in (2.0, 0.3, -1.5, 2 + 3j):
        assert close(sp.hurwitz_zeta(z, 1.0).value, sp.riemann_zeta(z).value, rel=1e-12)


def test_hurwitz_domain():
    with pytest.raises(PoleAtOne):
        sp.hurwitz_zeta(1, 0.5)
    with pytest.raises(DomainError):
        sp.hurwitz_zeta(2, 0.0)
    with pytest.raises(DomainError):
        sp.hurwitz_zeta(2, 1.5)


@pytest.mark.parametrize("a", [0.1, 0.25, 0.5, 0.75, 1.0])
def test_hurwitz_derivative_matches_mpmath(a):
    assert sp.hurwitz_zeta_deriv0(a) == pytest.approx(float(mp.zeta(0, a, derivative=1)), rel=1e-14)


# Chebyshev

@settings(max_examples=80, deadline=None)
@given(n=st.integers(0, 30), x=st.floats(-1.0, 1.0))
def test_chebyshev_recurrence_matches_cosine(n, x):
    assert sp.chebyshev_T(n, x) == pytest.approx(math.cos(n * math.acos(x)), abs=1e-12)


@settings(max_examples=80, deadline=None)
@given(n=st.integers(0, 30), x=st.floats(-1.0, 1.0))
def test_chebyshev_shifted_expansion(n, x):
    assert sp.chebyshev_T_expansion(n, x) == pytest.approx(float(mp.cos(n * mp.acos(x))), abs=1e-12)


def test_chebyshev_expansion_at_minus_one():
    for n in range(31):
        assert sp.chebyshev_T_expansion(n, -1.0) == (-1.0) ** n


def test_chebyshev_coefficients_sum():
    # at x = 1 only the r = 0 coefficient survives
    for n in range(1, 12):
        assert sp.chebyshev_shifted_coefficients(n)[0] == 1


# oscillatory series

@pytest.mark.parametrize("alpha, theta", [(1.5, 0.3), (0.5, 2.0), (1.2 + 0.7j, 1.0), (3.0, math.pi)])
def test_cosine_and_sine_series(alpha, theta):
    c = sp.cosine_series(alpha, theta)
    s = sp.sine_series(alpha, theta)
    ref = mp.polylog(mp.mpc(complex(alpha).real, complex(alpha).imag), mp.exp(1j * theta))
    ref_m = mp.polylog(mp.mpc(complex(alpha).real, complex(alpha).imag), mp.exp(-1j * theta))
    assert close(c.value, complex((ref + ref_m) / 2), rel=1e-12, abs_=1e-13)
    assert close(s.value, complex((ref - ref_m) / 2j), rel=1e-12, abs_=1e-13)


def test_series_start_offset():
    full = sp.cosine_series(1.5, 0.7).value
    tail = sp.cosine_series(1.5, 0.7, start=11).value
    head = sum(n**-1.5 * math.cos(0.7 * n) for n in range(1, 11))
    assert abs(full - (head + tail)) < 1e-13


def test_series_rejects_bad_arguments():
    with pytest.raises(DomainError):
        sp.cosine_series(-0.5, 1.0)
    with pytest.raises(DomainError):
        sp.cosine_series(1.5, 2 * math.pi)


def test_series_error_estimate_is_honest():
    for alpha in (0.3, 1.0, 2.5):
        r = sp.cosine_series(alpha, 0.9, tol=1e-6)
        ref = complex((mp.polylog(alpha, mp.exp(0.9j)) + mp.polylog(alpha, mp.exp(-0.9j))) / 2)
        assert abs(r.value - ref) <= r.abs_error_estimate
