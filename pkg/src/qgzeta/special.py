"""Special functions needed by the zeta machinery.

Everything here works in double precision and reports an absolute error
estimate alongside each value where a truncated expansion is involved.

* ``riemann_zeta`` uses Borwein's accelerated eta series for Re z >= 1/2 and
  the functional equation elsewhere.
* ``hurwitz_zeta`` uses Euler-Maclaurin summation, which is valid on both
  sides of Re z = 0.
* ``exponential_series`` (and its cosine/sine parts) sums Σ n^{-α} e^{inθ}
  with a summation-by-parts tail, so conditionally convergent Fourier series
  can be evaluated to ~1e-12.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError, NoConvergence, OrderTooLarge, PoleAtNonpositiveInteger, PoleAtOne

EPS = sys.float_info.epsilon
LOG_2PI = math.log(2.0 * math.pi)
MAX_BERNOULLI_ORDER = 60

# Euler-Maclaurin parameters for the Hurwitz zeta function
EM_MIN_HEAD = 10
EM_ORDER = 10
# for Re z < 0 the head is kept short and the correction order raised instead
EM_ORDERS_NEGATIVE = (10, 15, 20, 25, 30)


@dataclass(frozen=True)
class EvalResult:
    value: complex
    abs_error_estimate: float

    def __complex__(self) -> complex:
        return complex(self.value)


def _bernoulli_table(n_max: int) -> tuple[Fraction, ...]:
    # B_1 = -1/2 convention
    b = [Fraction(1)]
    for m in range(1, n_max + 1):
        acc = sum((math.comb(m + 1, k) * b[k] for k in range(m)), Fraction(0))
        b.append(-acc / (m + 1))
    return tuple(b)


BERNOULLI = _bernoulli_table(max(2 * max(EM_ORDERS_NEGATIVE) + 2, MAX_BERNOULLI_ORDER))


def bernoulli_number(n: int) -> Fraction:
    if n < 0 or n > MAX_BERNOULLI_ORDER:
        raise OrderTooLarge(f"Bernoulli number order must be in [0, {MAX_BERNOULLI_ORDER}], got {n}")
    return BERNOULLI[n]


def bernoulli_polynomial(n: int, x: float) -> float:
    """B_n(x) = Σ_k C(n, k) B_k x^{n-k}, summed exactly in rationals."""
    if n < 0 or n > MAX_BERNOULLI_ORDER:
        raise OrderTooLarge(f"Bernoulli polynomial order must be in [0, {MAX_BERNOULLI_ORDER}], got {n}")
    xq = Fraction(x)
    total = sum((math.comb(n, k) * BERNOULLI[k] * xq ** (n - k) for k in range(n + 1)), Fraction(0))
    return float(total)


# gamma

_STIRLING = tuple(
    float(BERNOULLI[2 * k] / (2 * k * (2 * k - 1))) for k in range(1, 13)
)


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def log_gamma(z: complex) -> complex:
    """log Γ(z), continuous off the negative real axis (agrees with ln Γ for z > 0)."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleAtNonpositiveInteger(f"Γ has a pole at z = {z.real:g}")
    if z.imag == 0.0 and z.real > 0.0:
        return complex(math.lgamma(z.real))
    shift = 0j
    while z.real < 15.0:
        shift += cmath.log(z)
        z += 1.0
    inv = 1.0 / z
    inv2 = inv * inv
    series = 0j
    power = inv
    for c in _STIRLING:
        series += c * power
        power *= inv2
    return (z - 0.5) * cmath.log(z) - z + 0.5 * LOG_2PI + series - shift


def gamma(z: complex) -> complex:
    z = complex(z)
    if z.imag == 0.0 and not _is_nonpositive_integer(z) and z.real < 171.0:
        return complex(math.gamma(z.real))
    return cmath.exp(log_gamma(z))


def sin_pi(z: complex) -> complex:
    """sin(πz) with exact zeros at the integers and exact ±1 at half-integers."""
    z = complex(z)
    if z.imag == 0.0:
        x = z.real
        r = math.fmod(x, 2.0)
        if r == math.floor(r):
            return 0j
        if 2.0 * r == math.floor(2.0 * r):
            return complex(1.0 if r in (0.5, -1.5) else -1.0)
        return complex(math.sin(math.pi * r))
    # reduce the real part exactly first so that zeros near large integers keep their digits
    return cmath.sin(math.pi * complex(math.fmod(z.real, 2.0), z.imag))


# Riemann zeta and Dirichlet eta

def _borwein_terms(t: float) -> int:
    # (3 + sqrt 8)^n must beat 3 (1 + 2|t|) exp(π|t|/2) by ~17 decades
    need = math.log(3.0 * (1.0 + 2.0 * t)) + 0.5 * math.pi * t + 17.0 * math.log(10.0)
    return max(24, math.ceil(need / math.log(3.0 + math.sqrt(8.0))))


@lru_cache(maxsize=64)
def _borwein_weights(n: int) -> np.ndarray:
    d = []
    acc = Fraction(0)
    for i in range(n + 1):
        acc += Fraction(math.factorial(n + i - 1) * 4**i, math.factorial(n - i) * math.factorial(2 * i))
        d.append(n * acc)
    dn = d[n]
    w = np.array([float((-1) ** k * (d[k] - dn) / dn) for k in range(n)])
    w.setflags(write=False)
    return w


def _eta_borwein(z: complex) -> EvalResult:
    t = abs(z.imag)
    n = _borwein_terms(t)
    w = _borwein_weights(n)
    k1 = np.arange(1, n + 1, dtype=float)
    if z.imag == 0.0:
        terms = w * k1 ** (-z.real)
    else:
        terms = w * np.exp(-z * np.log(k1))
    value = -complex(np.sum(terms))
    trunc = 3.0 * (1.0 + 2.0 * t) * math.exp(0.5 * math.pi * t) / (3.0 + math.sqrt(8.0)) ** n
    rounding = 4.0 * n * EPS * float(np.sum(np.abs(terms)))
    return EvalResult(value, trunc + rounding)


def _real_if(z: complex, value: complex) -> complex:
    return complex(value.real, 0.0) if z.imag == 0.0 else value


def riemann_zeta(z: complex) -> EvalResult:
    z = complex(z)
    if z == 1:
        raise PoleAtOne("Riemann zeta has a pole at z = 1")
    if z.real >= 0.5:
        factor = 1.0 - cmath.exp((1.0 - z) * math.log(2.0))
        if abs(factor) < 1e-2:
            # 1 - 2^{1-z} vanishes near z = 1 and on Re z = 1; fall back to Euler-Maclaurin
            return hurwitz_zeta(z, 1.0)
        eta = _eta_borwein(z)
        value = eta.value / factor
        return EvalResult(_real_if(z, value), eta.abs_error_estimate / abs(factor) + 4 * EPS * abs(value))
    # ζ(z) = 2^z π^{z-1} sin(πz/2) Γ(1-z) ζ(1-z)
    if z == 0:
        return EvalResult(complex(-0.5), 0.0)
    if abs(z) < 0.25:
        # 1 - z would round away the digits of z and land on the pole of ζ(1 - z)
        return hurwitz_zeta(z, 1.0)
    sin_term = sin_pi(z / 2.0)
    if sin_term == 0:
        return EvalResult(0j, 0.0)  # trivial zeros at -2, -4, ...
    reflected = riemann_zeta(1.0 - z)
    logpref = z * math.log(2.0) + (z - 1.0) * math.log(math.pi) + log_gamma(1.0 - z)
    pref = cmath.exp(logpref) * sin_term
    value = pref * reflected.value
    log_scale = abs(z) * math.log(2.0) + abs(z - 1.0) * math.log(math.pi) + abs(log_gamma(1.0 - z))
    err = abs(pref) * reflected.abs_error_estimate + 8 * EPS * (1.0 + log_scale) * abs(value)
    return EvalResult(_real_if(z, value), err)


def riemann_zeta_deriv0() -> float:
    """ζ'(0) = -ln(2π)/2."""
    return -0.5 * LOG_2PI


def dirichlet_eta(z: complex) -> EvalResult:
    """η(z) = Σ (-1)^{n-1} n^{-z} = (1 - 2^{1-z}) ζ(z), with η(1) = ln 2."""
    z = complex(z)
    if z == 1:
        return EvalResult(complex(math.log(2.0)), 0.0)
    if z.real >= 0.5:
        eta = _eta_borwein(z)
        return EvalResult(_real_if(z, eta.value), eta.abs_error_estimate)
    zeta = riemann_zeta(z)
    factor = 1.0 - cmath.exp((1.0 - z) * math.log(2.0))
    value = factor * zeta.value
    return EvalResult(_real_if(z, value), abs(factor) * zeta.abs_error_estimate + 4 * EPS * abs(value))


# Hurwitz zeta

_EM_COEFFS = tuple(
    float(BERNOULLI[2 * k] / math.factorial(2 * k)) for k in range(1, max(EM_ORDERS_NEGATIVE) + 2)
)


def _cpow(x: float, z: complex) -> complex:
    """x^z for real x > 0."""
    if z.imag == 0.0:
        return complex(x ** z.real)
    return cmath.exp(z * math.log(x))


def _em_cost(z: complex, a: float, n_head: int, order: int, head_scale: float | None = None) -> float:
    """Predicted |truncation| + |rounding| of Euler-Maclaurin with the given head length and order."""
    x = n_head + a
    poch = 1.0
    for i in range(2 * order + 1):
        poch *= abs(z + i)
    omitted = abs(_EM_COEFFS[order]) * poch * x ** (-z.real - 2 * order - 1)
    if head_scale is None:
        head_scale = sum((n + a) ** -z.real for n in range(n_head))
    scale = head_scale + x ** (1.0 - z.real) / abs(z - 1.0)
    return omitted + EPS * scale * (1.0 + abs(z) * math.log(x + 1.0))


def _em_plan(z: complex, a: float) -> tuple[int, int]:
    """(head length, correction order) for the Euler-Maclaurin evaluation."""
    default = max(EM_MIN_HEAD, math.ceil(abs(z)) + EM_MIN_HEAD)
    if z.real >= 0.0:
        return default, EM_ORDER
    # for Re z < 0 the head terms grow like n^{-Re z}; trade truncation against cancellation
    head_scale = np.concatenate(([0.0], np.cumsum((np.arange(default) + a) ** -z.real)))
    plans = [(n, m) for m in EM_ORDERS_NEGATIVE for n in range(default + 1)]
    return min(plans, key=lambda plan: _em_cost(z, a, *plan, head_scale=float(head_scale[plan[0]])))


def hurwitz_zeta(z: complex, a: float) -> EvalResult:
    """ζ_H(z, a) = Σ_{n>=0} (n + a)^{-z}, analytically continued, for 0 < a <= 1.

    Euler-Maclaurin: N head terms, the integral and half-term at N + a, and
    Bernoulli corrections through B_{2M}.  For Re z >= 0, N = |z| + 10 and
    M = 10; for Re z < 0, (N, M) minimise the predicted truncation plus
    cancellation error.  The error estimate is the first omitted correction
    plus a rounding allowance.
    """
    z = complex(z)
    a = float(a)
    if z == 1:
        raise PoleAtOne("Hurwitz zeta has a pole at z = 1")
    if not 0.0 < a <= 1.0:
        raise DomainError(f"Hurwitz zeta parameter a must lie in (0, 1], got {a}")
    n_head, order = _em_plan(z, a)
    mz = -z
    head = 0j
    magnitude = 0.0
    for n in range(n_head):
        term = _cpow(n + a, mz)
        head += term
        magnitude += abs(term)
    x = n_head + a
    xz = _cpow(x, mz)
    integral = x * xz / (z - 1.0)
    total = head + integral + 0.5 * xz
    magnitude += abs(integral) + abs(xz)
    # B_{2k}/(2k)! (z)_{2k-1} x^{-z-2k+1}
    poch = z
    power = xz / x
    inv_x2 = 1.0 / (x * x)
    omitted = 0.0
    for k in range(1, order + 2):
        term = _EM_COEFFS[k - 1] * poch * power
        if k > order:
            omitted = abs(term)
            break
        total += term
        magnitude += abs(term)
        poch *= (z + 2 * k - 1) * (z + 2 * k)
        power *= inv_x2
    rounding = 4.0 * EPS * magnitude * (1.0 + abs(z) * math.log(x + 1.0))
    return EvalResult(_real_if(z, total), omitted + rounding)


def hurwitz_zeta_deriv0(a: float) -> float:
    """∂ζ_H(z, a)/∂z at z = 0, by Lerch's formula log Γ(a) - ln(2π)/2."""
    a = float(a)
    if not 0.0 < a <= 1.0:
        raise DomainError(f"Hurwitz zeta parameter a must lie in (0, 1], got {a}")
    return math.lgamma(a) - 0.5 * LOG_2PI


# Chebyshev polynomials

def chebyshev_T(n: int, x: float) -> float:
    if n < 0:
        raise DomainError(f"Chebyshev degree must be nonnegative, got {n}")
    if n == 0:
        return 1.0
    prev, cur = 1.0, float(x)
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


@lru_cache(maxsize=256)
def chebyshev_shifted_coefficients(n: int) -> tuple[Fraction, ...]:
    """Coefficients c_r with T_n(x) = Σ_r c_r (1 - x)^r, c_r = (-2)^r n/(n+r) C(n+r, 2r)."""
    if n < 0:
        raise DomainError(f"Chebyshev degree must be nonnegative, got {n}")
    if n == 0:
        return (Fraction(1),)
    return tuple(
        Fraction((-2) ** r * n * math.comb(n + r, 2 * r), n + r) for r in range(n + 1)
    )


def chebyshev_T_expansion(n: int, x: float) -> float:
    """T_n(x) from the (1 - x)-power expansion, summed exactly.

    In floating point the alternating terms reach ~1e22 at n = 30, x = -1,
    so the sum is carried out over the rationals and rounded once.
    """
    y = 1 - Fraction(x)
    return float(sum((c * y**r for r, c in enumerate(chebyshev_shifted_coefficients(n))), Fraction(0)))


# Fourier-type cosine series

def _pochhammer_abs(alpha: complex, k: int) -> float:
    out = 1.0
    for i in range(k):
        out *= abs(alpha + i)
    return out


def exponential_series(
    alpha: complex,
    theta: float,
    start: int = 1,
    tol: float = 1e-12,
    order: int = 6,
    max_terms: int = 1 << 22,
) -> EvalResult:
    """Σ_{n>=start} n^{-α} e^{inθ} for Re α > 0 and θ not a multiple of 2π.

    The head is summed directly up to N; the tail is expanded by repeated
    summation by parts against the geometric partial sums of e^{inθ}, which
    yields c w^N Σ_i (-c)^i Δ^i f(N+1) with w = e^{iθ}, c = w/(1-w) and
    Δf(n) = f(n) - f(n+1).  The neglected piece is bounded by
    |c|^K |(α)_K| N^{1-Re α-K} / (Re α + K - 1), and N is doubled until that
    bound is below ``tol``.
    """
    alpha = complex(alpha)
    if alpha.real <= 0.0:
        raise DomainError(f"series needs Re(alpha) > 0, got {alpha}")
    w = cmath.exp(1j * theta)
    if abs(1.0 - w) < 1e-8:
        raise DomainError(f"series needs theta away from multiples of 2π, got {theta}")
    c = w / (1.0 - w)
    ac = abs(c)
    k = order
    pk = _pochhammer_abs(alpha, k)
    p = alpha.real + k

    def bound(n: int) -> float:
        return ac**k * pk * n ** (1.0 - p) / (p - 1.0)

    n_max = max(start + 63, 64)
    while bound(n_max) >= tol:
        n_max *= 2
        if n_max > max_terms:
            raise NoConvergence(
                f"series tail bound {bound(n_max // 2):.3g} above tol {tol:.3g} "
                f"after {n_max // 2} terms"
            )

    def f(n: np.ndarray) -> np.ndarray:
        if alpha.imag == 0.0:
            return (n ** (-alpha.real)).astype(complex)
        return np.exp(-alpha * np.log(n))

    n = np.arange(start, n_max + 1, dtype=float)
    fn = f(n)
    head = complex(np.sum(fn * np.exp(1j * theta * n)))

    # forward differences Δ^i f(N+1), i < k
    fv = f(np.arange(n_max + 1, n_max + 1 + k, dtype=float))
    acc = 0j
    for i in range(k):
        acc += (-c) ** i * complex(fv[0])
        fv = fv[:-1] - fv[1:]
    tail = c * cmath.exp(1j * theta * n_max) * acc

    f0 = abs(complex(f(np.array([float(n_max + 1)]))[0]))
    rounding = EPS * (4.0 * float(np.sum(np.abs(fn))) + 4.0 * f0 * sum(ac ** (i + 1) * 2**i for i in range(k)))
    return EvalResult(head + tail, float(bound(n_max) + rounding))


def cosine_series(alpha: complex, theta: float, start: int = 1, tol: float = 1e-12) -> EvalResult:
    """Σ_{n>=start} n^{-α} cos(nθ)."""
    alpha = complex(alpha)
    plus = exponential_series(alpha, theta, start, tol)
    if alpha.imag == 0.0:
        return EvalResult(complex(plus.value.real), plus.abs_error_estimate)
    minus = exponential_series(alpha, -theta, start, tol)
    return EvalResult(0.5 * (plus.value + minus.value), 0.5 * (plus.abs_error_estimate + minus.abs_error_estimate))


def sine_series(alpha: complex, theta: float, start: int = 1, tol: float = 1e-12) -> EvalResult:
    """Σ_{n>=start} n^{-α} sin(nθ)."""
    alpha = complex(alpha)
    plus = exponential_series(alpha, theta, start, tol)
    if alpha.imag == 0.0:
        return EvalResult(complex(plus.value.imag), plus.abs_error_estimate)
    minus = exponential_series(alpha, -theta, start, tol)
    return EvalResult(
        (plus.value - minus.value) / 2j, 0.5 * (plus.abs_error_estimate + minus.abs_error_estimate)
    )
