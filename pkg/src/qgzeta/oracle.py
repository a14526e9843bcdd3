"""Brute-force checks that share no evaluation path with the production code.

* ``direct_zeta_sum`` lists the quantum eigenvalues ladder by ladder and sums
  k^{-2s} directly (Re s > 1/2), with a short Euler-Maclaurin tail.
* ``multiplicity_by_rank`` gets the Dirichlet multiplicities from exact ranks
  of the incidence matrices Q and M, never touching an eigensolver.
* ``hurwitz_zeta_fourier`` / ``hurwitz_pair_fourier`` use the Fourier form of
  the Hurwitz zeta function on Re z < 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError
from .graph import Graph
from .quantum import TransferredSpectrum, ZetaValue, quantum_zeta
from .special import EPS, EvalResult, cosine_series, log_gamma, sin_pi, sine_series

# B_2/2!, B_4/4!, B_6/6!, B_8/8! written out so the oracle has no shared tables
_TAIL_COEFFS = (1 / 12, -1 / 720, 1 / 30240, -1 / 1209600)


@dataclass(frozen=True)
class IncidenceMatrices:
    Q: np.ndarray  # +1 where the edge coordinate is 0, -1 where it is L
    M: np.ndarray  # 1 where the edge touches the vertex
    D: np.ndarray  # diagonal degree matrix


def incidence_matrices(g: Graph) -> IncidenceMatrices:
    q = np.zeros((g.vertex_count, g.edge_count), dtype=int)
    m = np.zeros((g.vertex_count, g.edge_count), dtype=int)
    for e, (u, v) in enumerate(g.edges):
        q[u, e], q[v, e] = 1, -1
        m[u, e] = m[v, e] = 1
    return IncidenceMatrices(q, m, np.diag(g.degrees).astype(int))


def integer_rank(matrix: np.ndarray | Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    rows = [[int(x) for x in row] for row in np.asarray(matrix)]
    if not rows:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        piv = rows[rank][col]
        for r in range(rank + 1, n_rows):
            rows[r] = [(piv * rows[r][c] - rows[r][col] * rows[rank][c]) // prev for c in range(n_cols)]
        prev = piv
        rank += 1
        if rank == n_rows:
            break
    return rank


def kernel_dimensions(g: Graph) -> dict[str, int]:
    """dim ker of Q, Q^T, M, M^T."""
    inc = incidence_matrices(g)
    rq, rm = integer_rank(inc.Q), integer_rank(inc.M)
    return {
        "Q": g.edge_count - rq,
        "QT": g.vertex_count - rq,
        "M": g.edge_count - rm,
        "MT": g.vertex_count - rm,
    }


def multiplicity_by_rank(g: Graph) -> tuple[int, int]:
    """Dirichlet multiplicities (n even, n odd) as sine-span plus cosine-span dimensions.

    ker Δ = ker Q^T and ker(Δ - 2I) = ker M^T, so every piece is a rank.
    """
    k = kernel_dimensions(g)
    return k["Q"] + k["QT"], k["M"] + k["MT"]


def laplacian_from_incidence(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """D^{-1} Q Q^T and 2I - D^{-1} M M^T as exact rationals, returned as float arrays."""
    inc = incidence_matrices(g)
    qqt = inc.Q @ inc.Q.T
    mmt = inc.M @ inc.M.T
    n = g.vertex_count
    a = np.array([[float(Fraction(int(qqt[i, j]), g.degrees[i])) for j in range(n)] for i in range(n)])
    b = np.array(
        [[float(2 * (i == j) - Fraction(int(mmt[i, j]), g.degrees[i])) for j in range(n)] for i in range(n)]
    )
    return a, b


def _ladders(ts: TransferredSpectrum) -> list[tuple[float, int]]:
    """(offset c, multiplicity) pairs: the ladder (2π/L)(n + c), n >= 0."""
    out: list[tuple[float, int]] = []
    for a, lam in zip(ts.phases, ts.discrete.eigenvalues):
        if lam == 0.0 or lam == 2.0:
            continue  # Dirichlet values are counted through the multiplicities
        out.append((a, 1))        # 2nπ/L + k, n >= 0
        out.append((1.0 - a, 1))  # 2nπ/L - k, n >= 1
    if ts.mult_even:
        out.append((1.0, ts.mult_even))  # 2nπ/L, n >= 1
    if ts.mult_odd:
        out.append((0.5, ts.mult_odd))   # (2n+1)π/L, n >= 0
    return out


def _tail(z: complex, x: float) -> tuple[complex, float]:
    """Σ_{n>=N} (n + c)^{-z} with x = N + c: integral, half term, three corrections; bound = fourth."""
    xz = cmath.exp(-z * math.log(x))
    total = x * xz / (z - 1.0) + 0.5 * xz
    poch = z
    power = xz / x
    for k, coef in enumerate(_TAIL_COEFFS, start=1):
        term = coef * poch * power
        if k == len(_TAIL_COEFFS):
            return total, abs(term)
        total += term
        poch *= (z + 2 * k - 1) * (z + 2 * k)
        power /= x * x
    raise AssertionError("unreachable")


def direct_zeta_sum(
    ts: TransferredSpectrum, s: complex, tail_tol: float = 1e-12, n_max: int | None = None
) -> ZetaValue:
    """Σ' k^{-2s} over the enumerated quantum spectrum, for Re s > 1/2.

    Every nonzero discrete eigenvalue away from 2 contributes the ladders
    2nπ/L + k_j and 2nπ/L - k_j; (2nπ/L)^2 and ((2n+1)π/L)^2 enter with
    multiplicities ``mult_even`` and ``mult_odd``.  Each ladder is summed
    explicitly for its first ``n_max`` rungs (eigenvalues merged in ascending
    order); the rest is an Euler-Maclaurin tail whose remainder bound, plus a
    rounding allowance, is the reported error.
    """
    s = complex(s)
    if s.real <= 0.5:
        raise DomainError(f"direct summation needs Re(s) > 1/2, got s = {s}")
    z = 2.0 * s
    unit = 2.0 * math.pi / ts.edge_length
    ladders = _ladders(ts)
    weight = sum(mult for _, mult in ladders)

    if n_max is None:
        n_max = 64
        while max(_tail(z, n_max + c)[1] for c, _ in ladders) * weight >= tail_tol:
            n_max *= 2
            if n_max > 1 << 24:
                break

    rungs = np.arange(n_max, dtype=float)
    values = np.concatenate([unit * (rungs + c) for c, _ in ladders])
    mults = np.concatenate([np.full(n_max, mult, dtype=float) for _, mult in ladders])
    order = np.argsort(values, kind="stable")
    values, mults = values[order], mults[order]
    terms = mults * np.exp(-z * np.log(values))
    head = complex(math.fsum(terms.real), math.fsum(terms.imag))

    unit_pow = cmath.exp(-z * math.log(unit))
    tail = 0j
    bound = 0.0
    for c, mult in ladders:
        t, b = _tail(z, n_max + c)
        tail += mult * t
        bound += mult * b
    tail *= unit_pow
    bound *= abs(unit_pow)
    value = head + tail
    rounding = 4.0 * EPS * float(np.sum(np.abs(terms))) * (1.0 + abs(z) * math.log(values[-1]))
    if s.imag == 0.0:
        value = complex(value.real)
    return ZetaValue(
        s, value, "direct-sum", bound + rounding, {"n_max": n_max, "explicit_terms": int(values.size)}
    )


def finite_difference_deriv(f: Callable[[float], float], x0: float, h: float) -> float:
    """Central difference (f(x0 + h) - f(x0 - h)) / 2h."""
    return (f(x0 + h) - f(x0 - h)) / (2.0 * h)


def hurwitz_zeta_fourier(z: complex, a: float, tol: float = 1e-12) -> EvalResult:
    """ζ_H(z, a) on Re z < 0, 0 < a <= 1, from its Fourier expansion.

    2 Γ(1-z) / (2π)^{1-z} [sin(zπ/2) Σ cos(2πna)/n^{1-z} + cos(zπ/2) Σ sin(2πna)/n^{1-z}].
    """
    z = complex(z)
    if z.real >= 0.0:
        raise DomainError(f"Fourier form needs Re(z) < 0, got {z}")
    if not 0.0 < a <= 1.0:
        raise DomainError(f"a must lie in (0, 1], got {a}")
    pref = 2.0 * cmath.exp(log_gamma(1.0 - z) - (1.0 - z) * math.log(2.0 * math.pi))
    theta = 2.0 * math.pi * a
    sz, cz = sin_pi(z / 2.0), cmath.cos(math.pi * z / 2.0)
    if a == 1.0:
        cos_part = EvalResult(_riemann_by_series(1.0 - z), 0.0)
        sin_part = EvalResult(0j, 0.0)
    else:
        cos_part = cosine_series(1.0 - z, theta, tol=tol / max(1.0, abs(pref)))
        sin_part = sine_series(1.0 - z, theta, tol=tol / max(1.0, abs(pref)))
    value = pref * (sz * cos_part.value + cz * sin_part.value)
    err = abs(pref) * (abs(sz) * cos_part.abs_error_estimate + abs(cz) * sin_part.abs_error_estimate)
    return EvalResult(value, err + 8 * EPS * abs(value))


def _riemann_by_series(w: complex) -> complex:
    # Σ n^{-w} for Re w > 1 by plain summation with an integral tail; only used at a = 1
    n = np.arange(1, 200001, dtype=float)
    head = complex(np.sum(np.exp(-w * np.log(n))))
    x = 200000.5
    return head + cmath.exp((1.0 - w) * math.log(x)) / (w - 1.0)


def hurwitz_pair_fourier(s: complex, a: float, tol: float = 1e-12) -> EvalResult:
    """ζ_H(2s, a) + ζ_H(2s, 1-a) for Re s < 0 as 2Γ(1-2s)(2π)^{2s}/π sin(sπ) Σ n^{2s-1} cos(2πna)."""
    s = complex(s)
    if s.real >= 0.0:
        raise DomainError(f"Fourier form needs Re(s) < 0, got {s}")
    if not 0.0 < a < 1.0:
        raise DomainError(f"a must lie in (0, 1), got {a}")
    pref = 2.0 * cmath.exp(log_gamma(1.0 - 2.0 * s) + 2.0 * s * math.log(2.0 * math.pi)) / math.pi * sin_pi(s)
    series = cosine_series(1.0 - 2.0 * s, 2.0 * math.pi * a, tol=tol / max(1.0, abs(pref)))
    value = pref * series.value
    return EvalResult(value, abs(pref) * series.abs_error_estimate + 8 * EPS * abs(value))


def pole_residue(ts: TransferredSpectrum, offsets: tuple[float, float] = (1e-3, 1e-4)) -> float:
    """Linear extrapolation to ε = 0 of ε 𝒵(1/2 + ε)."""
    e1, e2 = offsets
    f1 = e1 * quantum_zeta(ts, 0.5 + e1).value.real
    f2 = e2 * quantum_zeta(ts, 0.5 + e2).value.real
    return (e1 * f2 - e2 * f1) / (e1 - e2)
