"""Normalized Laplacian of a discrete graph, its spectrum, and the discrete zeta function."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import EigensolverFailure
from .graph import Graph

DEFAULT_ZERO_TOLERANCE = 1e-9


@dataclass(frozen=True)
class DiscreteSpectrum:
    """Sorted eigenvalues of the normalized Laplacian.

    Eigenvalues within ``zero_tolerance`` of 0 or 2 are stored as exactly 0.0
    or 2.0, and the kernel dimensions count those snapped entries.
    ``edge_count`` travels with the spectrum so that the Betti number is
    available without the graph (e.g. for spectra re-read from JSON).
    """

    eigenvalues: tuple[float, ...]
    kernel_dim_0: int
    kernel_dim_2: int
    zero_tolerance: float
    edge_count: int

    @property
    def vertex_count(self) -> int:
        return len(self.eigenvalues)

    @property
    def betti(self) -> int:
        return self.edge_count - self.vertex_count + 1

    @property
    def nonzero(self) -> tuple[float, ...]:
        return tuple(x for x in self.eigenvalues if x != 0.0)

    @classmethod
    def from_eigenvalues(
        cls,
        values: Sequence[float],
        edge_count: int,
        zero_tolerance: float = DEFAULT_ZERO_TOLERANCE,
    ) -> "DiscreteSpectrum":
        if not 0.0 < zero_tolerance <= 1e-6:
            raise ValueError(f"zero_tolerance must lie in (0, 1e-6], got {zero_tolerance}")
        lam = np.sort(np.asarray(values, dtype=float))
        lo, hi = -zero_tolerance, 2.0 + zero_tolerance
        if lam.size == 0 or lam[0] < lo - 1e-6 or lam[-1] > hi + 1e-6:
            raise ValueError("eigenvalues of a normalized Laplacian must lie in [0, 2]")
        lam = np.clip(lam, 0.0, 2.0)
        lam[lam <= zero_tolerance] = 0.0
        lam[lam >= 2.0 - zero_tolerance] = 2.0
        return cls(
            eigenvalues=tuple(float(x) for x in lam),
            kernel_dim_0=int(np.count_nonzero(lam == 0.0)),
            kernel_dim_2=int(np.count_nonzero(lam == 2.0)),
            zero_tolerance=zero_tolerance,
            edge_count=int(edge_count),
        )


def normalized_laplacian(g: Graph) -> np.ndarray:
    """Return I - D^{-1} A, i.e. (Δf)(v) = f(v) - (1/d_v) Σ_{u~v} f(u).

    Row ``v`` carries ``-1/d_v`` in the columns of its neighbours, so rows sum
    to zero and this equals D^{-1} Q Q^T for the signed incidence matrix Q.
    """
    d = np.asarray(g.degrees, dtype=float)
    return np.eye(g.vertex_count) - g.adjacency_matrix() / d[:, None]


def symmetric_laplacian(g: Graph) -> np.ndarray:
    """I - D^{-1/2} A D^{-1/2}, similar to the normalized Laplacian."""
    s = 1.0 / np.sqrt(np.asarray(g.degrees, dtype=float))
    return np.eye(g.vertex_count) - s[:, None] * g.adjacency_matrix() * s[None, :]


def eigenvalues(g: Graph, zero_tolerance: float = DEFAULT_ZERO_TOLERANCE) -> DiscreteSpectrum:
    if not 0.0 < zero_tolerance <= 1e-6:
        raise ValueError(f"zero_tolerance must lie in (0, 1e-6], got {zero_tolerance}")
    try:
        lam = np.linalg.eigvalsh(symmetric_laplacian(g))
    except np.linalg.LinAlgError as exc:
        raise EigensolverFailure(f"symmetric eigensolver did not converge: {exc}") from exc
    return DiscreteSpectrum.from_eigenvalues(lam, g.edge_count, zero_tolerance)


def discrete_zeta(spec: DiscreteSpectrum, s: complex) -> complex:
    """Z(s) = Σ' λ_j^{-s} over the nonzero eigenvalues."""
    s = complex(s)
    lam = np.asarray(spec.nonzero)
    if s.imag == 0.0:
        return complex(np.sum(lam ** (-s.real)))
    return complex(np.sum(np.exp(-s * np.log(lam))))
