"""Spectral zeta functions, Casimir energies and determinants of equilateral quantum graphs,
computed from the normalized Laplacian spectrum of the underlying discrete graph."""

from .errors import (
    DegenerateDeterminant,
    Disconnected,
    DomainError,
    DuplicateEdge,
    EigensolverFailure,
    EmptyGraph,
    GraphError,
    NoConvergence,
    OrderTooLarge,
    PoleAtHalf,
    PoleAtNonpositiveInteger,
    PoleAtOne,
    PoleError,
    QGZetaError,
    SelfLoop,
    VertexOutOfRange,
)
from .graph import (
    Graph,
    betti_number,
    complete,
    complete_bipartite,
    connected_graphs,
    cycle,
    format_edge_list,
    from_edge_list,
    is_bipartite,
    parse_edge_list,
    path,
    random_connected_graph,
    random_tree,
    read_edge_list,
    star,
)
from .oracle import (
    IncidenceMatrices,
    direct_zeta_sum,
    finite_difference_deriv,
    hurwitz_pair_fourier,
    hurwitz_zeta_fourier,
    incidence_matrices,
    integer_rank,
    multiplicity_by_rank,
    pole_residue,
)
from .quantum import (
    SpectralInvariants,
    TransferredSpectrum,
    ZetaValue,
    casimir_force,
    complete_bipartite_zeta_closed,
    dirichlet_multiplicities,
    log_spectral_determinant,
    quantum_zeta,
    quantum_zeta_series,
    spectral_determinant,
    spectral_invariants,
    spectrum_transfer,
    vacuum_energy,
)
from .special import (
    EvalResult,
    bernoulli_number,
    bernoulli_polynomial,
    chebyshev_T,
    chebyshev_T_expansion,
    dirichlet_eta,
    gamma,
    hurwitz_zeta,
    hurwitz_zeta_deriv0,
    log_gamma,
    riemann_zeta,
)
from .spectrum import DiscreteSpectrum, discrete_zeta, eigenvalues, normalized_laplacian

__version__ = "0.1.0"
