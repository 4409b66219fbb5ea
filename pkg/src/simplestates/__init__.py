"""Highly entangled multi-qubit states with simple algebraic structure.

Negativity-of-partial-transpose analysis of pure n-qubit states and a
simulated-annealing search over states with discrete coefficients.
"""
from .catalog import CATALOG, build, verify
from .cuts import Bipartition, canonical_bipartitions
from .estimators import EntanglementFeatures, StateAnnealer
from .linalg import hermitian_eigenvalues, partial_transpose, reduced_density_matrix
from .measures import (
    CutAnalysis,
    EntanglementReport,
    linear_entropy,
    max_negativity,
    negativity_direct,
    negativity_schmidt,
    renyi_inf_entropy,
    total_negativity,
    von_neumann_entropy,
)
from .search import (
    AnnealConfig,
    SearchResult,
    SearchTrace,
    anneal,
    count_nonnull,
    fitness,
    move,
    random_state,
    search_space_bits,
)
from .states import V3, V5, V9, CoefficientSet, DenseState, StateVector, coefficient_set, densify

__version__ = "0.1.0"
