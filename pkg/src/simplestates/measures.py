"""Negativity of the partial transpose, marginal purities and entropies."""
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._validation import check_amplitudes, check_hermitian, check_n_qubits, n_qubits_from_dim
from .cuts import as_bipartition, canonical_bipartitions
from .linalg import (
    coefficient_matrix,
    density_matrix,
    hermitian_eigenvalues,
    partial_transpose,
    reduced_density_matrix,
)

CENSUS_THRESHOLD = -1e-9
SUM_THRESHOLD = -1e-12
PSD_TOL = 1e-8


@dataclass(frozen=True)
class CutAnalysis:
    cut: object
    negative_eigenvalues: tuple
    negativity_contribution: float
    marginal_purity: float

    @property
    def n_negative(self):
        return len(self.negative_eigenvalues)


@dataclass(frozen=True)
class EntanglementReport:
    per_cut: tuple
    total_negativity: float
    normalized: float
    negative_eigenvalue_count: int

    @property
    def n_qubits(self):
        return self.per_cut[0].cut.n_qubits

    def cuts_of_size(self, size):
        return [c for c in self.per_cut if c.cut.size == size]

    def census(self, decimals=9):
        """``{cut size: Counter((n_negative, distinct values) -> number of cuts)}``.

        ``distinct values`` is a tuple of ``(eigenvalue, multiplicity)`` pairs
        with eigenvalues rounded to ``decimals``.
        """
        out = defaultdict(Counter)
        for c in self.per_cut:
            values = Counter(round(v, decimals) + 0.0 for v in c.negative_eigenvalues)
            out[c.cut.size][(c.n_negative, tuple(sorted(values.items())))] += 1
        return dict(sorted(out.items()))

    def marginal_purities(self):
        """``{smaller-side qubits: Tr(rho_s^2)}`` for every cut."""
        return {c.cut.smaller_side: c.marginal_purity for c in self.per_cut}

    def completely_mixed(self, size, tol=1e-9):
        """Smaller-side subsets of ``size`` qubits whose marginal is identity/2**size."""
        target = 1.0 / (1 << size)
        return sorted(
            c.cut.smaller_side
            for c in self.cuts_of_size(size)
            if abs(c.marginal_purity - target) <= tol
        )


def _purity(rho):
    return float(np.sum(np.abs(rho) ** 2))


def _direct(rho, amps, cut, eig_method):
    eigs = hermitian_eigenvalues(partial_transpose(rho, cut), method=eig_method)
    census = tuple(float(v) for v in eigs[eigs < CENSUS_THRESHOLD])
    contribution = -float(np.sum(eigs[eigs < SUM_THRESHOLD]))
    purity = _purity(reduced_density_matrix(amps, cut))
    return CutAnalysis(cut, census, contribution, purity)


def negativity_direct(state, cut, eig_method="lapack"):
    """Negated sum of the negative eigenvalues of the full partial transpose."""
    amps = check_amplitudes(state)
    cut = as_bipartition(cut, n_qubits_from_dim(len(amps)))
    return _direct(density_matrix(amps), amps, cut, eig_method)


def negativity_schmidt(state, cut):
    """Pure-state shortcut through the spectrum of the smaller marginal.

    For Schmidt coefficients ``lambda_k`` the partial transpose has eigenvalues
    ``lambda_k`` and ``+-sqrt(lambda_k lambda_l)`` for ``k < l``.
    """
    amps = check_amplitudes(state)
    cut = as_bipartition(cut, n_qubits_from_dim(len(amps)))
    rho = reduced_density_matrix(amps, cut)
    lam = np.clip(hermitian_eigenvalues(rho), 0.0, None)
    contribution = max((np.sum(np.sqrt(lam)) ** 2 - 1.0) / 2.0, 0.0)
    k, l = np.triu_indices(len(lam), 1)
    prod = lam[k] * lam[l]
    census = tuple(sorted(float(v) for v in -np.sqrt(prod[prod > 1e-18])))
    return CutAnalysis(cut, census, float(contribution), _purity(rho))


def max_negativity(n_qubits):
    """Negativity of a hypothetical state whose marginals are all completely mixed."""
    n = check_n_qubits(n_qubits, low=2)
    return sum(((1 << c.size) - 1) / 2 for c in canonical_bipartitions(n))


def total_negativity(state, use_fast_path=True, eig_method="lapack"):
    """Sum of cut negativities over all canonical bipartitions."""
    amps = check_amplitudes(state)
    n = n_qubits_from_dim(len(amps))
    cuts = canonical_bipartitions(n)
    if use_fast_path:
        per_cut = tuple(negativity_schmidt(amps, c) for c in cuts)
    else:
        rho = density_matrix(amps)
        per_cut = tuple(_direct(rho, amps, c, eig_method) for c in cuts)
    total = float(sum(c.negativity_contribution for c in per_cut))
    return EntanglementReport(
        per_cut=per_cut,
        total_negativity=total,
        normalized=total / max_negativity(n),
        negative_eigenvalue_count=sum(c.n_negative for c in per_cut),
    )


@lru_cache(maxsize=None)
def _cut_index_stacks(n_qubits):
    # one (n_cuts, 2**k, 2**(n-k)) gather index per smaller-side size k
    groups = defaultdict(list)
    basis = np.arange(1 << n_qubits)
    for cut in canonical_bipartitions(n_qubits):
        groups[cut.size].append(coefficient_matrix(basis, cut.smaller_side))
    return tuple(np.stack(g) for _, g in sorted(groups.items()))


def negativity_value(amplitudes):
    """Total negativity only, batched over cuts via singular values.

    This is the search hot path; it skips the per-cut bookkeeping of
    :func:`total_negativity` and does not validate its input.
    """
    amplitudes = np.asarray(amplitudes)
    n = len(amplitudes).bit_length() - 1
    total = 0.0
    for idx in _cut_index_stacks(n):
        sv = np.linalg.svd(amplitudes[idx], compute_uv=False)
        total += float(np.sum(np.maximum((np.sum(sv, axis=1) ** 2 - 1.0) / 2.0, 0.0)))
    return total


def _density_eigenvalues(m):
    lam = hermitian_eigenvalues(m)
    if lam[0] < -PSD_TOL:
        raise ValueError(f"not a density matrix: eigenvalue {lam[0]:.3g} < 0")
    return np.clip(lam, 0.0, None)


def linear_entropy(m):
    m = check_hermitian(m)
    return 1.0 - _purity(m)


def von_neumann_entropy(m):
    """``-Tr(rho log2 rho)`` in bits."""
    lam = _density_eigenvalues(m)
    lam = lam[lam > 0]
    return float(-np.sum(lam * np.log2(lam)) + 0.0)


def renyi_inf_entropy(m):
    """``-ln(lambda_max)``, natural log."""
    return float(-np.log(_density_eigenvalues(m)[-1]) + 0.0)


ENTROPIES = {
    "linear": linear_entropy,
    "vn": von_neumann_entropy,
    "renyi": renyi_inf_entropy,
}


def multipartite_entropy(state, measure="vn"):
    """Sum of a bipartite entropy of the marginals over all canonical cuts."""
    fn = ENTROPIES[measure] if isinstance(measure, str) else measure
    amps = check_amplitudes(state)
    cuts = canonical_bipartitions(n_qubits_from_dim(len(amps)))
    return float(sum(fn(reduced_density_matrix(amps, c)) for c in cuts))
