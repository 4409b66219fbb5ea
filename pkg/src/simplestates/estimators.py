"""scikit-learn style wrappers around the measures and the annealer."""
import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_state_array, n_qubits_from_dim
from .cuts import canonical_bipartitions
from .linalg import reduced_density_matrix
from .measures import ENTROPIES, max_negativity, negativity_direct, negativity_schmidt
from .search import AnnealConfig, anneal


class EntanglementFeatures(TransformerMixin, BaseEstimator):
    """Map pure states (rows of ``X``) to entanglement features.

    Parameters
    ----------
    measure : {"negativity", "linear", "vn", "renyi"}
        Bipartite measure evaluated on every canonical cut.
    per_cut : bool
        If True, output one column per cut; otherwise a single column holding
        the sum over cuts.
    normalize : bool
        Divide negativities by their maximum for ``n_qubits`` (negativity only).
    method : {"schmidt", "direct"}
        How negativity is computed.
    """

    def __init__(self, measure="negativity", per_cut=False, normalize=False, method="schmidt"):
        self.measure = measure
        self.per_cut = per_cut
        self.normalize = normalize
        self.method = method

    def fit(self, X, y=None):
        X = check_state_array(X)
        if self.measure != "negativity" and self.measure not in ENTROPIES:
            raise ValueError(f"unknown measure {self.measure!r}")
        if self.method not in ("schmidt", "direct"):
            raise ValueError(f"unknown method {self.method!r}")
        self.n_qubits_ = n_qubits_from_dim(X.shape[1])
        self.cuts_ = canonical_bipartitions(self.n_qubits_)
        self.n_features_in_ = X.shape[1]
        return self

    def _cut_values(self, amps):
        if self.measure == "negativity":
            fn = negativity_schmidt if self.method == "schmidt" else negativity_direct
            return [fn(amps, c).negativity_contribution for c in self.cuts_]
        entropy = ENTROPIES[self.measure]
        return [entropy(reduced_density_matrix(amps, c)) for c in self.cuts_]

    def transform(self, X):
        check_is_fitted(self, "cuts_")
        X = check_state_array(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} amplitudes per state, expected {self.n_features_in_}"
            )
        out = np.array([self._cut_values(row) for row in X])
        if self.normalize and self.measure == "negativity":
            out = out / max_negativity(self.n_qubits_)
        return out if self.per_cut else out.sum(axis=1, keepdims=True)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "cuts_")
        if not self.per_cut:
            return np.array([f"{self.measure}_total"], dtype=object)
        return np.array([f"{self.measure}_{c}" for c in self.cuts_], dtype=object)


class StateAnnealer(BaseEstimator):
    """Simulated-annealing search for highly entangled sparse states.

    ``fit`` ignores its arguments and runs one chain; results are exposed as
    ``best_state_``, ``best_fitness_``, ``best_report_``, ``trace_`` and
    ``n_evaluations_``.
    """

    def __init__(self, n_qubits=5, coefficients="v5", alpha=0.2, t0=0.00075, beta=0.995,
                 mil=1000, stop_stale_loops=10, max_evaluations=1_000_000, random_state=0):
        self.n_qubits = n_qubits
        self.coefficients = coefficients
        self.alpha = alpha
        self.t0 = t0
        self.beta = beta
        self.mil = mil
        self.stop_stale_loops = stop_stale_loops
        self.max_evaluations = max_evaluations
        self.random_state = random_state

    def _config(self):
        return AnnealConfig(
            n_qubits=self.n_qubits,
            coefficients=self.coefficients,
            alpha=self.alpha,
            t0=self.t0,
            beta=self.beta,
            mil=self.mil,
            stop_stale_loops=self.stop_stale_loops,
            rng_seed=self.random_state,
            max_evaluations=self.max_evaluations,
        )

    def fit(self, X=None, y=None):
        result = anneal(self._config())
        self.result_ = result
        self.best_state_ = result.best_state
        self.best_fitness_ = result.best_fitness
        self.best_report_ = result.best_report
        self.trace_ = result.trace
        self.n_evaluations_ = result.evaluations_used
        return self

    def predict(self, X=None):
        """The best state's amplitudes as a ``(1, 2**n)`` array."""
        check_is_fitted(self, "best_state_")
        return self.best_state_.amplitudes[np.newaxis, :]

    def score(self, X=None, y=None):
        check_is_fitted(self, "best_fitness_")
        return self.best_fitness_
