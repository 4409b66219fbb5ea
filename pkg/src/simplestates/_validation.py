"""Input validation helpers shared by the estimators, measures and CLI."""
import numbers

import numpy as np

HERMITIAN_TOL = 1e-12
NORM_TOL = 1e-10
MAX_QUBITS = 10


def check_n_qubits(n, low=1, high=MAX_QUBITS):
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise TypeError(f"n_qubits must be an integer, got {n!r}")
    if not low <= n <= high:
        raise ValueError(f"n_qubits must be in [{low}, {high}], got {n}")
    return int(n)


def n_qubits_from_dim(dim):
    n = int(dim).bit_length() - 1
    if dim < 2 or 1 << n != dim:
        raise ValueError(f"dimension {dim} is not a power of two >= 2")
    return n


def check_amplitudes(x, normalize=False):
    """Return ``x`` as a 1-D complex128 array of length 2**n with unit norm.

    Accepts a :class:`DenseState`, a :class:`StateVector` or any array-like.
    """
    amps = getattr(x, "amplitudes", None)
    if amps is None:
        amps = x
    amps = np.asarray(amps, dtype=np.complex128)
    if amps.ndim != 1:
        raise ValueError(f"expected a 1-D amplitude vector, got shape {amps.shape}")
    n_qubits_from_dim(amps.shape[0])
    if not np.all(np.isfinite(amps)):
        raise ValueError("amplitudes contain NaN or Inf")
    norm = np.linalg.norm(amps)
    if normalize:
        if norm == 0:
            raise ValueError("the zero vector cannot be normalized")
        return amps / norm
    if abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"state is not normalized (norm = {norm!r})")
    return amps


def check_state_array(X):
    """Validate a 2-D batch of states, one state per row (sklearn ``X``)."""
    X = np.asarray(X, dtype=np.complex128)
    if X.ndim == 1:
        X = X[np.newaxis, :]
    if X.ndim != 2:
        raise ValueError(f"expected a 2-D array of states, got shape {X.shape}")
    if X.shape[0] == 0:
        raise ValueError("X contains no states")
    n_qubits_from_dim(X.shape[1])
    if not np.all(np.isfinite(X)):
        raise ValueError("X contains NaN or Inf")
    norms = np.linalg.norm(X, axis=1)
    if np.any(np.abs(norms - 1.0) > NORM_TOL):
        raise ValueError("every row of X must be a unit-norm state")
    return X


def check_hermitian(m, tol=HERMITIAN_TOL):
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    dev = np.max(np.abs(m - m.conj().T)) if m.size else 0.0
    if dev > tol:
        raise ValueError(f"matrix is not Hermitian (max deviation {dev:.3g})")
    return m


def check_unit_interval(name, value, low_open=False, high_open=False):
    value = float(value)
    lo_ok = value > 0 if low_open else value >= 0
    hi_ok = value < 1 if high_open else value <= 1
    if not (lo_ok and hi_ok and np.isfinite(value)):
        lo = "(" if low_open else "["
        hi = ")" if high_open else "]"
        raise ValueError(f"{name} must be in {lo}0, 1{hi}, got {value}")
    return value


def check_positive(name, value, integer=False):
    if integer:
        if isinstance(value, bool) or not isinstance(value, numbers.Integral):
            raise TypeError(f"{name} must be an integer, got {value!r}")
    if not (np.isfinite(value) and value > 0):
        raise ValueError(f"{name} must be positive, got {value}")
    return int(value) if integer else float(value)
