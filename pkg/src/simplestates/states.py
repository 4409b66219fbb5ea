"""Pure n-qubit states: exact Gaussian-integer vectors and dense amplitudes.

Basis convention: qubit ``q`` is bit ``q`` of the basis index, so in a printed
ket label such as ``|01010>`` the rightmost character is qubit 0 and the
leftmost is qubit ``n - 1``.
"""
from dataclasses import dataclass

import numpy as np

from ._validation import check_amplitudes, check_n_qubits, n_qubits_from_dim


@dataclass(frozen=True)
class CoefficientSet:
    """A discrete alphabet of allowed raw coefficients (always contains 0)."""

    name: str
    members: tuple

    def __post_init__(self):
        if 0 not in self.members:
            raise ValueError("a coefficient set must contain 0")
        if len(set(self.members)) != len(self.members):
            raise ValueError("coefficient set members must be distinct")

    def __len__(self):
        return len(self.members)

    def __contains__(self, value):
        return complex(value) in self.members

    def as_array(self):
        return np.array(self.members, dtype=np.complex128)


V3 = CoefficientSet("v3", (0j, 1 + 0j, -1 + 0j))
V5 = CoefficientSet("v5", V3.members + (1j, -1j))
V9 = CoefficientSet("v9", V5.members + (1 + 1j, 1 - 1j, -1 + 1j, -1 - 1j))
COEFFICIENT_SETS = {s.name: s for s in (V3, V5, V9)}


def coefficient_set(name):
    """Look up ``v3``, ``v5`` or ``v9`` (case-insensitive)."""
    if isinstance(name, CoefficientSet):
        return name
    try:
        return COEFFICIENT_SETS[str(name).lower()]
    except KeyError:
        raise ValueError(
            f"unknown coefficient set {name!r}; expected one of {sorted(COEFFICIENT_SETS)}"
        ) from None


def ket_label(index, n_qubits):
    return format(index, f"0{n_qubits}b")


def ket_index(label):
    if not label or set(label) - {"0", "1"}:
        raise ValueError(f"invalid ket label {label!r}")
    return int(label, 2)


def _frozen(arr):
    arr = np.array(arr, dtype=np.complex128)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class StateVector:
    """Unnormalized state with Gaussian-integer raw coefficients.

    The physical amplitude of basis ket ``i`` is ``raw[i] / norm_k``.
    """

    n_qubits: int
    raw: np.ndarray

    def __post_init__(self):
        check_n_qubits(self.n_qubits)
        raw = _frozen(self.raw)
        if raw.shape != (1 << self.n_qubits,):
            raise ValueError(
                f"expected {1 << self.n_qubits} raw coefficients, got shape {raw.shape}"
            )
        if np.any(raw.real != np.round(raw.real)) or np.any(raw.imag != np.round(raw.imag)):
            raise ValueError("raw coefficients must be Gaussian integers")
        if not np.any(raw):
            raise ValueError("the all-zero vector is not a valid state")
        object.__setattr__(self, "raw", raw)

    @classmethod
    def from_kets(cls, terms, n_qubits=None):
        """Build from ``{label: coefficient}`` or ``[(coefficient, label), ...]``."""
        if isinstance(terms, dict):
            terms = [(c, k) for k, c in terms.items()]
        terms = list(terms)
        if n_qubits is None:
            n_qubits = len(terms[0][1])
        raw = np.zeros(1 << n_qubits, dtype=np.complex128)
        for coef, label in terms:
            if len(label) != n_qubits:
                raise ValueError(f"ket {label!r} does not have {n_qubits} qubits")
            raw[ket_index(label)] += coef
        return cls(n_qubits, raw)

    @property
    def norm_sq(self):
        # exact: sum of squares of small integers
        return float(np.sum(self.raw.real**2 + self.raw.imag**2))

    @property
    def norm_k(self):
        return float(np.sqrt(self.norm_sq))

    @property
    def amplitudes(self):
        return self.raw / self.norm_k

    def nonzero_kets(self):
        idx = np.flatnonzero(self.raw)
        return [(ket_label(i, self.n_qubits), complex(self.raw[i])) for i in idx]

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.n_qubits == other.n_qubits and np.array_equal(self.raw, other.raw)

    def __hash__(self):
        return hash((self.n_qubits, self.raw.tobytes()))

    def __repr__(self):
        return f"StateVector(n_qubits={self.n_qubits}, nonnull={np.count_nonzero(self.raw)})"


@dataclass(frozen=True, eq=False)
class DenseState:
    """A unit-norm pure state with arbitrary complex amplitudes."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = _frozen(check_amplitudes(self.amplitudes))
        if amps.shape[0] != 1 << self.n_qubits:
            raise ValueError("amplitude count does not match n_qubits")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_array(cls, amplitudes, normalize=False):
        amps = check_amplitudes(amplitudes, normalize=normalize)
        return cls(n_qubits_from_dim(amps.shape[0]), amps)

    def nonzero_kets(self, tol=0.0):
        idx = np.flatnonzero(np.abs(self.amplitudes) > tol)
        return [(ket_label(i, self.n_qubits), complex(self.amplitudes[i])) for i in idx]

    def __repr__(self):
        return f"DenseState(n_qubits={self.n_qubits})"


def densify(state):
    """Normalize a :class:`StateVector` into a :class:`DenseState`."""
    if isinstance(state, DenseState):
        return state
    if isinstance(state, StateVector):
        return DenseState(state.n_qubits, state.amplitudes)
    return DenseState.from_array(state)
