"""Partial trace, partial transpose and Hermitian eigenvalues."""
import numpy as np

from ._validation import check_amplitudes, check_hermitian, n_qubits_from_dim
from .cuts import as_bipartition


def _axes(qubits, n_qubits):
    # tensor axis a of psi.reshape([2] * n) holds qubit n - 1 - a
    return [n_qubits - 1 - q for q in sorted(qubits, reverse=True)]


def coefficient_matrix(amplitudes, qubits):
    """Reshape a state into a ``2**k x 2**(n-k)`` matrix, rows indexed by ``qubits``.

    Row index bit ``j`` is the ``j``-th smallest qubit of ``qubits``.
    """
    n = n_qubits_from_dim(len(amplitudes))
    keep = _axes(qubits, n)
    rest = [a for a in range(n) if a not in keep]
    t = np.asarray(amplitudes).reshape([2] * n).transpose(keep + rest)
    return t.reshape(1 << len(keep), -1)


def reduced_density_matrix(state, cut):
    """Marginal of the smaller side of ``cut`` (trace over the larger side)."""
    amps = check_amplitudes(state)
    cut = as_bipartition(cut, n_qubits_from_dim(len(amps)))
    m = coefficient_matrix(amps, cut.smaller_side)
    rho = m @ m.conj().T
    return (rho + rho.conj().T) / 2


def density_matrix(state):
    amps = check_amplitudes(state)
    return np.outer(amps, amps.conj())


def partial_transpose(rho, cut):
    """Transpose the qubits of ``cut`` only (an exact index permutation)."""
    rho = np.asarray(rho)
    n = n_qubits_from_dim(rho.shape[0])
    if rho.shape != (1 << n, 1 << n):
        raise ValueError(f"expected a {1 << n}x{1 << n} matrix, got {rho.shape}")
    cut = as_bipartition(cut, n)
    perm = list(range(2 * n))
    for a in _axes(cut.qubits, n):
        perm[a], perm[n + a] = perm[n + a], perm[a]
    t = rho.reshape([2] * (2 * n)).transpose(perm)
    return np.ascontiguousarray(t.reshape(1 << n, 1 << n))


def jacobi_eigenvalues(m, tol=1e-14, max_sweeps=100):
    """Cyclic Jacobi eigenvalues of a complex Hermitian matrix, ascending.

    Each pivot is first phase-rotated to a real off-diagonal entry and then
    annihilated with a real Givens rotation.
    """
    a = np.array(m, dtype=np.complex128)
    n = a.shape[0]
    scale = max(np.linalg.norm(a), 1e-300)
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= 1e-300:
                    continue
                phase = apq / r
                app, aqq = a[p, p].real, a[q, q].real
                theta = 0.5 * np.arctan2(2 * r, aqq - app)
                c, s = np.cos(theta), np.sin(theta)
                # columns p, q  <-  [a_p, a_q] @ u  with u = diag(1, conj(phase)) @ R
                u = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
                a[:, [p, q]] = a[:, [p, q]] @ u
                a[[p, q], :] = u.conj().T @ a[[p, q], :]
                a[p, q] = a[q, p] = 0.0
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    return np.sort(np.diag(a).real)


def hermitian_eigenvalues(m, method="lapack"):
    """All real eigenvalues of a Hermitian matrix in ascending order.

    ``method`` is ``"lapack"`` (``numpy.linalg.eigvalsh``) or ``"jacobi"``.
    """
    m = check_hermitian(m)
    if method == "lapack":
        return np.linalg.eigvalsh(m)
    if method == "jacobi":
        return jacobi_eigenvalues(m)
    raise ValueError(f"unknown eigenvalue method {method!r}")
