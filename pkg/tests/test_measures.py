import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplestates.catalog import build
from simplestates.cuts import Bipartition, canonical_bipartitions
from simplestates.linalg import reduced_density_matrix
from simplestates.measures import (
    linear_entropy,
    max_negativity,
    multipartite_entropy,
    negativity_direct,
    negativity_schmidt,
    negativity_value,
    renyi_inf_entropy,
    total_negativity,
    von_neumann_entropy,
)
from simplestates.states import DenseState

from conftest import random_dense


def ghz(n):
    v = np.zeros(1 << n)
    v[0] = v[-1] = 1
    return DenseState.from_array(v, normalize=True)


def w_state(n):
    v = np.zeros(1 << n)
    v[[1 << q for q in range(n)]] = 1
    return DenseState.from_array(v, normalize=True)


@pytest.mark.parametrize("n,expected", [(2, 0.5), (3, 1.5), (4, 6.5), (5, 17.5), (6, 60.5), (7, 157.5), (8, 504.5), (9, 1297.5)])
def test_max_negativity(n, expected):
    assert max_negativity(n) == pytest.approx(expected)


@pytest.mark.parametrize("fast", [True, False])
def test_examples(bell, fast):
    assert total_negativity(bell, use_fast_path=fast).total_negativity == pytest.approx(0.5, abs=1e-12)
    assert total_negativity(ghz(3), use_fast_path=fast).total_negativity == pytest.approx(1.5, abs=1e-12)
    assert total_negativity(DenseState.from_array(np.eye(8)[5]), use_fast_path=fast).total_negativity == 0
    # W state: every cut has Schmidt coefficients 1/3, 2/3
    w = total_negativity(w_state(3), use_fast_path=fast)
    assert w.total_negativity == pytest.approx(np.sqrt(2), abs=1e-12)
    assert w.negative_eigenvalue_count == 3


def test_bell_census(bell):
    c = negativity_direct(bell, [0])
    assert c.negative_eigenvalues == pytest.approx((-0.5,))
    assert c.negativity_contribution == pytest.approx(0.5)
    assert c.marginal_purity == pytest.approx(0.5)


def test_entropy_examples(bell):
    mixed = reduced_density_matrix(bell, [0])
    assert linear_entropy(mixed) == pytest.approx(0.5)
    assert von_neumann_entropy(mixed) == pytest.approx(1.0)
    assert renyi_inf_entropy(mixed) == pytest.approx(np.log(2))
    pure = np.diag([1.0, 0.0])
    assert linear_entropy(pure) == 0 and von_neumann_entropy(pure) == 0 and renyi_inf_entropy(pure) == 0
    assert multipartite_entropy(ghz(3), "vn") == pytest.approx(3.0)
    assert multipartite_entropy(ghz(3), "linear") == pytest.approx(1.5)
    with pytest.raises(ValueError):
        von_neumann_entropy(np.diag([1.5, -0.5]))


def test_psi5a_all_marginals_mixed():
    rep = total_negativity(build("psi5a"))
    assert rep.total_negativity == pytest.approx(17.5, abs=1e-9)
    assert rep.normalized == pytest.approx(1.0)
    assert len(rep.completely_mixed(1)) == 5 and len(rep.completely_mixed(2)) == 10


def test_direct_and_schmidt_agree_on_catalog():
    for name in ("hs", "psi5b", "psi6a"):
        s = build(name)
        a = total_negativity(s, use_fast_path=True)
        b = total_negativity(s, use_fast_path=False)
        assert a.total_negativity == pytest.approx(b.total_negativity, abs=1e-9)
        assert a.negative_eigenvalue_count == b.negative_eigenvalue_count
        assert a.census() == b.census()


@settings(max_examples=40, deadline=None)
@given(n=st.integers(2, 5), seed=st.integers(0, 2**32 - 1))
def test_oracle_equivalence_and_bounds(n, seed):
    rng = np.random.default_rng(seed)
    s = random_dense(n, rng)
    fast = total_negativity(s, use_fast_path=True)
    slow = total_negativity(s, use_fast_path=False)
    jac = total_negativity(s, use_fast_path=False, eig_method="jacobi")
    assert fast.total_negativity == pytest.approx(slow.total_negativity, abs=1e-9)
    assert jac.total_negativity == pytest.approx(slow.total_negativity, abs=1e-9)
    assert negativity_value(s.amplitudes) == pytest.approx(fast.total_negativity, abs=1e-9)
    assert 0 <= fast.total_negativity <= max_negativity(n) + 1e-9
    for cut in canonical_bipartitions(n):
        a = negativity_schmidt(s, cut).negativity_contribution
        b = negativity_direct(s, cut.complement()).negativity_contribution
        assert a == pytest.approx(b, abs=1e-9)
        rho = reduced_density_matrix(s, cut.qubits)
        rho_c = reduced_density_matrix(s, cut.complement().qubits)
        assert von_neumann_entropy(rho) == pytest.approx(von_neumann_entropy(rho_c), abs=1e-8)


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), phase=st.floats(0, 2 * np.pi))
def test_permutation_and_phase_invariance(seed, phase):
    n = 4
    rng = np.random.default_rng(seed)
    s = random_dense(n, rng)
    perm = rng.permutation(n)
    t = s.amplitudes.reshape([2] * n).transpose(perm).reshape(-1)
    e = total_negativity(s).total_negativity
    assert total_negativity(t).total_negativity == pytest.approx(e, abs=1e-10)
    assert total_negativity(np.exp(1j * phase) * s.amplitudes).total_negativity == pytest.approx(e, abs=1e-10)


def test_product_with_bell_is_additive(bell):
    # |B> (x) |0>: only cuts separating the Bell pair contribute 1/2 each
    amps = np.kron([1, 0], bell.amplitudes)
    rep = total_negativity(amps)
    assert rep.total_negativity == pytest.approx(1.0)
    for c in rep.per_cut:
        separates = len(set(c.cut.qubits) & {0, 1}) == 1
        assert c.negativity_contribution == pytest.approx(0.5 if separates else 0.0, abs=1e-12)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        total_negativity(np.ones(3))
    with pytest.raises(ValueError):
        total_negativity(np.ones(4))
    with pytest.raises(ValueError):
        negativity_direct(ghz(3), Bipartition(2, 1))
    with pytest.raises(ValueError):
        max_negativity(1)
