import numpy as np
import pytest

from simplestates.states import (
    V3, V5, V9, DenseState, StateVector, coefficient_set, densify, ket_index, ket_label,
)


def test_coefficient_sets():
    assert len(V3) == 3 and len(V5) == 5 and len(V9) == 9
    assert set(V3.members) < set(V5.members) < set(V9.members)
    assert all(s in V9 for s in (1 + 1j, 1 - 1j, -1 + 1j, -1 - 1j))
    assert coefficient_set("V5") is V5
    with pytest.raises(ValueError):
        coefficient_set("v7")


def test_ket_labels_rightmost_is_qubit_zero():
    assert ket_index("01") == 1
    assert ket_label(1, 3) == "001"
    s = StateVector.from_kets({"001": 1})
    assert s.raw[1] == 1


def test_densify_bell():
    s = StateVector.from_kets({"00": 1, "11": 1})
    np.testing.assert_allclose(densify(s).amplitudes, np.array([1, 0, 0, 1]) / np.sqrt(2))


def test_densify_imaginary():
    s = StateVector(1, [1j, -1j])
    np.testing.assert_allclose(densify(s).amplitudes, np.array([1j, -1j]) / np.sqrt(2))


def test_densify_psi5a():
    from simplestates.catalog import entry

    raw = entry("psi5a").raw_state()
    amps = densify(raw).amplitudes
    nz = amps[np.abs(amps) > 0]
    assert len(nz) == 8
    np.testing.assert_allclose(np.abs(nz), 1 / (2 * np.sqrt(2)), atol=1e-15)


def test_state_vector_invariants():
    with pytest.raises(ValueError):
        StateVector(2, np.zeros(4))
    with pytest.raises(ValueError):
        StateVector(2, [0.5, 0, 0, 0])
    with pytest.raises(ValueError):
        StateVector(2, [1, 0, 0])
    s = StateVector(2, [1, 1j, 0, -1])
    assert s.norm_k == pytest.approx(np.sqrt(3))
    assert abs(np.linalg.norm(s.amplitudes) - 1) < 1e-12
    with pytest.raises(ValueError):
        s.raw[0] = 2


def test_dense_state_requires_unit_norm():
    with pytest.raises(ValueError):
        DenseState(1, [1, 1])
    assert DenseState.from_array([3, 4j], normalize=True).amplitudes[1] == pytest.approx(0.8j)
    with pytest.raises(ValueError):
        DenseState.from_array([0, 0], normalize=True)
    with pytest.raises(ValueError):
        DenseState.from_array([np.nan, 1])


def test_state_vector_equality_and_hash():
    a = StateVector(1, [1, 0])
    b = StateVector(1, [1, 0])
    assert a == b and hash(a) == hash(b)
    assert a != StateVector(1, [0, 1])
