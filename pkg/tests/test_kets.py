import numpy as np
import pytest

from simplestates.kets import OMEGA, KetSyntaxError, parse_kets


def test_grouped_coefficients():
    s = parse_kets("|1001> - i(|0000> - |0011>)")
    assert s == {"1001": 1, "0000": -1j, "0011": 1j}


def test_gaussian_factor_and_power():
    s = parse_kets("(1+i)(|01> - |10>) + w^2|11>")
    assert s["01"] == 1 + 1j and s["10"] == -1 - 1j
    assert s["11"] == pytest.approx(OMEGA**2)
    assert OMEGA**3 == pytest.approx(1)


def test_scalars():
    assert parse_kets("1/(2 sqrt(2))") == pytest.approx(1 / (2 * np.sqrt(2)))
    assert parse_kets("1/sqrt(32)") == pytest.approx(32**-0.5)


def test_tensor_product_of_named_states():
    names = {"B": parse_kets("|00> + |11>")}
    s = parse_kets("|1>|B> - 2|0>|B>", names)
    assert s == {"100": 1, "111": 1, "000": -2, "011": -2}


def test_repeated_kets_accumulate():
    assert parse_kets("|0> + |0> - i|0>") == {"0": 2 - 1j}


@pytest.mark.parametrize("bad", ["|01> + |1>", "|0> +", "(|0>", "|X>", "|0>^2", "2 + |0>"])
def test_syntax_errors(bad):
    with pytest.raises(KetSyntaxError):
        parse_kets(bad)
