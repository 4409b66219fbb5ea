import json

import pytest

from simplestates.cli import main
from simplestates.io import read_state


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def field(out, name):
    for line in out.splitlines():
        if line.startswith(name):
            return line[len(name):].split()[0]
    raise KeyError(name)


def test_search_small(capsys, tmp_path):
    code, out, _ = run(capsys, "search", "--qubits", "2", "--set", "v3", "--seed", "1",
                       "--mil", "50", "--out", str(tmp_path / "s.txt"), "--trace", str(tmp_path / "t.csv"))
    assert code == 0
    assert float(field(out, "E_NPT ")) == pytest.approx(0.5)
    assert field(out, "seed") == "1"
    assert read_state(tmp_path / "s.txt")[1] == "v3"
    assert (tmp_path / "t.csv").read_text().startswith("# seed=1 ")


def test_search_prints_state_without_out(capsys):
    code, out, _ = run(capsys, "search", "--qubits", "2", "--set", "v3", "--mil", "20")
    assert code == 0 and "qubits 2\nset v3\n" in out


@pytest.mark.parametrize("argv", [
    ["search", "--qubits", "5", "--alpha", "1.5"],
    ["search", "--qubits", "1"],
    ["search", "--qubits", "3", "--beta", "1"],
    ["bound", "--qubits", "11"],
    ["bound", "--qubits", "3", "--set-size", "1"],
    ["verify", "--entry", "nope"],
])
def test_validation_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["search"])
    assert exc.value.code == 2


def test_analyze_bell(capsys, tmp_path):
    p = tmp_path / "bell.txt"
    p.write_text("qubits 2\nset v3\n00 1 0\n11 1 0\n")
    code, out, _ = run(capsys, "analyze", str(p), "--method", "both", "--entropy", "vn")
    assert code == 0
    assert float(field(out, "E_NPT ")) == pytest.approx(0.5)
    assert "vn" in out
    code, out, _ = run(capsys, "analyze", str(p), "--json")
    data = json.loads(out)
    assert data["total_negativity"] == pytest.approx(0.5)
    assert data["cuts"][0]["negative_eigenvalues"] == pytest.approx([-0.5])


def test_analyze_product_state(capsys, tmp_path):
    p = tmp_path / "zero.txt"
    p.write_text("qubits 3\nset v3\n000 1 0\n")
    code, out, _ = run(capsys, "analyze", str(p))
    assert code == 0 and float(field(out, "E_NPT ")) == 0


def test_analyze_errors(capsys, tmp_path):
    p = tmp_path / "zero.txt"
    p.write_text("qubits 2\nset v3\n00 0 0\n")
    assert run(capsys, "analyze", str(p))[0] == 2
    assert run(capsys, "analyze", str(tmp_path / "missing.txt"))[0] == 1


def test_analyze_psi7a_mixed_count(capsys, tmp_path):
    from simplestates.catalog import build
    from simplestates.io import write_state

    p = tmp_path / "psi7a.txt"
    write_state(p, build("psi7a"))
    code, out, _ = run(capsys, "analyze", str(p))
    assert code == 0
    assert "3-qubit: 21 of 35" in out
    assert "{1,4,6}  0.218750" in out


def test_search_and_analyze_agree(capsys, tmp_path):
    p = tmp_path / "s.txt"
    _, out, _ = run(capsys, "search", "--qubits", "3", "--mil", "40", "--stale", "3", "--out", str(p))
    _, out2, _ = run(capsys, "analyze", str(p))
    assert float(field(out, "E_NPT ")) == pytest.approx(float(field(out2, "E_NPT ")), abs=1e-12)


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--entry", "psi5a")
    assert code == 0 and "PASS" in out and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--entry", "borras_psi6")
    assert code == 0 and "FAIL (suspect)" in out and "note: borras_psi6" in out
    code, out, _ = run(capsys, "verify", "--entry", "psi4a", "--json", "--method", "direct")
    assert code == 0 and all(d["pass"] for d in json.loads(out))


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--qubits", "5", "--set-size", "5")
    assert code == 0
    assert field(out, "max E_NPT") == "17.5"
    assert field(out, "space bits") == "74.30"
