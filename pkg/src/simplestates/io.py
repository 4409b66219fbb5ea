"""Plain-text state files and CSV search traces.

State file::

    # optional comment lines
    qubits 5
    set v5
    00001 0 1
    01010 1 0

One line per non-null ket: ``<bitstring> <re> <im>``. Files over a
coefficient set hold exact integers; ``set dense`` files hold decimals with 17
significant digits. Normalization is implicit.
"""
import csv
import math

import numpy as np

from .states import COEFFICIENT_SETS, DenseState, StateVector, ket_index

TRACE_COLUMNS = ("eval", "temperature", "fitness", "ent_norm", "nonnull_frac", "accepted", "new_best")


class StateFileError(ValueError):
    pass


def _fmt_int(x):
    return str(int(x)) if x != 0 else "0"


def _fmt_float(x):
    return "0" if x == 0 else format(float(x), ".16e")


def format_state(state, set_name=None, comments=()):
    """Serialize a :class:`StateVector` (exact) or :class:`DenseState`."""
    lines = [f"# {c}" if not c.startswith("#") else c for c in comments]
    lines.append(f"qubits {state.n_qubits}")
    if isinstance(state, StateVector):
        if set_name is None:
            raw = state.raw
            set_name = next(
                (n for n, s in sorted(COEFFICIENT_SETS.items(), key=lambda kv: len(kv[1]))
                 if np.all(np.isin(raw, s.as_array()))),
                None,
            )
            if set_name is None:
                raise ValueError("raw coefficients are not in v3, v5 or v9; pass set_name")
        lines.append(f"set {set_name}")
        for label, c in state.nonzero_kets():
            lines.append(f"{label} {_fmt_int(c.real)} {_fmt_int(c.imag)}")
    else:
        lines.append("set dense")
        for label, c in state.nonzero_kets():
            lines.append(f"{label} {_fmt_float(c.real)} {_fmt_float(c.imag)}")
    return "\n".join(lines) + "\n"


def parse_state(text):
    """Parse state-file text; returns ``(state, set_name, comments)``."""
    comments, body = [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            comments.append(stripped)
        else:
            body.append((lineno, stripped.split()))
    if len(body) < 3:
        raise StateFileError("expected 'qubits', 'set' and at least one ket line")
    (_, q), (_, s) = body[0], body[1]
    if len(q) != 2 or q[0] != "qubits" or not q[1].isdigit():
        raise StateFileError("first line must be 'qubits <n>'")
    if len(s) != 2 or s[0] != "set":
        raise StateFileError("second line must be 'set <v3|v5|v9|dense>'")
    n, set_name = int(q[1]), s[1].lower()
    if not 1 <= n <= 10:
        raise StateFileError(f"qubits must be in [1, 10], got {n}")
    if set_name != "dense" and set_name not in COEFFICIENT_SETS:
        raise StateFileError(f"unknown coefficient set {set_name!r}")

    values = np.zeros(1 << n, dtype=np.complex128)
    seen = set()
    for lineno, fields in body[2:]:
        if len(fields) != 3:
            raise StateFileError(f"line {lineno}: expected '<bitstring> <re> <im>'")
        label, re_s, im_s = fields
        if len(label) != n or set(label) - {"0", "1"}:
            raise StateFileError(f"line {lineno}: bad bitstring {label!r} for {n} qubits")
        if label in seen:
            raise StateFileError(f"line {lineno}: duplicate ket {label}")
        seen.add(label)
        try:
            re_v, im_v = float(re_s), float(im_s)
        except ValueError:
            raise StateFileError(f"line {lineno}: non-numeric coefficient") from None
        if not (math.isfinite(re_v) and math.isfinite(im_v)):
            raise StateFileError(f"line {lineno}: non-finite coefficient")
        values[ket_index(label)] = complex(re_v, im_v)

    if not np.any(values):
        raise StateFileError("state is the zero vector and cannot be normalized")
    if set_name == "dense":
        norm = np.linalg.norm(values)
        if abs(norm - 1.0) > 1e-12:
            values = values / norm
        return DenseState(n, values), set_name, comments
    members = COEFFICIENT_SETS[set_name].as_array()
    if not np.all(np.isin(values, members)):
        raise StateFileError(f"coefficients outside set {set_name}")
    return StateVector(n, values), set_name, comments


def write_state(path, state, set_name=None, comments=()):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_state(state, set_name, comments))


def read_state(path):
    with open(path, encoding="ascii") as fh:
        return parse_state(fh.read())


def trace_header(config):
    c = config
    return (
        f"# seed={c.rng_seed} qubits={c.n_qubits} set={c.coefficients.name} "
        f"alpha={c.alpha!r} t0={c.t0!r} beta={c.beta!r} mil={c.mil} "
        f"stale={c.stop_stale_loops} max_evals={c.max_evaluations}"
    )


def write_trace(path, result):
    """CSV trace, one row per evaluated state, preceded by a ``# seed=...`` line."""
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(trace_header(result.config) + "\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TRACE_COLUMNS)
        for r in result.trace.rows:
            writer.writerow((
                r.evaluation_index, repr(r.temperature), repr(r.fitness),
                repr(r.entanglement_normalized), repr(r.nonnull_fraction),
                int(r.accepted), int(r.new_best),
            ))


def read_trace(path):
    """Returns ``(header comment, list of row dicts)`` with numeric values."""
    with open(path, encoding="ascii", newline="") as fh:
        header = fh.readline().rstrip("\n")
        rows = []
        for rec in csv.DictReader(fh):
            rows.append({
                "eval": int(rec["eval"]),
                "temperature": float(rec["temperature"]),
                "fitness": float(rec["fitness"]),
                "ent_norm": float(rec["ent_norm"]),
                "nonnull_frac": float(rec["nonnull_frac"]),
                "accepted": rec["accepted"] == "1",
                "new_best": rec["new_best"] == "1",
            })
    return header, rows

