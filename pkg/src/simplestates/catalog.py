"""Published highly entangled states and the metrics reported for them.

Every state is stored as printed (ket strings plus prefactor) and parsed on
demand. :func:`verify` recomputes each published number and returns one
:class:`VerificationDiff` per claim.
"""
import json
from dataclasses import asdict, dataclass, field

import numpy as np

from .kets import parse_kets
from .measures import total_negativity
from .search import count_nonnull
from .states import DenseState, StateVector

EXACT_TOL = 1e-9
DECIMAL_TOL = 1e-5
PURITY_TOL = 1e-6
HS_TOL = 5e-4

# The two Bell-pair families exactly as named in the source: Psi = 00/11, Phi = 01/10.
NAMED_STATES = {
    "Psi+": "1/sqrt(2) (|00> + |11>)",
    "Psi-": "1/sqrt(2) (|00> - |11>)",
    "Phi+": "1/sqrt(2) (|01> + |10>)",
    "Phi-": "1/sqrt(2) (|01> - |10>)",
    "F0": "1/sqrt(2) (|0000> + |1111>)",
    "F1": "1/sqrt(2) (|0011> + |1100>)",
    "F2": "1/sqrt(2) (|0110> + |1001>)",
    "F3": "1/sqrt(2) (|0101> + |1010>)",
}


def _named():
    return {k: parse_kets(v) for k, v in NAMED_STATES.items()}


@dataclass(frozen=True)
class VerificationDiff:
    entry_id: str
    claim: str
    expected: float
    computed: float
    tolerance: float

    @property
    def passed(self):
        return bool(abs(self.expected - self.computed) <= self.tolerance)

    def to_dict(self):
        return {
            "entry": self.entry_id,
            "claim": self.claim,
            "expected": self.expected,
            "computed": self.computed,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    prefactor: str
    kets: str
    expected_negativity: float
    negativity_tol: float = EXACT_TOL
    # {cut size: (cuts, negatives per cut, eigenvalue or None)}
    expected_census: dict = field(default_factory=dict)
    expected_negative_count: int = None
    # {marginal size: number of completely mixed marginals of that size}
    expected_mixed: dict = field(default_factory=dict)
    # {marginal size: sorted list of completely mixed subsets}
    expected_mixed_subsets: dict = field(default_factory=dict)
    # {subset: purity}; ``default_purity`` covers the rest of that size that are not mixed
    expected_purities: dict = field(default_factory=dict)
    default_purity: tuple = None
    expected_single_purities: dict = field(default_factory=dict)
    expected_mean_purity: tuple = None
    expected_nonnull: int = None
    suspect: bool = False
    provenance_note: str = ""

    def superposition(self):
        return parse_kets(self.kets, _named())

    def state(self):
        amps = parse_kets(self.prefactor).real * self.superposition().to_array()
        return DenseState.from_array(amps)

    def raw_state(self):
        """Gaussian-integer form, or ``None`` if the kets are not over Z[i]."""
        raw = self.superposition().to_array()
        if np.any(np.round(raw) != raw):
            return None
        return StateVector.from_kets(
            {label: c for label, c in self.superposition().items()}
        )


_MAX5 = dict(
    expected_negativity=17.5,
    expected_census={1: (5, 1, -0.5), 2: (10, 6, -0.25)},
    expected_negative_count=65,
    expected_mixed={1: 5, 2: 10},
)
_MAX6 = dict(
    expected_negativity=60.5,
    expected_census={1: (6, 1, -0.5), 2: (15, 6, -0.25), 3: (10, 28, -0.125)},
    expected_negative_count=376,
    expected_mixed={1: 6, 2: 15, 3: 10},
)
_FOUR = dict(
    negativity_tol=DECIMAL_TOL,
    expected_census={1: (4, 1, -0.5), 2: (3, 6, None)},
    expected_negative_count=22,
    expected_mixed={1: 4, 2: 0},
)

_ENTRIES = [
    CatalogEntry(
        "brown_psi2p",
        "1/(2 sqrt(2))",
        "|00110> + |01011> + |10001> + |11100>"
        " + i(|00101> + |01000> + |10010> + |11111>)",
        **_MAX5,
    ),
    CatalogEntry(
        "brown_psi3p",
        "1/(2 sqrt(2))",
        "|00110> + |01001> + |10101> + |11010>"
        " + i(|00000> + |01111> + |10011> + |11100>)",
        **_MAX5,
    ),
    CatalogEntry(
        "brown_psi5_bell",
        "1/2",
        "|001>|Phi-> + |010>|Psi-> + |100>|Phi+> + |111>|Psi+>",
        **_MAX5,
    ),
    CatalogEntry(
        "borras_psi6",
        "1/sqrt(32)",
        "|000000> + |111111> + |000011> + |111100> + |000101> + |111010>"
        " + |000110> + |111001> + |001001> + |110110> + |001111> + |110000>"
        " + |010001> + |101110> + |010010> + |101101> + |011000> + |100111>"
        " + |011101> + |100010> - |001010> + |110101> + |001100> + |110011>"
        " + |010100> + |101011> + |010111> + |101000> + |011011> + |100100>"
        " + |011110> + |100001>",
        **_MAX6,
        suspect=True,
        provenance_note=(
            "transcription suspect: the printed 32-term state with its single minus sign "
            "has E_NPT = 23.637028, not the claimed 60.5"
        ),
    ),
    CatalogEntry(
        "hs",
        "1/sqrt(6)",
        "|1100> + |0011> + w(|1001> + |0110>) + w^2(|1010> + |0101>)",
        expected_negativity=6.0981,
        negativity_tol=HS_TOL,
    ),
    CatalogEntry(
        "psi4a",
        "1/sqrt(6)",
        "|1001> - i(|0000> - |0011> + |0110> + |1100> + |1111>)",
        expected_negativity=5.989631,
        **_FOUR,
    ),
    CatalogEntry(
        "psi4b",
        "1/(2 sqrt(6))",
        "|0001> - |0100> + i(|1011> - |1110>)"
        " + (1+i)(|0010> + |1101> - |0101> - |0110> - |1010> - |1100>)"
        " + (1-i)(|1000> + |1001> - |0011> - |0111>)",
        expected_negativity=6.051660,
        **_FOUR,
    ),
    CatalogEntry(
        "psi5a",
        "1/(2 sqrt(2))",
        "|01010> + |10011> + |10110> + |11000>"
        " + i(|00001> - |00100> + |01111> - |11101>)",
        **_MAX5,
        expected_nonnull=8,
    ),
    CatalogEntry(
        "psi5b",
        "1/4",
        "(1+i)(|01101> + |01110> - |10100> + |10111> + |11000> + |11011>)"
        " + (1-i)(|00001> - |00010>)",
        **_MAX5,
    ),
    CatalogEntry(
        "psi6a",
        "1/4",
        "- |000101> - |001011> - |010001> + |011111>"
        " + |100000> + |101110> - |110100> + |111010>"
        " + i(|000110> - |001000> - |010010> - |011100>"
        " + |100011> - |101101> + |110111> + |111001>)",
        **_MAX6,
    ),
    CatalogEntry(
        "psi6b",
        "1/4",
        "|011010> - |011111> + |101011> - |101110>"
        " - |110011> - |110110> - |111000> - |111101>"
        " + i(- |000010> - |000111> + |001001> + |001100>"
        " + |010001> - |010100> - |100000> + |100101>)",
        **_MAX6,
    ),
    CatalogEntry(
        "PSI6_bellform",
        "1/2",
        "|F0>|Psi-> + |F1>|Psi+> + |F2>|Phi-> + |F3>|Phi+>",
        **_MAX6,
    ),
    CatalogEntry(
        "psi7a",
        "1/(4 sqrt(2))",
        "(1+i)(|0000010> + |1000101> + |1011011> - |0011001> - |1010000> - |1111101>)"
        " + (1-i)(|0001100> + |0010111> + |0100001> + |0101111> + |0110100>"
        " + |0111010> + |1001110> + |1100011> - |1101000> - |1110110>)",
        expected_negativity=152.646039,
        negativity_tol=DECIMAL_TOL,
        expected_census={1: (7, 1, -0.5), 2: (21, 6, -0.25), 3: (21, 28, -0.125)},
        expected_negative_count=1113,
        expected_mixed={1: 7, 2: 21, 3: 21},
        expected_mixed_subsets={3: [
            (0, 1, 2), (0, 1, 4), (0, 1, 6), (0, 2, 3), (0, 2, 4), (0, 2, 5), (0, 2, 6),
            (0, 3, 5), (0, 4, 6), (1, 2, 4), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 3, 6),
            (1, 4, 5), (1, 5, 6), (2, 3, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6), (4, 5, 6),
        ]},
        expected_purities={(1, 4, 6): 0.218750},
        default_purity=(3, 0.156250),
    ),
    CatalogEntry(
        "psi7b",
        "1/(4 sqrt(2))",
        "(1+i)(|0011101> + |0100010> + |0111000> + |1101100>"
        " + |1111011> - |0001001> - |1000111> - |1110101>)"
        " + (1-i)(|0010011> + |0110110> + |1001010> + |1010000>"
        " + |1011110> - |0000100> - |0101111> - |1100001>)",
        expected_negativity=152.504073,
        negativity_tol=DECIMAL_TOL,
        expected_census={1: (7, 1, -0.5), 2: (21, 6, -0.25)},
        expected_mixed={1: 7, 2: 21, 3: 18},
        expected_mixed_subsets={3: [
            (0, 1, 2), (0, 1, 3), (0, 1, 4), (0, 1, 5), (0, 2, 6), (0, 3, 5),
            (0, 4, 6), (1, 2, 6), (1, 3, 5), (1, 4, 6), (2, 3, 4), (2, 3, 5),
            (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6), (4, 5, 6),
        ]},
        expected_purities={(2, 4, 6): 0.187500},
        default_purity=(3, 0.156250),
    ),
    CatalogEntry(
        "psi8",
        "1/8",
        "|00000010> - |00000101> - |00001111> + |00010111> + |00011010>"
        " - |00011011> - |00100001> - |00100101> + |00100110> + |00101000>"
        " + |00101110> + |00101111> - |00110000> - |00110011> + |00110100>"
        " - |00111100> - |01000000> + |01000110> + |01000111> - |01001010>"
        " + |01001100> - |01001101> + |01010001> + |01010110> + |01011010>"
        " + |01100010> - |01100011> + |01101001> + |01111001> + |01111101>"
        " + |01111110> + |10000001> + |10000111> + |10001000> + |10001010>"
        " + |10001100> - |10001110> + |10010000> + |10010100> + |10011101>"
        " + |10100010> - |10101001> + |10101011> - |10110111> + |10111001>"
        " - |10111010> - |10111111> - |11000011> - |11000101> - |11001011>"
        " - |11010000> + |11010011> + |11010100> - |11011011> + |11011111>"
        " + |11100000> + |11100100> - |11101101> - |11110101> - |11110111>"
        " + |11111000> + |11111010> - |11111100> + |11111110>",
        expected_negativity=439.302328,
        negativity_tol=DECIMAL_TOL,
        expected_single_purities={0.500488: 5, 0.500977: 3, 0.5: 1},
        expected_mean_purity=(2, 0.253540),
        expected_nonnull=64,
    ),
]

CATALOG = {e.id: e for e in sorted(_ENTRIES, key=lambda e: e.id)}


def entry(entry_id):
    try:
        return CATALOG[entry_id]
    except KeyError:
        raise KeyError(f"unknown catalog entry {entry_id!r}; known: {sorted(CATALOG)}") from None


def build(entry_id):
    """The catalog state ``entry_id`` as a :class:`DenseState`."""
    return entry(entry_id).state()


def _census_matches(cut, count, value):
    if cut.n_negative != count:
        return False
    return value is None or all(abs(v - value) <= EXACT_TOL for v in cut.negative_eigenvalues)


def verify(entry_id, use_fast_path=True):
    """Recompute every published claim of ``entry_id``; failures are diffs, not errors."""
    e = entry(entry_id)
    report = total_negativity(e.state(), use_fast_path=use_fast_path)
    diffs = []

    def add(claim, expected, computed, tol):
        diffs.append(VerificationDiff(e.id, claim, float(expected), float(computed), tol))

    add("E_NPT", e.expected_negativity, report.total_negativity, e.negativity_tol)
    if e.expected_negative_count is not None:
        add("negative eigenvalues", e.expected_negative_count,
            report.negative_eigenvalue_count, EXACT_TOL)
    for size, (cuts, count, value) in sorted(e.expected_census.items()):
        at = "" if value is None else f" @ {value:g}"
        n_match = sum(_census_matches(c, count, value) for c in report.cuts_of_size(size))
        add(f"{size}-qubit cuts with {count} negatives{at}", cuts, n_match, EXACT_TOL)
    for size, n_mixed in sorted(e.expected_mixed.items()):
        add(f"completely mixed {size}-qubit marginals", n_mixed,
            len(report.completely_mixed(size, tol=EXACT_TOL)), EXACT_TOL)
    for size, subsets in sorted(e.expected_mixed_subsets.items()):
        mixed = set(report.completely_mixed(size, tol=EXACT_TOL))
        add(f"listed {size}-qubit subsets that are completely mixed", len(subsets),
            len(mixed & set(subsets)), EXACT_TOL)
    purities = report.marginal_purities()
    for subset, purity in sorted(e.expected_purities.items()):
        add(f"purity {{{','.join(map(str, subset))}}}", purity, purities[subset], PURITY_TOL)
    if e.default_purity is not None:
        size, purity = e.default_purity
        listed = set(e.expected_mixed_subsets.get(size, ())) | set(e.expected_purities)
        rest = [p for s, p in purities.items() if len(s) == size and s not in listed]
        add(f"other {size}-qubit marginals with purity {purity:g}", len(rest),
            sum(abs(p - purity) <= PURITY_TOL for p in rest), EXACT_TOL)
    if e.expected_single_purities:
        singles = [p for s, p in purities.items() if len(s) == 1]
        for purity, times in sorted(e.expected_single_purities.items()):
            add(f"1-qubit marginals with purity {purity:g}", times,
                sum(abs(p - purity) <= PURITY_TOL for p in singles), EXACT_TOL)
    if e.expected_mean_purity is not None:
        size, mean = e.expected_mean_purity
        values = [p for s, p in purities.items() if len(s) == size]
        add(f"mean {size}-qubit purity", mean, np.mean(values), PURITY_TOL)
    if e.expected_nonnull is not None:
        add("non-null coefficients", e.expected_nonnull, count_nonnull(e.raw_state()), EXACT_TOL)
    return diffs


def verify_all(entry_ids=None, use_fast_path=True):
    """``{entry id: [diffs]}`` in sorted id order."""
    ids = sorted(CATALOG) if entry_ids is None else sorted(entry_ids)
    return {i: verify(i, use_fast_path=use_fast_path) for i in ids}


def diffs_to_json(diffs):
    return json.dumps([d.to_dict() for d in diffs], indent=2)


def format_table(diffs):
    rows = [("entry", "claim", "expected", "computed", "tol", "status")]
    for d in diffs:
        status = "PASS" if d.passed else "FAIL"
        if not d.passed and CATALOG[d.entry_id].suspect:
            status = "FAIL (suspect)"
        rows.append((d.entry_id, d.claim, f"{d.expected:.6f}", f"{d.computed:.6f}",
                     f"{d.tolerance:g}", status))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)
