"""Bipartitions of an n-qubit register."""
from dataclasses import dataclass
from functools import lru_cache

from ._validation import check_n_qubits


@dataclass(frozen=True)
class Bipartition:
    """A cut of ``n_qubits`` into ``subset`` (bitmask over qubits) and its complement.

    The canonical representative of a cut never contains qubit ``n_qubits - 1``,
    which leaves exactly ``2**(n-1) - 1`` distinct canonical cuts.
    """

    n_qubits: int
    mask: int

    def __post_init__(self):
        check_n_qubits(self.n_qubits, low=2)
        full = (1 << self.n_qubits) - 1
        if not 0 < self.mask < full:
            raise ValueError(f"mask {self.mask:#x} is not a nonempty proper subset")

    @classmethod
    def from_qubits(cls, n_qubits, qubits):
        mask = 0
        for q in qubits:
            if not 0 <= q < n_qubits:
                raise ValueError(f"qubit {q} out of range for {n_qubits} qubits")
            mask |= 1 << q
        return cls(n_qubits, mask)

    @property
    def qubits(self):
        return tuple(q for q in range(self.n_qubits) if self.mask >> q & 1)

    @property
    def is_canonical(self):
        return not self.mask >> (self.n_qubits - 1) & 1

    def complement(self):
        return Bipartition(self.n_qubits, ((1 << self.n_qubits) - 1) ^ self.mask)

    def canonical(self):
        return self if self.is_canonical else self.complement()

    @property
    def smaller_side(self):
        """Qubits of the smaller side; ties keep ``subset`` itself."""
        k = bin(self.mask).count("1")
        return self.qubits if 2 * k <= self.n_qubits else self.complement().qubits

    @property
    def size(self):
        return len(self.smaller_side)

    def __str__(self):
        return "{" + ",".join(map(str, self.smaller_side)) + "}"


@lru_cache(maxsize=None)
def canonical_bipartitions(n_qubits):
    """All ``2**(n-1) - 1`` canonical cuts, ordered by mask."""
    check_n_qubits(n_qubits, low=2)
    return tuple(Bipartition(n_qubits, m) for m in range(1, 1 << (n_qubits - 1)))


def as_bipartition(cut, n_qubits):
    if isinstance(cut, Bipartition):
        if cut.n_qubits != n_qubits:
            raise ValueError(
                f"cut is over {cut.n_qubits} qubits but the state has {n_qubits}"
            )
        return cut
    return Bipartition.from_qubits(n_qubits, cut)
