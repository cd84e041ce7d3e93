"""Tensor-product Hilbert space and elementary operators for three-level atoms.

Each atom carries the levels |0>, |1> (ground) and |2> (Rydberg). An
N-atom register spans dim = 3**N basis states, ordered lexicographically
with atom 1 most significant, so the label string "d1 d2 ... dN" reads as
a base-3 integer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

LEVELS = 3


@dataclass(frozen=True)
class QuditRegister:
    """N three-level atoms (N between 1 and 3)."""

    n_atoms: int
    dim: int = field(init=False)

    def __post_init__(self):
        if not 1 <= self.n_atoms <= 3:
            raise ValueError(f"n_atoms must be 1, 2 or 3, got {self.n_atoms}")
        object.__setattr__(self, "dim", LEVELS ** self.n_atoms)

    def labels(self) -> list[str]:
        """All basis labels in index order, e.g. '02' for |02>."""
        return [np.base_repr(i, LEVELS).zfill(self.n_atoms) for i in range(self.dim)]


def basis_index(register: QuditRegister, labels: Sequence[int] | str) -> int:
    """Index of the basis state |d1 d2 ... dN> (atom 1 most significant).

    `labels` is a digit sequence or string of length n_atoms with digits
    in {0, 1, 2}.
    """
    if isinstance(labels, str):
        digits = [int(c) for c in labels]
    else:
        digits = list(labels)
    if len(digits) != register.n_atoms:
        raise ValueError(
            f"label length {len(digits)} does not match n_atoms={register.n_atoms}"
        )
    idx = 0
    for d in digits:
        if d not in (0, 1, 2):
            raise ValueError(f"level digits must be in {{0,1,2}}, got {d}")
        idx = idx * LEVELS + d
    return idx


def basis_state(register: QuditRegister, labels: Sequence[int] | str) -> np.ndarray:
    """Unit vector for the basis state with the given per-atom levels."""
    psi = np.zeros(register.dim, dtype=complex)
    psi[basis_index(register, labels)] = 1.0
    return psi


def transition_operator(
    register: QuditRegister, atom_k: int, upper: int, lower: int
) -> np.ndarray:
    """|upper><lower| on atom k (1-based), identity on the other atoms."""
    if not 1 <= atom_k <= register.n_atoms:
        raise ValueError(f"atom index {atom_k} outside [1, {register.n_atoms}]")
    if upper not in (0, 1, 2) or lower not in (0, 1, 2):
        raise ValueError("levels must be in {0,1,2}")
    single = np.zeros((LEVELS, LEVELS), dtype=complex)
    single[upper, lower] = 1.0
    out = np.eye(1, dtype=complex)
    for site in range(1, register.n_atoms + 1):
        out = np.kron(out, single if site == atom_k else np.eye(LEVELS, dtype=complex))
    return out


def rydberg_pair_count(register: QuditRegister) -> np.ndarray:
    """Number of Rydberg pairs r*(r-1)/2 per basis state, r = atoms in |2>."""
    counts = np.zeros(register.dim)
    for i, lab in enumerate(register.labels()):
        r = lab.count("2")
        counts[i] = r * (r - 1) // 2
    return counts


def rydberg_interaction(register: QuditRegister, V: float) -> np.ndarray:
    """Diagonal pairwise interaction: V per pair of simultaneously excited atoms.

    For two atoms the only nonzero entry is V at |22>; for three atoms each
    doubly-excited state carries V and |222> carries 3V.
    """
    if V < 0:
        raise ValueError("interaction strength V must be non-negative")
    return np.diag(V * rydberg_pair_count(register)).astype(complex)
