"""Time-dependent Hamiltonians for the Bell and GHZ preparation schemes.

Five variants share one structure: a set of complex drive coefficients
c_n(t) attached to fixed coupling matrices M_n, plus a static diagonal,

    H(t) = sum_n c_n(t) M_n + h.c. + diag(static).

Full models (two / three atoms) keep the explicit oscillating detuning
phases e^{-i delta t} on each drive and the pairwise Rydberg shift V on
the diagonal. The reduced models are ladder ("chain") systems in the
rotated frame: only nearest-chain couplings, zero diagonal.

Chain orderings are fixed:

    Bell effective   (|00>, |20>, |22>, |12>, |11>)
    GHZ intermediate (|000>, |200>, |220>, |120>, |222>, |212>, |112>, |111>)
    GHZ effective    (|000>, |200>, |222>, |212>, |112>, |111>)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .pulses import PulseParameterSet, bridge_amplitude, noise_segment
from .register import QuditRegister, rydberg_interaction, transition_operator

BELL_CHAIN_LABELS = ("00", "20", "22", "12", "11")
GHZ_INTERMEDIATE_LABELS = ("000", "200", "220", "120", "222", "212", "112", "111")
GHZ_CHAIN_LABELS = ("000", "200", "222", "212", "112", "111")


@dataclass(frozen=True)
class DetuningPlan:
    """Laser detuning delta_kj for each (atom k, transition j in {0, 1})."""

    deltas: Mapping[tuple[int, int], float]

    def delta(self, atom_k: int, transition_j: int) -> float:
        return self.deltas[(atom_k, transition_j)]


def bell_detunings(V: float) -> DetuningPlan:
    """Two-atom plan: delta_10 = delta_21 = 0, delta_20 = delta_11 = V."""
    return DetuningPlan({(1, 0): 0.0, (2, 1): 0.0, (2, 0): V, (1, 1): V})


def ghz_detunings(V: float) -> DetuningPlan:
    """Three-atom plan: delta_10 = delta_31 = 0, delta_20 = delta_11 = V,
    delta_30 = delta_21 = 2V."""
    return DetuningPlan(
        {(1, 0): 0.0, (3, 1): 0.0, (2, 0): V, (1, 1): V, (3, 0): 2 * V, (2, 1): 2 * V}
    )


def _chain_matrices(dim: int, links: list[tuple[int, int]]) -> np.ndarray:
    mats = np.zeros((len(links), dim, dim), dtype=complex)
    for n, (row, col) in enumerate(links):
        mats[n, row, col] = 1.0
    return mats


class _DriveModel:
    """Shared evaluation machinery; subclasses fill in the drive layout."""

    dim: int
    n_drives: int
    drive_matrices: np.ndarray  # (C, dim, dim)
    static_diagonal: np.ndarray  # (dim,) real

    def __init__(self, pulses: PulseParameterSet, expected_channels: int,
                 noise_table: np.ndarray | None):
        if pulses.n_channels != expected_channels:
            raise ValueError(
                f"{type(self).__name__} needs {expected_channels} pulse channels, "
                f"got {pulses.n_channels}"
            )
        if noise_table is not None and noise_table.shape[0] != self.n_drives:
            raise ValueError(
                f"noise table has {noise_table.shape[0]} rows, "
                f"model has {self.n_drives} physical drives"
            )
        self.pulses = pulses
        self.T = pulses.T
        self.noise_table = noise_table

    def _apply_noise(self, drives: np.ndarray, times: np.ndarray) -> np.ndarray:
        """drives (S, n_drives) scaled by the per-drive piecewise factors."""
        if self.noise_table is None:
            return drives
        seg = noise_segment(times, self.T, self.noise_table.shape[1])
        return drives * self.noise_table[:, seg].T

    def drive_values(self, times: np.ndarray) -> np.ndarray:
        """Coefficients c_n(t) for all drive terms; shape (len(times), C)."""
        raise NotImplementedError

    def evaluate(self, t: float) -> np.ndarray:
        """Hermitian Hamiltonian matrix at time t."""
        c = self.drive_values(np.atleast_1d(np.asarray(t, dtype=float)))[0]
        H = np.tensordot(c, self.drive_matrices, axes=(0, 0))
        H += H.conj().T
        if self.static_diagonal.any():
            idx = np.arange(self.dim)
            H[idx, idx] += self.static_diagonal
        return H

    def hamiltonian_stack(self, times: np.ndarray) -> np.ndarray:
        """Hamiltonians at many times at once; shape (len(times), dim, dim)."""
        dv = self.drive_values(times)
        Hs = np.tensordot(dv, self.drive_matrices, axes=(1, 0))
        Hs += Hs.conj().transpose(0, 2, 1)
        if self.static_diagonal.any():
            idx = np.arange(self.dim)
            Hs[:, idx, idx] += self.static_diagonal
        return Hs


class BellEffective(_DriveModel):
    """Five-level chain: Omega_1 |20><00| + Omega_2 |22><20| + Omega_3 |22><12|
    + Omega_4 |12><11| + h.c., zero diagonal."""

    dim = 5
    n_drives = 4
    chain_labels = BELL_CHAIN_LABELS

    def __init__(self, pulses: PulseParameterSet, noise_table: np.ndarray | None = None):
        super().__init__(pulses, 4, noise_table)
        self.drive_matrices = _chain_matrices(5, [(1, 0), (2, 1), (2, 3), (3, 4)])
        self.static_diagonal = np.zeros(5)

    def drive_values(self, times):
        return self._apply_noise(self.pulses.values(times), times)


class GhzEffective(_DriveModel):
    """Six-level chain with couplings Omega_1 ... Omega_5 down the ladder."""

    dim = 6
    n_drives = 5
    chain_labels = GHZ_CHAIN_LABELS

    def __init__(self, pulses: PulseParameterSet, noise_table: np.ndarray | None = None):
        super().__init__(pulses, 5, noise_table)
        self.drive_matrices = _chain_matrices(6, [(1, 0), (2, 1), (2, 3), (3, 4), (4, 5)])
        self.static_diagonal = np.zeros(6)

    def drive_values(self, times):
        return self._apply_noise(self.pulses.values(times), times)


class BellFull(_DriveModel):
    """Two-atom 9x9 model: four detuned drives plus the V |22><22| shift.

    Channel mapping is fixed: channel 1 -> Omega_10, 2 -> Omega_20,
    3 -> Omega_11, 4 -> Omega_21.
    """

    dim = 9
    n_drives = 4
    drive_targets = ((1, 0), (2, 0), (1, 1), (2, 1))  # (atom, lower level) per channel

    def __init__(self, pulses: PulseParameterSet, V: float,
                 plan: DetuningPlan | None = None,
                 noise_table: np.ndarray | None = None):
        super().__init__(pulses, 4, noise_table)
        self.V = V
        self.register = QuditRegister(2)
        self.plan = plan if plan is not None else bell_detunings(V)
        self.deltas = np.array([self.plan.delta(k, j) for (k, j) in self.drive_targets])
        self.drive_matrices = np.stack(
            [transition_operator(self.register, k, 2, j) for (k, j) in self.drive_targets]
        )
        self.static_diagonal = np.real(np.diag(rydberg_interaction(self.register, V)))

    def drive_values(self, times):
        vals = self.pulses.values(times) * np.exp(-1j * np.outer(times, self.deltas))
        return self._apply_noise(vals, times)


class GhzFull(_DriveModel):
    """Three-atom 27x27 model with the modulated two-photon bridge.

    Channels 1, 3, 4, 5 drive Omega_10, Omega_21, Omega_11, Omega_31.
    Channel 2 defines the effective |200> -> |222> coupling; the two bridge
    drives Omega_20 = Omega_30 = sqrt(2 omega |Omega_2|) e^{i arg/2} carry
    the cos(omega t) and i sin(omega t) modulation applied here.
    """

    dim = 27
    n_drives = 6
    # physical drive order: (1,0), (2,0), (3,0), (1,1), (2,1), (3,1)
    drive_targets = ((1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (3, 1))

    def __init__(self, pulses: PulseParameterSet, V: float, omega: float,
                 plan: DetuningPlan | None = None,
                 noise_table: np.ndarray | None = None):
        super().__init__(pulses, 5, noise_table)
        if omega <= 0:
            raise ValueError("GhzFull requires a positive modulation frequency omega")
        self.V = V
        self.omega = omega
        self.register = QuditRegister(3)
        self.plan = plan if plan is not None else ghz_detunings(V)
        self.deltas = np.array([self.plan.delta(k, j) for (k, j) in self.drive_targets])
        self.drive_matrices = np.stack(
            [transition_operator(self.register, k, 2, j) for (k, j) in self.drive_targets]
        )
        self.static_diagonal = np.real(np.diag(rydberg_interaction(self.register, V)))

    def _physical_drives(self, times):
        ch = self.pulses.values(times)  # (S, 5)
        bridge = bridge_amplitude(ch[:, 1], self.omega)
        drives = np.empty((len(times), 6), dtype=complex)
        drives[:, 0] = ch[:, 0]
        drives[:, 1] = bridge * np.cos(self.omega * times)
        drives[:, 2] = bridge * 1j * np.sin(self.omega * times)
        drives[:, 3] = ch[:, 3]
        drives[:, 4] = ch[:, 2]
        drives[:, 5] = ch[:, 4]
        return drives

    def drive_values(self, times):
        vals = self._physical_drives(times) * np.exp(-1j * np.outer(times, self.deltas))
        return self._apply_noise(vals, times)


class GhzIntermediate(_DriveModel):
    """Eight-level ladder obtained before eliminating the bridge level.

    Exactly seven couplings; the bridge drives carry their cos / i sin
    modulation, and the drive on atom 1's 1->2 transition appears on two
    links. The |112><111| link is driven by channel 5 (atom 3's 1->2
    transition), consistent with the six-level reduction.
    """

    dim = 8
    n_drives = 6
    chain_labels = GHZ_INTERMEDIATE_LABELS
    # links as (row, col) in the basis above, fed by physical drive index
    links = (
        ((1, 0), 0),  # Omega_10 |200><000|
        ((2, 1), 1),  # Omega_20 |220><200|
        ((2, 3), 3),  # Omega_11 |220><120|
        ((4, 2), 2),  # Omega_30 |222><220|
        ((4, 5), 4),  # Omega_21 |222><212|
        ((5, 6), 3),  # Omega_11 |212><112|
        ((6, 7), 5),  # Omega_31 |112><111|
    )

    def __init__(self, pulses: PulseParameterSet, omega: float,
                 noise_table: np.ndarray | None = None):
        super().__init__(pulses, 5, noise_table)
        if omega <= 0:
            raise ValueError("GhzIntermediate requires a positive omega")
        self.omega = omega
        self.drive_matrices = _chain_matrices(8, [rc for rc, _ in self.links])
        self.static_diagonal = np.zeros(8)
        self._link_drive = np.array([drv for _, drv in self.links])

    def _physical_drives(self, times):
        ch = self.pulses.values(times)
        bridge = bridge_amplitude(ch[:, 1], self.omega)
        drives = np.empty((len(times), 6), dtype=complex)
        drives[:, 0] = ch[:, 0]
        drives[:, 1] = bridge * np.cos(self.omega * times)
        drives[:, 2] = bridge * 1j * np.sin(self.omega * times)
        drives[:, 3] = ch[:, 3]
        drives[:, 4] = ch[:, 2]
        drives[:, 5] = ch[:, 4]
        return drives

    def drive_values(self, times):
        phys = self._apply_noise(self._physical_drives(times), times)
        return phys[:, self._link_drive]
