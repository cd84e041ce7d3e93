"""Symmetric Gaussian drive pulses, amplitude noise, and the two-photon bridge.

Every drive envelope has the form

    Omega(t) = (A/T) * [exp(-(t-T/2)^2 / (2 (sigma T)^2)) - B] / (1 - B) * e^{i theta}

with B the bare Gaussian evaluated at t=0, so the envelope vanishes exactly
at t=0 and t=T and peaks at |Omega(T/2)| = A/T. Times are measured in units
of the total duration T and amplitudes in units of 1/T.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np


def gaussian_envelope(t: float, A: float, sigma: float, theta: float, T: float = 1.0) -> complex:
    """Complex drive amplitude at time t; raises if t lies outside [0, T]."""
    if not 0.0 <= t <= T:
        raise ValueError(f"t={t} outside pulse domain [0, {T}]")
    B = np.exp(-((T / 2) ** 2) / (2.0 * (sigma * T) ** 2))
    g = np.exp(-((t - T / 2) ** 2) / (2.0 * (sigma * T) ** 2))
    return (A / T) * (g - B) / (1.0 - B) * np.exp(1j * theta)


@dataclass(frozen=True)
class PulseParameterSet:
    """Per-channel (A_k, sigma_k, theta_k) triples plus the total time T.

    These are the optimizer's decision variables: peak scale A_k (so the
    peak Rabi frequency is A_k/T), width fraction sigma_k, and constant
    phase theta_k.
    """

    A: tuple[float, ...]
    sigma: tuple[float, ...]
    theta: tuple[float, ...]
    T: float = 1.0

    def __post_init__(self):
        if not len(self.A) == len(self.sigma) == len(self.theta):
            raise ValueError("A, sigma, theta must have equal length")
        if any(a < 0 for a in self.A):
            raise ValueError("amplitudes must be non-negative")
        if any(s <= 0 for s in self.sigma):
            raise ValueError("widths must be positive")
        if self.T <= 0:
            raise ValueError("T must be positive")

    @property
    def n_channels(self) -> int:
        return len(self.A)

    def values(self, t) -> np.ndarray:
        """Complex amplitudes of all channels; t scalar -> (K,), array (S,) -> (S, K).

        Internal fast path: no domain check, vectorized over channels and times.
        """
        A = np.asarray(self.A)
        sig = np.asarray(self.sigma)
        T = self.T
        B = np.exp(-((T / 2) ** 2) / (2.0 * (sig * T) ** 2))
        t = np.asarray(t, dtype=float)
        g = np.exp(-((t[..., None] - T / 2) ** 2) / (2.0 * (sig * T) ** 2))
        env = (A / T) * (g - B) / (1.0 - B)
        return env * np.exp(1j * np.asarray(self.theta))

    def channel(self, k: int) -> Callable[[float], complex]:
        """Time-function for channel k (0-based)."""
        A, sig, th = self.A[k], self.sigma[k], self.theta[k]
        return lambda t: gaussian_envelope(t, A, sig, th, self.T)

    def with_theta(self, theta: Sequence[float]) -> "PulseParameterSet":
        return PulseParameterSet(self.A, self.sigma, tuple(float(x) for x in theta), self.T)

    def to_records(self) -> list[dict]:
        return [
            {"A": a, "sigma": s, "theta": th}
            for a, s, th in zip(self.A, self.sigma, self.theta)
        ]

    @classmethod
    def from_records(cls, records: Sequence[dict], T: float = 1.0) -> "PulseParameterSet":
        return cls(
            tuple(float(r["A"]) for r in records),
            tuple(float(r["sigma"]) for r in records),
            tuple(float(r["theta"]) for r in records),
            T,
        )


def bell_default_pulses(T: float = 1.0) -> PulseParameterSet:
    """Pre-optimized four-channel parameter set for the five-level Bell chain.

    Drives the chain |00> - |20> - |22> - |12> - |11> to the balanced
    three-component superposition with final infidelity ~1e-5.
    """
    return PulseParameterSet(
        A=(2.94874, 6.47073, 5.64579, 9.28367),
        sigma=(0.24857, 0.24714, 0.24667, 0.25359),
        theta=(0.00000, 3.14148, -0.76998, -2.37169),
        T=T,
    )


def ghz_default_pulses(T: float = 1.0) -> PulseParameterSet:
    """Pre-optimized five-channel parameter set for the six-level GHZ chain."""
    return PulseParameterSet(
        A=(7.07187, 5.76400, 9.46614, 3.87972, 7.65357),
        sigma=(0.25219, 0.25323, 0.25667, 0.24955, 0.25311),
        theta=(2.02993, 1.11166, -2.47423, 2.66979, -1.76635),
        T=T,
    )


# ---------------------------------------------------------------------------
# multiplicative amplitude noise
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NoiseSpec:
    """Uniform multiplicative amplitude noise, piecewise constant in time.

    Each of `grid` equal segments of [0, T] gets an independent factor
    1 + r with r drawn uniformly from (-R, R) by a generator seeded with
    `seed`; the same seed always reproduces the same realization.
    """

    R: float
    seed: int = 0
    grid: int = 1000

    def __post_init__(self):
        if not 0.0 <= self.R < 1.0:
            raise ValueError(f"noise amplitude R must be in [0, 1), got {self.R}")
        if self.grid < 1:
            raise ValueError("noise grid must have at least one segment")


def noise_multipliers(noise: NoiseSpec) -> np.ndarray:
    """Per-segment factors (grid,); all exactly 1.0 when R == 0."""
    rng = np.random.default_rng(noise.seed)
    return 1.0 + rng.uniform(-noise.R, noise.R, noise.grid)


def noise_segment(t, T: float, grid: int):
    """Segment index for time t in [0, T]; the endpoint maps to the last segment."""
    idx = np.asarray(t / T * grid, dtype=int)
    return np.clip(idx, 0, grid - 1)


def drive_noise_seeds(master_seed: int, n_drives: int) -> list[int]:
    """Deterministic child seeds so each physical drive gets independent noise."""
    state = np.random.SeedSequence(master_seed).generate_state(n_drives)
    return [int(s) for s in state]


def noise_multiplier_table(noise: NoiseSpec, n_drives: int) -> np.ndarray:
    """(n_drives, grid) factors; row k is seeded from the k-th child seed."""
    seeds = drive_noise_seeds(noise.seed, n_drives)
    return np.stack(
        [noise_multipliers(NoiseSpec(noise.R, s, noise.grid)) for s in seeds]
    )


class NoisyPulse:
    """Wraps a drive time-function with piecewise-constant amplitude factors."""

    def __init__(self, pulse: Callable[[float], complex], noise: NoiseSpec, T: float = 1.0):
        self._pulse = pulse
        self._noise = noise
        self._T = T
        self.multipliers = noise_multipliers(noise)

    def __call__(self, t):
        return self._pulse(t) * self.multipliers[noise_segment(t, self._T, self._noise.grid)]


def apply_amplitude_noise(
    pulse: Callable[[float], complex], noise: NoiseSpec, T: float = 1.0
) -> NoisyPulse:
    """Return the noisy drive (1 + r(t)) * pulse(t); zeros of the pulse are kept."""
    return NoisyPulse(pulse, noise, T)


# ---------------------------------------------------------------------------
# GHZ bridge: factor an effective second-order coupling into two real drives
# ---------------------------------------------------------------------------

def bridge_amplitude(omega2_values, omega: float):
    """Base envelope of the two bridge drives given the effective coupling.

    Both bridge drives share sqrt(2 omega |Omega2|) e^{i arg(Omega2)/2}, so
    their product divided by 2 omega reproduces Omega2 including its phase.
    The half-split of the phase keeps both envelopes smooth; the cos/sin
    modulation that separates them in frequency is applied by the
    Hamiltonian builders, not here.
    """
    vals = np.asarray(omega2_values, dtype=complex)
    return np.sqrt(2.0 * omega * np.abs(vals)) * np.exp(0.5j * np.angle(vals))


def ghz_bridge_pulses(
    omega2: Callable[[float], complex], omega: float
) -> tuple[Callable[[float], complex], Callable[[float], complex]]:
    """Two identical base envelopes whose product / (2 omega) equals omega2(t)."""
    if omega <= 0:
        raise ValueError("modulation frequency omega must be positive")

    def base(t):
        return bridge_amplitude(omega2(t), omega)

    return base, base
