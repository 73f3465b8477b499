"""Rayleigh fading, RIS phase control, and received-sample synthesis.

Every (MAP, antenna) pair sees its own length-``N`` fading vector between
the source and the surface; a single length-``N`` vector connects the
surface to the destination.  All entries are i.i.d. circularly symmetric
complex Gaussian with unit variance.

Two channel rows matter:

* :func:`effective_channel` applies one reflection configuration (normally
  the one aligned to the transmitted pair) to every pair.  Only the active
  pair combines coherently; the other entries keep uniformly distributed
  phases.  This is the physical row: it is what the surface actually does
  during one symbol period.
* :func:`aligned_gains` evaluates each pair under the reflection
  configuration *its own* transmission would have used.  Because the surface
  is slaved to the data, the receiver hypothesis "pair (l, k) was sent"
  implies that configuration, so this is the row the detector and the error
  analysis must scan.  Every entry is real non-negative.

The two rows agree exactly at the transmitted pair's position.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .modulation import SmbmConfig, TxSelection


@dataclass(frozen=True)
class ChannelRealization:
    """Fading coefficients for one symbol period.

    ``source_ris`` has shape (F * n_T, N): row ``i`` holds the source-to-RIS
    gains of the pair with 1-based flat index ``i + 1`` (antenna-major within
    each MAP block).  ``ris_dest`` has shape (N,).
    """

    source_ris: np.ndarray
    ris_dest: np.ndarray
    num_tx_antennas: int

    @property
    def num_pairs(self) -> int:
        return self.source_ris.shape[0]

    @property
    def num_elements(self) -> int:
        return self.source_ris.shape[1]

    def pair_row(self, antenna_index: int, map_index: int) -> int:
        """0-based row for a 1-based (antenna, MAP) pair."""
        return (map_index - 1) * self.num_tx_antennas + (antenna_index - 1)

    # Polar decompositions: h = alpha * exp(-j theta), g = beta * exp(-j phi).
    @property
    def source_magnitudes(self) -> np.ndarray:
        return np.abs(self.source_ris)

    @property
    def source_phases(self) -> np.ndarray:
        return -np.angle(self.source_ris)

    @property
    def dest_magnitudes(self) -> np.ndarray:
        return np.abs(self.ris_dest)

    @property
    def dest_phases(self) -> np.ndarray:
        return -np.angle(self.ris_dest)


@dataclass(frozen=True)
class RisPhaseConfig:
    """Reflection phases (radians) chosen for one active (antenna, MAP) pair."""

    active_antenna: int
    active_map: int
    phases: np.ndarray

    @property
    def reflection_coefficients(self) -> np.ndarray:
        """Unit-modulus diagonal of the reflection matrix."""
        return np.exp(1j * self.phases)


@dataclass(frozen=True)
class EffectiveChannelVector:
    """Cascaded channel value for every (MAP, antenna) pair.

    ``active_index`` is the 1-based flat index the row was aligned for, or
    ``None`` when every entry carries its own alignment (see
    :func:`aligned_gains`).
    """

    values: np.ndarray
    active_index: int | None = None

    def __len__(self) -> int:
        return len(self.values)

    def entry(self, flat_index: int) -> complex:
        """Value at a 1-based flat index."""
        return complex(self.values[flat_index - 1])


@dataclass(frozen=True)
class RxSample:
    """One received baseband sample with the energies that produced it."""

    value: complex
    symbol_energy: float
    noise_variance: float


def draw_channel(cfg: SmbmConfig, rng: np.random.Generator) -> ChannelRealization:
    """Draw one i.i.d. CN(0, 1) realization for all pairs and elements."""
    shape = (cfg.num_pairs, cfg.num_ris_elements)
    h = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) * np.sqrt(0.5)
    g = (
        rng.standard_normal(cfg.num_ris_elements)
        + 1j * rng.standard_normal(cfg.num_ris_elements)
    ) * np.sqrt(0.5)
    return ChannelRealization(source_ris=h, ris_dest=g, num_tx_antennas=cfg.num_tx_antennas)


def align_phases(ch: ChannelRealization, active: tuple[int, int]) -> RisPhaseConfig:
    """Phases that cancel both hops for the active (antenna, MAP) pair.

    Element ``n`` gets ``theta_n + phi_n`` where ``theta`` and ``phi`` are the
    negated channel phases of the two hops, which makes every summand of the
    active pair's cascaded gain real non-negative and therefore maximizes its
    instantaneous SNR.
    """
    antenna_index, map_index = active
    row = ch.pair_row(antenna_index, map_index)
    if not 0 <= row < ch.num_pairs:
        raise ValueError(f"active pair {active} out of range")
    phases = -np.angle(ch.source_ris[row]) - np.angle(ch.ris_dest)
    return RisPhaseConfig(active_antenna=antenna_index, active_map=map_index, phases=phases)


def effective_channel(ch: ChannelRealization, phases: RisPhaseConfig) -> EffectiveChannelVector:
    """Channel row under one reflection configuration applied to all pairs."""
    if phases.phases.shape != (ch.num_elements,):
        raise ValueError("phase vector length does not match the element count")
    reflected = phases.reflection_coefficients * ch.ris_dest
    values = ch.source_ris @ reflected
    active = (phases.active_map - 1) * ch.num_tx_antennas + phases.active_antenna
    return EffectiveChannelVector(values=values, active_index=active)


def aligned_gains(ch: ChannelRealization) -> EffectiveChannelVector:
    """Per-pair cascaded gains, each under its own phase alignment.

    Entry ``i`` equals ``sum_n |h_i,n| * |g_n|``: the value
    :func:`effective_channel` would place at position ``i`` had the surface
    been configured for pair ``i``.  This is the candidate row the receiver
    tests hypotheses against.
    """
    values = np.abs(ch.source_ris) @ np.abs(ch.ris_dest)
    return EffectiveChannelVector(values=values.astype(np.complex128), active_index=None)


def transmit(
    H: EffectiveChannelVector,
    sel: TxSelection,
    symbol: complex,
    symbol_energy: float,
    noise_variance: float,
    rng: np.random.Generator,
) -> RxSample:
    """Propagate one symbol through the configured channel and add noise.

    The surface is always configured for the transmitted pair, so ``sel``
    must match the row's active index when the row carries one.
    """
    if H.active_index is not None and sel.flat_index != H.active_index:
        raise ValueError(
            f"selection flat index {sel.flat_index} does not match "
            f"the aligned pair {H.active_index}"
        )
    noise = (rng.standard_normal() + 1j * rng.standard_normal()) * np.sqrt(noise_variance / 2)
    value = np.sqrt(symbol_energy) * H.entry(sel.flat_index) * symbol + noise
    return RxSample(value=complex(value), symbol_energy=symbol_energy, noise_variance=noise_variance)
