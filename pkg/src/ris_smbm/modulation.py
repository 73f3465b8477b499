"""Bit mapping and QAM constellations for spatial media-based modulation.

A frame of ``eta = log2(M) + m_rf + log2(n_T)`` bits is split into three
fields: the first ``log2(M)`` bits select a QAM symbol, the next ``m_rf``
bits select a mirror activation pattern (MAP), and the last ``log2(n_T)``
bits select the transmit antenna.  Each field maps to a 1-based index via
``1 + <unsigned binary value of the field, MSB first>``.  The (MAP, antenna)
pair addresses one of ``F * n_T`` transmission-vector positions through
``i = (k - 1) * n_T + l``.

Constellations are the fixed grids documented in ``docs/constellations.md``:
square Gray-coded grids for M in {4, 16, 64, 256}, wide rectangular grids for
M in {8, 32, 128}, and BPSK for M = 2, all scaled to unit average energy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError

SUPPORTED_MODULATION_ORDERS = (2, 4, 8, 16, 32, 64, 128, 256)


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class SmbmConfig:
    """Scheme parameters and the bit-field widths derived from them.

    Parameters
    ----------
    modulation_order : int
        QAM order M, a power of two >= 2.
    num_tx_antennas : int
        Transmit antennas n_T, a power of two >= 1.
    num_rf_mirrors : int
        RF mirrors per antenna m_rf, >= 0.  Each on/off pattern of the
        mirrors is one MAP, so there are 2**m_rf MAPs.
    num_ris_elements : int
        Reflecting elements N on the surface, >= 1.
    symbol_period : float
        Symbol duration T_s in seconds (used by throughput only).
    """

    modulation_order: int
    num_tx_antennas: int
    num_rf_mirrors: int
    num_ris_elements: int
    symbol_period: float = 1.0

    def __post_init__(self) -> None:
        if self.modulation_order < 2 or not _is_power_of_two(self.modulation_order):
            raise ConfigError("modulation_order must be a power of two >= 2")
        if self.modulation_order not in SUPPORTED_MODULATION_ORDERS:
            raise ConfigError(
                f"modulation_order {self.modulation_order} not supported "
                f"(choose from {SUPPORTED_MODULATION_ORDERS})"
            )
        if not _is_power_of_two(self.num_tx_antennas):
            raise ConfigError("num_tx_antennas must be a power of two >= 1")
        if self.num_rf_mirrors < 0:
            raise ConfigError("num_rf_mirrors must be >= 0")
        if self.num_ris_elements < 1:
            raise ConfigError("num_ris_elements must be >= 1")
        if self.symbol_period <= 0:
            raise ConfigError("symbol_period must be positive")

    @property
    def symbol_bits(self) -> int:
        return self.modulation_order.bit_length() - 1

    @property
    def mirror_bits(self) -> int:
        return self.num_rf_mirrors

    @property
    def antenna_bits(self) -> int:
        return self.num_tx_antennas.bit_length() - 1

    @property
    def map_count(self) -> int:
        """Number of mirror activation patterns F = 2**m_rf."""
        return 1 << self.num_rf_mirrors

    @property
    def num_pairs(self) -> int:
        """Number of (MAP, antenna) pairs F * n_T."""
        return self.map_count * self.num_tx_antennas

    @property
    def bits_per_frame(self) -> int:
        return self.symbol_bits + self.mirror_bits + self.antenna_bits

    @property
    def spectral_efficiency(self) -> int:
        """Bits conveyed per symbol period, in bits/s/Hz."""
        return self.bits_per_frame


@dataclass(frozen=True)
class TxSelection:
    """One transmission choice: symbol index p, MAP index k, antenna index l.

    All indices are 1-based; ``flat_index`` is the position of the symbol in
    the length-``F * n_T`` transmission vector.
    """

    symbol_index: int
    map_index: int
    antenna_index: int
    num_tx_antennas: int

    @property
    def flat_index(self) -> int:
        return (self.map_index - 1) * self.num_tx_antennas + self.antenna_index


@dataclass(frozen=True)
class Constellation:
    """Ordered QAM points with unit average energy.

    ``points[p - 1]`` is the symbol for 1-based index p.  ``scale`` is the
    divisor applied to the documented integer grid, so
    ``points * scale`` recovers the pre-normalization values.
    """

    points: np.ndarray
    scale: float

    @property
    def order(self) -> int:
        return len(self.points)

    def point(self, symbol_index: int) -> complex:
        """Symbol value for a 1-based index."""
        if not 1 <= symbol_index <= self.order:
            raise ValueError(f"symbol index {symbol_index} out of range [1, {self.order}]")
        return complex(self.points[symbol_index - 1])


def _gray_decode(bits: np.ndarray) -> int:
    """Decode an MSB-first Gray codeword to its rank in the level sequence."""
    value = 0
    acc = 0
    for b in bits:
        acc ^= int(b)
        value = (value << 1) | acc
    return value


def build_constellation(modulation_order: int) -> Constellation:
    """Build the fixed unit-energy QAM grid for a supported order.

    The label of index p is the ``log2(M)``-bit big-endian encoding of
    ``p - 1``.  The first ``ceil(log2(M)/2)`` label bits Gray-decode to the
    in-phase level (ascending), the rest Gray-decode to the quadrature level
    (descending); with no quadrature bits the points are real (BPSK).
    """
    M = modulation_order
    if M not in SUPPORTED_MODULATION_ORDERS:
        raise ConfigError(
            f"modulation_order {M} not supported (choose from {SUPPORTED_MODULATION_ORDERS})"
        )
    m = M.bit_length() - 1
    n_i = (m + 1) // 2
    n_q = m - n_i
    i_levels = np.arange(-(2**n_i - 1), 2**n_i, 2, dtype=float)
    q_levels = np.arange(2**n_q - 1, -(2**n_q), -2, dtype=float) if n_q else np.zeros(1)
    grid = np.empty(M, dtype=complex)
    for p0 in range(M):
        label = np.array([(p0 >> (m - 1 - j)) & 1 for j in range(m)], dtype=np.uint8)
        i_idx = _gray_decode(label[:n_i])
        q_idx = _gray_decode(label[n_i:]) if n_q else 0
        grid[p0] = i_levels[i_idx] + 1j * q_levels[q_idx]
    scale = math.sqrt(float(np.mean(np.abs(grid) ** 2)))
    return Constellation(points=grid / scale, scale=scale)


def _as_bit_array(frame) -> np.ndarray:
    bits = np.asarray(frame)
    if bits.ndim != 1:
        raise ValueError("bit frame must be one-dimensional")
    if bits.size and not np.isin(bits, (0, 1)).all():
        raise ValueError("bit frame entries must be 0 or 1")
    return bits.astype(np.uint8)


def _bits_to_value(bits: np.ndarray) -> int:
    value = 0
    for b in bits:
        value = (value << 1) | int(b)
    return value


def _value_to_bits(value: int, width: int) -> np.ndarray:
    return np.array([(value >> (width - 1 - j)) & 1 for j in range(width)], dtype=np.uint8)


def split_bits(frame, cfg: SmbmConfig) -> TxSelection:
    """Split a frame of ``eta`` bits into the (symbol, MAP, antenna) indices."""
    bits = _as_bit_array(frame)
    eta = cfg.bits_per_frame
    if bits.size != eta:
        raise ValueError(f"expected {eta} bits, got {bits.size}")
    m_s, m_rf = cfg.symbol_bits, cfg.mirror_bits
    return TxSelection(
        symbol_index=1 + _bits_to_value(bits[:m_s]),
        map_index=1 + _bits_to_value(bits[m_s : m_s + m_rf]),
        antenna_index=1 + _bits_to_value(bits[m_s + m_rf :]),
        num_tx_antennas=cfg.num_tx_antennas,
    )


def merge_bits(sel: TxSelection, cfg: SmbmConfig) -> np.ndarray:
    """Inverse of :func:`split_bits`: reassemble the frame for a selection."""
    if not 1 <= sel.symbol_index <= cfg.modulation_order:
        raise ValueError(f"symbol index {sel.symbol_index} out of range [1, {cfg.modulation_order}]")
    if not 1 <= sel.map_index <= cfg.map_count:
        raise ValueError(f"MAP index {sel.map_index} out of range [1, {cfg.map_count}]")
    if not 1 <= sel.antenna_index <= cfg.num_tx_antennas:
        raise ValueError(
            f"antenna index {sel.antenna_index} out of range [1, {cfg.num_tx_antennas}]"
        )
    return np.concatenate(
        [
            _value_to_bits(sel.symbol_index - 1, cfg.symbol_bits),
            _value_to_bits(sel.map_index - 1, cfg.mirror_bits),
            _value_to_bits(sel.antenna_index - 1, cfg.antenna_bits),
        ]
    )


def build_tx_vector(sel: TxSelection, cfg: SmbmConfig, constellation: Constellation) -> np.ndarray:
    """One-hot transmission vector of length ``F * n_T``.

    The selected symbol sits at ``flat_index`` (1-based); every other entry
    is zero.
    """
    if constellation.order != cfg.modulation_order:
        raise ValueError("constellation order does not match the configuration")
    vec = np.zeros(cfg.num_pairs, dtype=complex)
    vec[sel.flat_index - 1] = constellation.point(sel.symbol_index)
    return vec


def hamming_errors(a, b) -> int:
    """Number of positions where two equal-length bit frames differ."""
    bits_a = _as_bit_array(a)
    bits_b = _as_bit_array(b)
    if bits_a.size != bits_b.size:
        raise ValueError(f"length mismatch: {bits_a.size} vs {bits_b.size}")
    return int(np.count_nonzero(bits_a != bits_b))


# Vectorized helpers used by the Monte Carlo engine.  Index arrays are
# 0-based here; popcount of XORed field values equals the Hamming distance
# of the corresponding bit fields because field widths are fixed.


def split_frames(frames: np.ndarray, cfg: SmbmConfig):
    """Split an array of frames, shape (n, eta), into 0-based index arrays.

    Returns ``(symbol, map, antenna, flat)`` arrays of shape (n,).
    """
    m_s, m_rf = cfg.symbol_bits, cfg.mirror_bits
    weights = 1 << np.arange(cfg.bits_per_frame - 1, -1, -1, dtype=np.int64)
    sym = frames[:, :m_s] @ weights[-m_s:] if m_s else np.zeros(len(frames), dtype=np.int64)
    mp = (
        frames[:, m_s : m_s + m_rf] @ weights[-m_rf:]
        if m_rf
        else np.zeros(len(frames), dtype=np.int64)
    )
    ant = (
        frames[:, m_s + m_rf :] @ weights[-cfg.antenna_bits :]
        if cfg.antenna_bits
        else np.zeros(len(frames), dtype=np.int64)
    )
    flat = mp * cfg.num_tx_antennas + ant
    return sym.astype(np.int64), mp.astype(np.int64), ant.astype(np.int64), flat


def bit_error_counts(
    sym_a: np.ndarray, flat_a: np.ndarray, sym_b: np.ndarray, flat_b: np.ndarray
) -> np.ndarray:
    """Per-trial Hamming distance between frames given 0-based field values.

    The flat pair index concatenates the MAP and antenna bit fields, so one
    popcount covers both.
    """
    return np.bitwise_count((sym_a ^ sym_b).astype(np.uint64)) + np.bitwise_count(
        (flat_a ^ flat_b).astype(np.uint64)
    )
