"""Joint (symbol, MAP, antenna) detection and real-multiplication accounting.

Both detectors scan every candidate pair and symbol.  The maximum-likelihood
form minimizes ``|y - sqrt(Es) * H[i] * x_p|^2``; the expanded low-complexity
form maximizes ``2 Re(conj(sqrt(Es) H[i]) y conj(x_p)) - |x_p|^2 |sqrt(Es) H[i]|^2``,
which differs from the ML metric only by the candidate-independent constant
``|y|^2``, so the two decisions coincide.  The saving comes from computing
``|sqrt(Es) H[i]|^2`` once per pair instead of once per (pair, symbol).

Ties (zero-probability under continuous noise) resolve to the smallest flat
pair index, then the smallest symbol index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import EffectiveChannelVector, RxSample
from .modulation import Constellation, SmbmConfig, TxSelection


@dataclass(frozen=True)
class DetectionResult:
    """Estimated selection plus optional per-candidate metric diagnostics."""

    selection: TxSelection
    real_multiplications: float
    metrics: np.ndarray | None = None

    @property
    def symbol_index(self) -> int:
        return self.selection.symbol_index

    @property
    def map_index(self) -> int:
        return self.selection.map_index

    @property
    def antenna_index(self) -> int:
        return self.selection.antenna_index

    @property
    def flat_index(self) -> int:
        return self.selection.flat_index


def count_rm_ml(cfg: SmbmConfig) -> float:
    """Real multiplications of the exhaustive ML scan: (N + 4M) n_T 2**m_rf."""
    return (cfg.num_ris_elements + 4 * cfg.modulation_order) * cfg.num_tx_antennas * cfg.map_count


def count_rm_elc(cfg: SmbmConfig) -> float:
    """Real multiplications of the expanded scan: 3 (1 + (M + N) / 4) n_T 2**m_rf."""
    return (
        3
        * (1 + (cfg.modulation_order + cfg.num_ris_elements) / 4)
        * cfg.num_tx_antennas
        * cfg.map_count
    )


def _selection_from_flat(pair0: int, sym0: int, cfg: SmbmConfig) -> TxSelection:
    return TxSelection(
        symbol_index=sym0 + 1,
        map_index=pair0 // cfg.num_tx_antennas + 1,
        antenna_index=pair0 % cfg.num_tx_antennas + 1,
        num_tx_antennas=cfg.num_tx_antennas,
    )


def detect_ml(
    y: RxSample,
    H: EffectiveChannelVector,
    constellation: Constellation,
    cfg: SmbmConfig,
    return_metrics: bool = False,
) -> DetectionResult:
    """Exhaustive ML detection over all pairs and symbols."""
    if len(H) != cfg.num_pairs:
        raise ValueError(f"channel row has {len(H)} entries, expected {cfg.num_pairs}")
    cand = np.sqrt(y.symbol_energy) * H.values[:, None] * constellation.points[None, :]
    metrics = np.abs(y.value - cand) ** 2
    flat = int(metrics.argmin())  # first occurrence: smallest pair, then symbol
    pair0, sym0 = divmod(flat, constellation.order)
    return DetectionResult(
        selection=_selection_from_flat(pair0, sym0, cfg),
        real_multiplications=count_rm_ml(cfg),
        metrics=metrics if return_metrics else None,
    )


def detect_elc(
    y: RxSample,
    H: EffectiveChannelVector,
    constellation: Constellation,
    cfg: SmbmConfig,
    return_metrics: bool = False,
) -> DetectionResult:
    """Expanded low-complexity detection; decision-identical to ML."""
    if len(H) != cfg.num_pairs:
        raise ValueError(f"channel row has {len(H)} entries, expected {cfg.num_pairs}")
    scaled = np.sqrt(y.symbol_energy) * H.values
    pair_power = np.abs(scaled) ** 2  # once per pair, reused for every symbol
    corr = np.conj(scaled) * y.value
    metrics = (
        2 * np.real(corr[:, None] * np.conj(constellation.points)[None, :])
        - pair_power[:, None] * (np.abs(constellation.points) ** 2)[None, :]
    )
    flat = int(metrics.argmax())
    pair0, sym0 = divmod(flat, constellation.order)
    return DetectionResult(
        selection=_selection_from_flat(pair0, sym0, cfg),
        real_multiplications=count_rm_elc(cfg),
        metrics=metrics if return_metrics else None,
    )


# Batch forms used by the Monte Carlo engine: gains has shape (n, F*n_T),
# y has shape (n,).  Returned index arrays are 0-based (pair, symbol).


def detect_ml_batch(
    y: np.ndarray, gains: np.ndarray, points: np.ndarray, sqrt_energy: float
) -> tuple[np.ndarray, np.ndarray]:
    cand = sqrt_energy * gains[:, :, None] * points[None, None, :]
    metrics = np.abs(y[:, None, None] - cand) ** 2
    flat = metrics.reshape(len(y), -1).argmin(axis=1)
    return flat // len(points), flat % len(points)


def detect_elc_batch(
    y: np.ndarray, gains: np.ndarray, points: np.ndarray, sqrt_energy: float
) -> tuple[np.ndarray, np.ndarray]:
    scaled = sqrt_energy * gains
    pair_power = np.abs(scaled) ** 2
    corr = np.conj(scaled) * y[:, None]
    metrics = 2 * np.real(corr[:, :, None] * np.conj(points)[None, None, :]) - pair_power[
        :, :, None
    ] * (np.abs(points) ** 2)[None, None, :]
    flat = metrics.reshape(len(y), -1).argmax(axis=1)
    return flat // len(points), flat % len(points)
