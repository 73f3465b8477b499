"""Run a small BER sweep and print the curve.

The engine derives one counter-based substream per (SNR point, batch), so a
sweep is reproducible bit for bit regardless of worker count; rerun this
script and the numbers will not move.
"""
import numpy as np

from ris_smbm import SimPlan, SmbmConfig, sweep

cfg = SmbmConfig(modulation_order=4, num_tx_antennas=4, num_rf_mirrors=2, num_ris_elements=16)
plan = SimPlan(
    cfg=cfg,
    detector="ml",
    snr_grid_db=np.arange(48.0, 62.1, 2.0),
    master_seed=2024,
    min_bit_errors=200,
    max_trials=500_000,
)

print(f"RIS-SMBM, M={cfg.modulation_order}, n_T={cfg.num_tx_antennas}, "
      f"m_rf={cfg.num_rf_mirrors}, N={cfg.num_ris_elements} "
      f"({cfg.bits_per_frame} bits/s/Hz)\n")
print(f"{'Es/N0 [dB]':>10} {'BER':>12} {'stderr':>10} {'errors':>8} {'trials':>9}")
for p in sweep(plan):
    flag = " (truncated)" if p.truncated else ""
    print(f"{p.snr_db:>10.1f} {p.ber:>12.3e} {p.stderr:>10.1e} {p.bit_errors:>8} {p.trials:>9}{flag}")

print("\nlog-BER falls by ~0.5 decade per 10 dB here: index confusions between")
print("near-equal aligned gains dominate, and their probability scales as the")
print("collision density of two concentrated random sums.")
