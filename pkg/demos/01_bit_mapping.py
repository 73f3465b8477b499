"""Walk through the bit mapping: frame -> (symbol, MAP, antenna) -> tx vector.

A frame of eta = log2(M) + m_rf + log2(n_T) bits splits into three fields.
With M=4, m_rf=2, n_T=4 the frame [1 1 1 0 0 1] selects the 4-QAM symbol
x_4 = 1-j, mirror pattern k=3, and antenna l=2, which lands the symbol at
position (k-1)*n_T + l = 10 of the 16-entry transmission vector.
"""
import numpy as np

from ris_smbm import SmbmConfig, build_constellation, build_tx_vector, merge_bits, split_bits

cfg = SmbmConfig(modulation_order=4, num_tx_antennas=4, num_rf_mirrors=2, num_ris_elements=16)
const = build_constellation(cfg.modulation_order)

print(f"config: M={cfg.modulation_order} n_T={cfg.num_tx_antennas} "
      f"m_rf={cfg.num_rf_mirrors} -> eta={cfg.bits_per_frame} bits/frame, "
      f"{cfg.num_pairs} candidate positions")

frame = np.array([1, 1, 1, 0, 0, 1])
sel = split_bits(frame, cfg)
print(f"\nframe {frame} splits into:")
print(f"  symbol index p = {sel.symbol_index}  ->  x_p = {const.point(sel.symbol_index):.4f}")
print(f"  MAP index    k = {sel.map_index}")
print(f"  antenna      l = {sel.antenna_index}")
print(f"  flat position i = (k-1)*n_T + l = {sel.flat_index}")

vec = build_tx_vector(sel, cfg, const)
print(f"\ntransmission vector (nonzero at position {np.flatnonzero(vec)[0] + 1}):")
for k in range(cfg.map_count):
    block = vec[k * cfg.num_tx_antennas : (k + 1) * cfg.num_tx_antennas]
    print(f"  MAP {k + 1}: " + "  ".join(f"{v:.3f}" if v else "0" for v in block))

print(f"\nround trip: merge_bits(split_bits(frame)) == frame -> "
      f"{np.array_equal(merge_bits(sel, cfg), frame)}")

print("\n4-QAM table (pre-normalization grid, divide by sqrt(2)):")
for p0 in range(4):
    print(f"  p={p0 + 1} label={p0:02b} -> {const.points[p0] * const.scale:.0f}")
