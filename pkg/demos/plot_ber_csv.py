"""Overlay simulated BER and bound CSVs on one waterfall plot.

Usage: python demos/plot_ber_csv.py out/fig3b_n16_ber.csv [out/fig3b_n16_bound.csv ...]

Reads the CSV schemas written by `ris-smbm simulate` and `ris-smbm bound`
(joinable on snr_db) and plots BER vs SNR on a log axis.  Requires
matplotlib, which is intentionally not a package dependency.
"""
import csv
import sys
from pathlib import Path

import matplotlib.pyplot as plt


def read_curve(path):
    with open(path) as fh:
        rows = list(csv.DictReader(fh))
    snr = [float(r["snr_db"]) for r in rows]
    key = "aber_bound" if "aber_bound" in rows[0] else "ber"
    val = [float(r[key]) for r in rows]
    return snr, val, key


def main(paths):
    if not paths:
        print(__doc__)
        return 1
    for path in paths:
        snr, val, kind = read_curve(path)
        style = "--" if kind == "aber_bound" else "-o"
        plt.semilogy(snr, val, style, label=Path(path).stem)
    plt.xlabel("Es/N0 [dB]")
    plt.ylabel("BER")
    plt.grid(True, which="both", alpha=0.4)
    plt.legend()
    plt.tight_layout()
    plt.show()
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
