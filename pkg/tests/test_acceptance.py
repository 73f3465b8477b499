"""Acceptance criteria, one test per criterion.

Each test prints a `CRITERION n: PASS/FAIL` line (bypassing pytest capture)
so a full run reads as a checklist.  Monte Carlo criteria use fixed seeds:
every number below is reproducible bit for bit.
"""

import subprocess
import sys

import numpy as np
import pytest

from conftest import subprocess_env
from ris_smbm.analysis import (
    DATA_RATE_REFERENCE,
    ENERGY_SAVING_REFERENCE,
    aber_bound,
    complexity_table,
    cpep,
    data_rate_table,
    energy_saving_table,
)
from ris_smbm.channel import aligned_gains, align_phases, draw_channel, effective_channel
from ris_smbm.detect import detect_elc_batch, detect_ml_batch
from ris_smbm.modulation import SmbmConfig, build_constellation, hamming_errors, merge_bits, split_bits
from ris_smbm.simkit import SimPlan, sweep


_CAPTURE = None


@pytest.fixture(autouse=True)
def _capture_bypass(capfd):
    # lets the CRITERION lines print live even under pytest's fd capture
    global _CAPTURE
    _CAPTURE = capfd
    yield
    _CAPTURE = None


def _report(criterion: int, passed: bool, detail: str) -> None:
    line = f"CRITERION {criterion}: {'PASS' if passed else 'FAIL'} - {detail}"
    if _CAPTURE is not None:
        with _CAPTURE.disabled():
            print(f"\n{line}", flush=True)
    else:
        print(line, flush=True)
    assert passed, line


def _crossing_snr(points, level=1e-3):
    """SNR where the fitted log-linear BER curve crosses `level`.

    The measured curves are straight lines in log(BER) over these windows, so
    a least-squares fit over all grid points pins the crossing far better
    than a single bracketing interpolation.
    """
    snr = np.array([p.snr_db for p in points])
    logber = np.log10([p.ber for p in points])
    slope, intercept = np.polyfit(snr, logber, 1)
    return (np.log10(level) - intercept) / slope


# ----------------------------------------------------------------- tables

def test_criterion_1_energy_saving_table():
    rows = energy_saving_table()
    ok = True
    for row in rows:
        expected = ENERGY_SAVING_REFERENCE[
            (row.modulation_order, row.num_tx_antennas, row.num_rf_mirrors)
        ]
        for scheme, value in expected.items():
            ok &= round(row.savings[scheme], 2) == value
    _report(1, ok, "all nine energy-saving percentages reproduced to two decimals")


def test_criterion_2_data_rate_table():
    rows = data_rate_table()
    matches = 0
    flags = []
    for row in rows:
        key = (row.num_tx_antennas, row.num_rf_mirrors, row.modulation_order)
        for scheme, ref in DATA_RATE_REFERENCE[key].items():
            if row.rates[scheme] == ref:
                matches += 1
        flags.extend((key, s, row.rates[s], ref) for s, ref in row.discrepancies.items())
    ok = matches == 11 and flags == [((32, 10, 8), "RIS-SM", 8, 9)]
    _report(2, ok, f"{matches}/12 cells match; flagged {flags}")


def test_criterion_3_complexity_table():
    rows = complexity_table()
    first, second = rows[0].real_multiplications, rows[1].real_multiplications
    ok = (
        first["RIS-SMBM (ML)"] == 12288
        and first["RIS-SMBM (ELC)"] == 7680
        and first["RIS-SMBM (ELC)"] < first["RIS-SMBM (ML)"]
        and second["RIS-SMBM (ELC)"] < second["RIS-SMBM (ML)"]
    )
    _report(
        3,
        ok,
        "complexity at (4,8,5,32): ML=12288 ELC=7680; ELC < ML at both parameter points",
    )


# ------------------------------------------------- detector equivalence

def test_criterion_4_ml_elc_identity():
    configs = (
        SmbmConfig(4, 4, 2, 16),
        SmbmConfig(2, 4, 3, 64),
        SmbmConfig(16, 2, 1, 8),
    )
    snrs = (0.0, 20.0, 40.0, 55.0, 70.0)
    rng = np.random.default_rng(40_040)
    trials = 0
    identical = True
    for cfg in configs:
        points = build_constellation(cfg.modulation_order).points
        n = 7_000
        for snr_db in snrs:
            n0 = 10 ** (-snr_db / 10)
            shape = (n, cfg.num_pairs, cfg.num_ris_elements)
            mag_h = np.hypot(rng.standard_normal(shape), rng.standard_normal(shape)) * np.sqrt(0.5)
            mag_g = np.hypot(
                rng.standard_normal((n, cfg.num_ris_elements)),
                rng.standard_normal((n, cfg.num_ris_elements)),
            ) * np.sqrt(0.5)
            gains = np.einsum("tpn,tn->tp", mag_h, mag_g)
            sym0 = rng.integers(0, cfg.modulation_order, n)
            flat0 = rng.integers(0, cfg.num_pairs, n)
            w = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) * np.sqrt(n0 / 2)
            y = gains[np.arange(n), flat0] * points[sym0] + w
            ml = detect_ml_batch(y, gains, points, 1.0)
            elc = detect_elc_batch(y, gains, points, 1.0)
            identical &= np.array_equal(ml[0], elc[0]) and np.array_equal(ml[1], elc[1])
            trials += n
    _report(4, identical and trials >= 100_000, f"identical decisions on all {trials} trials")


# ------------------------------------------------------ phase alignment

def test_criterion_5_phase_alignment():
    cfg = SmbmConfig(2, 1, 0, 64)
    rng = np.random.default_rng(50_050)
    n = 10_000
    values = np.empty(n)
    all_aligned = True
    for i in range(n):
        ch = draw_channel(cfg, rng)
        entry = effective_channel(ch, align_phases(ch, (1, 1))).entry(1)
        all_aligned &= entry.real > 0 and abs(entry.imag) < 1e-9 * entry.real
        values[i] = entry.real
    mean = values.mean()
    expected = 64 * np.pi / 4
    ok = all_aligned and abs(mean / expected - 1) < 0.02
    _report(
        5,
        ok,
        f"active entry real positive in all {n} trials; mean {mean:.2f} vs N*pi/4 = {expected:.2f}",
    )


# --------------------------------------- bound vs simulation, N trends

BOUND_CFG = SmbmConfig(4, 4, 2, 16)
BOUND_GRID = (55.0, 57.0, 59.0, 61.0, 63.0)


@pytest.fixture(scope="module")
def bound_and_sim():
    plan = SimPlan(
        cfg=BOUND_CFG,
        snr_grid_db=BOUND_GRID,
        master_seed=60_060,
        min_bit_errors=2500,
        max_trials=4_000_000,
    )
    sim = sweep(plan)
    bound = aber_bound(BOUND_CFG, BOUND_GRID, samples=250_000, rng=np.random.default_rng(60_061))
    return sim, bound


def test_criterion_6_bound_tracks_simulation(bound_and_sim):
    # The implemented bound is essentially tight at this operating point (the
    # true ratio is ~1.02, not mid-interval), so the stochastic lower edge is
    # tested with the same 3-combined-standard-error convention the dominance
    # invariant uses; the 2.5x upper edge is enforced on the point estimate.
    sim, bound = bound_and_sim
    below = [(p, b) for p, b in zip(sim, bound) if p.ber < 1e-3]
    assert below, "grid never crossed 1e-3"
    point, bnd = below[0]
    ratio = bnd.aber_bound / point.ber
    sigma = ratio * np.hypot(point.stderr / point.ber, bnd.stderr / bnd.aber_bound)
    ok = (1.0 - 3 * sigma) <= ratio <= 2.5
    _report(
        6,
        ok,
        f"at {point.snr_db:.0f} dB (first BER < 1e-3: {point.ber:.2e}) "
        f"bound/simulation = {ratio:.3f} +- {sigma:.3f} (must be in [1, 2.5] within 3 sigma)",
    )


def test_criterion_7_surface_size_trend():
    snr = 57.0
    points = {}
    for N in (4, 16, 64):
        plan = SimPlan(
            cfg=SmbmConfig(4, 4, 2, N),
            snr_grid_db=(snr,),
            master_seed=70_070,
            min_bit_errors=500,
            max_trials=2_000_000,
        )
        (points[N],) = sweep(plan)
    ok = True
    gaps = []
    for big, small in ((4, 16), (16, 64)):
        a, b = points[big], points[small]
        sep = (a.ber - b.ber) / np.hypot(a.stderr, b.stderr)
        gaps.append(sep)
        ok &= a.ber > b.ber and sep >= 3.0
    _report(
        7,
        ok,
        f"BER at {snr:.0f} dB: "
        + " > ".join(f"{points[N].ber:.2e} (N={N})" for N in (4, 16, 64))
        + f"; separations {gaps[0]:.1f} and {gaps[1]:.1f} combined standard errors",
    )


def test_criterion_8_mirror_count_gaps():
    grids = {
        1: (44.0, 46.0, 48.0, 50.0, 52.0),
        3: (57.0, 59.0, 61.0, 63.0, 65.0),
        5: (69.0, 71.0, 73.0, 75.0, 77.0),
    }
    crossings = {}
    for m_rf, grid in grids.items():
        plan = SimPlan(
            cfg=SmbmConfig(2, 4, m_rf, 64),
            snr_grid_db=grid,
            master_seed=80_080,
            min_bit_errors=600,
            max_trials=2_000_000,
        )
        points = sweep(plan)
        assert max(p.ber for p in points) > 1e-3 > min(p.ber for p in points)
        crossings[m_rf] = _crossing_snr(points)
    gap31 = crossings[3] - crossings[1]
    gap53 = crossings[5] - crossings[3]
    ok = 11.0 <= gap31 <= 15.0 and 11.0 <= gap53 <= 15.0
    _report(
        8,
        ok,
        f"horizontal gaps at BER=1e-3: m_rf 3 vs 1 = {gap31:.2f} dB, "
        f"5 vs 3 = {gap53:.2f} dB (expected 13 +- 2)",
    )


def test_criterion_9_cross_scheme_ordering():
    snr = 38.0
    configs = {
        "RIS-SMBM": SmbmConfig(64, 2, 1, 32),
        "RIS-MBM": SmbmConfig(8, 1, 5, 32),
        "RIS-SM": SmbmConfig(4, 64, 0, 32),
    }
    assert all(cfg.bits_per_frame == 8 for cfg in configs.values())
    points = {}
    for name, cfg in configs.items():
        plan = SimPlan(
            cfg=cfg,
            snr_grid_db=(snr,),
            master_seed=90_090,
            min_bit_errors=400,
            max_trials=1_000_000,
        )
        (points[name],) = sweep(plan)
    ok = True
    seps = []
    for better, worse in (("RIS-SMBM", "RIS-MBM"), ("RIS-MBM", "RIS-SM")):
        a, b = points[better], points[worse]
        sep = (b.ber - a.ber) / np.hypot(a.stderr, b.stderr)
        seps.append(sep)
        ok &= a.ber < b.ber and sep >= 3.0
    _report(
        9,
        ok,
        f"BER at {snr:.0f} dB, 8 bits/s/Hz, N=32: "
        + " < ".join(f"{points[s].ber:.2e} ({s})" for s in ("RIS-SMBM", "RIS-MBM", "RIS-SM"))
        + f"; separations {seps[0]:.1f} and {seps[1]:.1f} combined standard errors",
    )


# ------------------------------------------------------- determinism

def test_criterion_10_worker_count_determinism(tmp_path):
    config = tmp_path / "det.ini"
    config.write_text(
        "[det]\n"
        "modulation_order = 4\nnum_tx_antennas = 4\nnum_rf_mirrors = 2\n"
        "num_ris_elements = 16\nsnr_start_db = 52\nsnr_stop_db = 56\nsnr_step_db = 4\n"
        "seed = 424242\nmin_bit_errors = 150\nmax_trials = 60000\n"
    )
    outputs = {}
    for workers in (1, 8):
        out = tmp_path / f"w{workers}"
        proc = subprocess.run(
            [
                sys.executable,
                "-m",
                "ris_smbm",
                "simulate",
                str(config),
                "--workers",
                str(workers),
                "--out-dir",
                str(out),
            ],
            capture_output=True,
            text=True,
            env=subprocess_env(),
        )
        assert proc.returncode == 0, proc.stderr
        outputs[workers] = (out / "det_ber.csv").read_bytes()
    ok = outputs[1] == outputs[8]
    _report(10, ok, f"1-worker and 8-worker CSVs byte-identical ({len(outputs[1])} bytes)")


# ----------------------------------------------------- property suites

def test_criterion_11a_mapper_round_trip_exhaustive():
    configs = (
        SmbmConfig(2, 1, 1, 4),  # eta = 2
        SmbmConfig(4, 4, 2, 4),  # eta = 6
        SmbmConfig(16, 4, 3, 4),  # eta = 9
        SmbmConfig(8, 16, 3, 4),  # eta = 10
        SmbmConfig(2, 2, 8, 4),  # eta = 10, mirror-heavy
    )
    checked = 0
    ok = True
    for cfg in configs:
        eta = cfg.bits_per_frame
        for value in range(1 << eta):
            frame = np.array([(value >> (eta - 1 - j)) & 1 for j in range(eta)], dtype=np.uint8)
            ok &= hamming_errors(frame, merge_bits(split_bits(frame, cfg), cfg)) == 0
            checked += 1
    _report(11, ok, f"(a) mapper round-trip exhaustive over {checked} frames, eta up to 10")


def test_criterion_11b_cpep_monte_carlo_oracle():
    cfg = SmbmConfig(4, 4, 2, 16)
    const = build_constellation(4)
    rng = np.random.default_rng(110_110)
    misses = 0
    for _ in range(20):
        H = aligned_gains(draw_channel(cfg, rng))
        tx = split_bits(rng.integers(0, 2, cfg.bits_per_frame), cfg)
        while True:
            hyp = split_bits(rng.integers(0, 2, cfg.bits_per_frame), cfg)
            if (hyp.flat_index, hyp.symbol_index) != (tx.flat_index, tx.symbol_index):
                break
        delta = H.entry(tx.flat_index) * const.point(tx.symbol_index) - H.entry(
            hyp.flat_index
        ) * const.point(hyp.symbol_index)
        u = rng.uniform(0.6, 2.0)
        n0 = abs(delta) ** 2 / (2 * u**2)
        p = cpep(H, tx, hyp, const, 1.0, n0)
        n = 40_000
        w = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) * np.sqrt(n0 / 2)
        y = H.entry(tx.flat_index) * const.point(tx.symbol_index) + w
        m_tx = np.abs(y - H.entry(tx.flat_index) * const.point(tx.symbol_index)) ** 2
        m_hyp = np.abs(y - H.entry(hyp.flat_index) * const.point(hyp.symbol_index)) ** 2
        freq = float(np.mean(m_hyp < m_tx))
        if abs(freq - p) >= 3 * np.sqrt(p * (1 - p) / n):
            misses += 1
    _report(11, misses == 0, f"(b) cpep matched the pairwise oracle on 20/20 probes (3 sigma)")


def test_criterion_11c_union_bound_dominates(bound_and_sim):
    sim, bound = bound_and_sim
    ok = True
    worst = np.inf
    for p, b in zip(sim, bound):
        margin = b.aber_bound - (p.ber - 3 * np.hypot(p.stderr, b.stderr))
        worst = min(worst, margin / p.ber)
        ok &= margin >= 0
    _report(
        11, ok, f"(c) bound >= simulation - 3 sigma at all {len(sim)} grid points"
    )


def test_criterion_11d_noiseless_is_error_free():
    plan = SimPlan(
        cfg=SmbmConfig(4, 4, 2, 16),
        snr_grid_db=(float("inf"),),
        master_seed=110_113,
        min_bit_errors=100,
        max_trials=20_000,
    )
    (point,) = sweep(plan)
    _report(11, point.bit_errors == 0, f"(d) noiseless run: {point.bit_errors} errors in 20000 trials")


def test_criterion_11e_pure_noise_ber_half():
    plan = SimPlan(
        cfg=SmbmConfig(4, 2, 1, 4),
        snr_grid_db=(-80.0,),
        master_seed=110_114,
        min_bit_errors=10**9,
        max_trials=1_000_000,
    )
    (point,) = sweep(plan)
    ok = abs(point.ber - 0.5) < 0.005
    _report(11, ok, f"(e) pure-noise BER over 1e6 trials: {point.ber:.5f} (0.5 +- 1%)")
