"""Built-in experiment sets for the standard parameter studies.

Each preset bundles the experiment sections that produce one study:

* ``fig3a`` — mirror-count sweep: M=2, n_T=4, N=64, m_rf in {1, 3, 5}.
* ``fig3b`` — surface-size sweep: M=4, n_T=4, m_rf=2, N in {4, 16, 64, 256}
  (simulate and bound share these grids).
* ``fig4``  — cross-scheme comparison at 8 bits/s/Hz, N=128.
* ``fig5``  — cross-scheme comparison at 10 bits/s/Hz, N=256.
* ``fig6a`` — BER surface over (m_rf, n_T) at M=4, N=32, SNR=80 dB.
* ``fig6b`` — BER surface over (m_rf, N) at M=4, n_T=4, SNR=40 dB.

Grids bracket each curve's BER=1e-3 crossing at desk scale.  The fig6
presets cap ``max_trials`` well below publication depth so the 25-point
surfaces finish in minutes; low-BER corners come out truncated.
"""

from __future__ import annotations

from .cli import ExperimentConfig
from .errors import ConfigError


def _sweep_exp(name, scheme, M, n_t, m_rf, N, start, stop, step=2.0, **kw):
    return ExperimentConfig(
        name=name,
        scheme=scheme,
        modulation_order=M,
        num_tx_antennas=n_t,
        num_rf_mirrors=m_rf,
        num_ris_elements=N,
        snr_start_db=start,
        snr_stop_db=stop,
        snr_step_db=step,
        **kw,
    )


def _fig3a():
    return [
        _sweep_exp("fig3a_mrf1", "RIS-SMBM", 2, 4, 1, 64, 42.0, 54.0),
        _sweep_exp("fig3a_mrf3", "RIS-SMBM", 2, 4, 3, 64, 55.0, 67.0),
        _sweep_exp("fig3a_mrf5", "RIS-SMBM", 2, 4, 5, 64, 67.0, 79.0),
    ]


def _fig3b():
    return [
        _sweep_exp("fig3b_n4", "RIS-SMBM", 4, 4, 2, 4, 59.0, 71.0),
        _sweep_exp("fig3b_n16", "RIS-SMBM", 4, 4, 2, 16, 53.0, 65.0),
        _sweep_exp("fig3b_n64", "RIS-SMBM", 4, 4, 2, 64, 47.0, 59.0),
        _sweep_exp("fig3b_n256", "RIS-SMBM", 4, 4, 2, 256, 41.0, 53.0),
    ]


def _fig4():
    return [
        _sweep_exp("fig4_smbm", "RIS-SMBM", 64, 2, 1, 128, 26.0, 38.0),
        _sweep_exp("fig4_mbm", "RIS-MBM", 8, 1, 5, 128, 51.0, 63.0),
        _sweep_exp("fig4_sm", "RIS-SM", 4, 64, 0, 128, 57.0, 69.0),
    ]


def _fig5():
    caps = dict(max_trials=300_000)
    return [
        _sweep_exp("fig5_smbm", "RIS-SMBM", 128, 4, 1, 256, 30.0, 42.0, **caps),
        _sweep_exp("fig5_mbm", "RIS-MBM", 16, 1, 6, 256, 52.0, 64.0, **caps),
        _sweep_exp("fig5_sm", "RIS-SM", 4, 256, 0, 256, 66.0, 78.0, **caps),
    ]


def _fig6a():
    out = []
    for m_rf in (1, 3, 5, 7, 9):
        for n_t in (2, 4, 8, 16, 32):
            out.append(
                _sweep_exp(
                    f"fig6a_mrf{m_rf}_nt{n_t}",
                    "RIS-SMBM",
                    4,
                    n_t,
                    m_rf,
                    32,
                    80.0,
                    80.0,
                    min_bit_errors=100,
                    max_trials=5_000,
                )
            )
    return out


def _fig6b():
    out = []
    for m_rf in (1, 2, 3, 4, 5):
        for N in (4, 8, 16, 32, 64):
            out.append(
                _sweep_exp(
                    f"fig6b_mrf{m_rf}_n{N}",
                    "RIS-SMBM",
                    4,
                    4,
                    m_rf,
                    N,
                    40.0,
                    40.0,
                    min_bit_errors=100,
                    max_trials=100_000,
                )
            )
    return out


_PRESETS = {
    "fig3a": _fig3a,
    "fig3b": _fig3b,
    "fig4": _fig4,
    "fig5": _fig5,
    "fig6a": _fig6a,
    "fig6b": _fig6b,
}


def preset_names() -> tuple:
    return tuple(_PRESETS)


def get_preset(name: str) -> list[ExperimentConfig]:
    """Experiment list for a named preset (table presets live in ``tables``)."""
    if name not in _PRESETS:
        raise ConfigError(f"unknown preset {name!r} (choose from {', '.join(_PRESETS)})")
    return _PRESETS[name]()
