"""Link-level simulation and analysis of RIS-aided spatial media-based modulation.

A frame of bits is carried jointly by a QAM symbol, the on/off pattern of RF
mirrors at the transmitter (media-based modulation), and the index of the
active transmit antenna (spatial modulation); a reconfigurable intelligent
surface phase-aligns the reflected path for the transmitted choice.  The
package provides the bit mapper, the fading and surface model, joint
maximum-likelihood and expanded low-complexity detectors, a deterministic
parallel Monte Carlo BER engine, a semi-analytic union bound, and the
energy/rate/complexity comparison tables, plus a config-driven CLI.
"""

from .analysis import (
    BoundPoint,
    PairwiseEvent,
    SchemeSpec,
    UpepEstimate,
    aber_bound,
    complexity_table,
    cpep,
    data_rate_table,
    energy_saving,
    energy_saving_table,
    pairwise_event,
    qfunc,
    throughput,
    upep,
)
from .channel import (
    ChannelRealization,
    EffectiveChannelVector,
    RisPhaseConfig,
    RxSample,
    aligned_gains,
    align_phases,
    draw_channel,
    effective_channel,
    transmit,
)
from .detect import (
    DetectionResult,
    count_rm_elc,
    count_rm_ml,
    detect_elc,
    detect_ml,
)
from .errors import ConfigError, UnsupportedError
from .modulation import (
    Constellation,
    SmbmConfig,
    TxSelection,
    build_constellation,
    build_tx_vector,
    hamming_errors,
    merge_bits,
    split_bits,
)
from .simkit import (
    BerPoint,
    SimPlan,
    benchmark_config,
    run_trial,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BerPoint",
    "BoundPoint",
    "ChannelRealization",
    "ConfigError",
    "Constellation",
    "DetectionResult",
    "EffectiveChannelVector",
    "PairwiseEvent",
    "RisPhaseConfig",
    "RxSample",
    "SchemeSpec",
    "SimPlan",
    "SmbmConfig",
    "TxSelection",
    "UnsupportedError",
    "UpepEstimate",
    "aber_bound",
    "aligned_gains",
    "align_phases",
    "benchmark_config",
    "build_constellation",
    "build_tx_vector",
    "complexity_table",
    "count_rm_elc",
    "count_rm_ml",
    "cpep",
    "data_rate_table",
    "detect_elc",
    "detect_ml",
    "draw_channel",
    "effective_channel",
    "energy_saving",
    "energy_saving_table",
    "hamming_errors",
    "merge_bits",
    "pairwise_event",
    "qfunc",
    "run_trial",
    "split_bits",
    "sweep",
    "throughput",
    "transmit",
    "upep",
]
