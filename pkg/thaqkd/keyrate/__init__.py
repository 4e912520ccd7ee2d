"""BB84 key rates, detector statistics and the thermal-noise defense."""

from thaqkd.keyrate.bb84 import (
    KeyRateResult,
    binary_entropy,
    effective_error,
    secret_key_rate,
    vanilla_key_rate,
)
from thaqkd.keyrate.detectors import (
    ChannelModel,
    DetectionStats,
    bucket_stats,
    bucket_stats_from_sums,
    detection_stats,
    pnrd_stats,
)
from thaqkd.keyrate.thermal import (
    SweepRow,
    ThermalOptimum,
    distance_sweep,
    optimize_thermal,
    secure_range,
    sweep_rate,
    thermal_key_rate,
)

__all__ = [
    "ChannelModel",
    "DetectionStats",
    "KeyRateResult",
    "SweepRow",
    "ThermalOptimum",
    "binary_entropy",
    "bucket_stats",
    "bucket_stats_from_sums",
    "detection_stats",
    "distance_sweep",
    "effective_error",
    "optimize_thermal",
    "pnrd_stats",
    "secret_key_rate",
    "secure_range",
    "sweep_rate",
    "thermal_key_rate",
    "vanilla_key_rate",
]
