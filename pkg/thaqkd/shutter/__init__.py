"""Shutter defense against Trojan-horse light."""

from thaqkd.shutter.defense import (
    ShutterCalibration,
    ShutterConfig,
    ShutterRow,
    calibrate_photon_budget,
    escapes,
    minimizing_convolution,
    reflection_count,
    reflection_staircase,
    returned_mean_photons,
    shutter_key_rate,
    travel_time_sweep,
    uniform_travel_times,
)

__all__ = [
    "ShutterCalibration",
    "ShutterConfig",
    "ShutterRow",
    "calibrate_photon_budget",
    "escapes",
    "minimizing_convolution",
    "reflection_count",
    "reflection_staircase",
    "returned_mean_photons",
    "shutter_key_rate",
    "travel_time_sweep",
    "uniform_travel_times",
]
