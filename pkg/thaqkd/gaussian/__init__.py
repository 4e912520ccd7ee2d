"""Gaussian states, the channels that act on them, and their fidelity."""

from thaqkd.gaussian.fidelity import fidelity
from thaqkd.gaussian.operations import (
    add_thermal_additive,
    add_thermal_tms,
    coherent,
    displace,
    mean_photons,
    partial_trace,
    phase_rotate,
    pure_loss,
    tensor,
    thermal,
    two_mode_squeeze,
)
from thaqkd.gaussian.state import (
    GaussianState,
    SymplecticForm,
    deserialize_state,
    is_physical,
    serialize_state,
    symplectic_form,
    vacuum,
)

__all__ = [
    "GaussianState",
    "SymplecticForm",
    "add_thermal_additive",
    "add_thermal_tms",
    "coherent",
    "deserialize_state",
    "displace",
    "fidelity",
    "is_physical",
    "mean_photons",
    "partial_trace",
    "phase_rotate",
    "pure_loss",
    "serialize_state",
    "symplectic_form",
    "tensor",
    "thermal",
    "two_mode_squeeze",
    "vacuum",
]
