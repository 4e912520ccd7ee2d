"""Truncated Fock-space density matrices and the Gaussian cross-check."""

from thaqkd.fock.density import (
    FockDensityMatrix,
    PhotonStatistics,
    apply_unitary_generator,
    attenuate_kraus,
    coherent_fock,
    deserialize_density,
    diagonal_fock,
    matrix_fidelity,
    number_fock,
    partial_trace_fock,
    photon_statistics,
    serialize_density,
    tensor_fock,
    thermal_fock,
    uhlmann_fidelity,
    vacuum_fock,
)

__all__ = [
    "FockDensityMatrix",
    "PhotonStatistics",
    "apply_unitary_generator",
    "attenuate_kraus",
    "coherent_fock",
    "deserialize_density",
    "diagonal_fock",
    "matrix_fidelity",
    "number_fock",
    "partial_trace_fock",
    "photon_statistics",
    "serialize_density",
    "tensor_fock",
    "thermal_fock",
    "uhlmann_fidelity",
    "vacuum_fock",
]
