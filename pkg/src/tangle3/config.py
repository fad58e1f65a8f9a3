"""Numerical tolerances shared across the package."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    hermitian: float = 1e-10
    psd_clip: float = 1e-10
    trace: float = 1e-10
    norm: float = 1e-10
    det: float = 1e-9
    unitary: float = 1e-9
    coords: float = 1e-10
    symmetric_shape: float = 1e-8
    singular: float = 1e-14
    eigen_hermitian: float = 1e-8
    clamp: float = 1e-9
    pauli_range: float = 1e-9
    tomo_negative: float = 1e-6


TOL = Tolerances()
