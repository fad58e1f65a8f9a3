"""Projection of arbitrary three-qubit states onto the GHZ-symmetric family.

The twirl averages over qubit permutations, the collective flip
``X⊗X⊗X`` and the correlated z-rotations
``exp(i f1 Z) ⊗ exp(i f2 Z) ⊗ exp(-i (f1 + f2) Z)``.  Its action on matrix
elements is known in closed form, so no group integration is done here.
"""

import itertools

import numpy as np

from .symmetric import SQRT3, SymCoords

INNER = slice(1, 7)


def project(rho):
    """GHZ-symmetric twirl of `rho`.

    Keeps only the averaged corner populations, the averaged inner
    populations and the real part of the ``000,111`` coherence.
    """
    rho = np.asarray(rho, dtype=complex)
    d = rho.diagonal().real
    out = np.zeros((8, 8), dtype=complex)
    corner = 0.5 * (d[0] + d[7])
    out[0, 0] = out[7, 7] = corner
    out[INNER, INNER] = np.eye(6) * (d[INNER].sum() / 6)
    out[0, 7] = out[7, 0] = 0.5 * (rho[0, 7] + rho[7, 0]).real
    return out


def coords(rho):
    """Symmetric-family coordinates of the twirl of a trace-one `rho`."""
    rho = np.asarray(rho, dtype=complex)
    x = 0.5 * (rho[0, 7] + rho[7, 0]).real
    y = ((rho[0, 0] + rho[7, 7]).real - 0.25) / SQRT3
    return SymCoords(float(x), float(y))


def tau3_approx_rho(rho):
    """Closed-form lower estimate of the three-tangle from four matrix entries."""
    rho = np.asarray(rho, dtype=complex)
    coh = (rho[0, 7] + rho[7, 0]).real
    pop = (rho[0, 0] + rho[7, 7]).real
    return float(max(0.0, 8 / 7 * coh + 20 / 7 * pop - 3, -8 / 7 * coh + 20 / 7 * pop - 3))


def permutation_matrix(perm):
    """8x8 unitary moving qubit ``k`` to position ``perm[k]`` (0-based)."""
    m = np.zeros((8, 8))
    for i in range(8):
        bits = [(i >> (2 - k)) & 1 for k in range(3)]
        out = [0, 0, 0]
        for k in range(3):
            out[perm[k]] = bits[k]
        m[4 * out[0] + 2 * out[1] + out[2], i] = 1
    return m


QUBIT_PERMUTATIONS = [permutation_matrix(p) for p in itertools.permutations(range(3))]


def pit_project(rho):
    """Average of `rho` over the six qubit permutations."""
    rho = np.asarray(rho, dtype=complex)
    return sum(p @ rho @ p.T for p in QUBIT_PERMUTATIONS) / 6

