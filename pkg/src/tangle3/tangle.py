"""Three-tangle of pure three-qubit states."""

import numpy as np

from .config import TOL
from .linalg import pure_state


def hyperdeterminant(psi):
    """Cayley hyperdeterminant ``d1 - 2*d2 + 4*d3`` of the amplitude tensor.

    No conjugation is involved; the result is a homogeneous degree-4
    polynomial in the (possibly unnormalised) amplitudes.
    """
    a000, a001, a010, a011, a100, a101, a110, a111 = np.asarray(psi, dtype=complex)
    d1 = (a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110
          + a010 * a010 * a101 * a101 + a011 * a011 * a100 * a100)
    d2 = (a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111
          + a000 * a011 * a100 * a111 + a001 * a010 * a101 * a110
          + a001 * a011 * a100 * a110 + a010 * a011 * a100 * a101)
    d3 = a000 * a110 * a101 * a011 + a100 * a010 * a001 * a111
    return d1 - 2 * d2 + 4 * d3


def tau3_unnormalized(psi):
    """``2 sqrt|hyperdet|`` without normalisation; equals ``<psi|psi> * tau3``."""
    return 2.0 * np.sqrt(abs(hyperdeterminant(psi)))


def tau3_pure(psi):
    """Three-tangle of a normalised pure state.

    Parameters
    ----------
    psi : array_like, shape (8,)
        Amplitudes in the computational basis, qubit 1 most significant.

    Returns
    -------
    float
        Value in ``[0, 1]``; 1 for GHZ, 0 for W and all product states.
    """
    psi = pure_state(psi)
    t = tau3_unnormalized(psi)
    if t > 1 + TOL.clamp:
        raise ArithmeticError(f"three-tangle {t!r} exceeds 1")
    return float(min(max(t, 0.0), 1.0))
