"""Small dense linear algebra for three-qubit operators.

Basis ordering throughout the package: index ``j = 4*j1 + 2*j2 + j3`` for
the product state ``|j1 j2 j3>``, i.e. qubit 1 is the most significant bit.
Qubits are labelled 1, 2, 3.
"""

from typing import NamedTuple

import numpy as np

from .config import TOL
from .exceptions import (
    DimensionError,
    InvalidOperator,
    InvalidTrace,
    NearSingularMarginal,
    NotHermitian,
    NotNormalized,
    NotPositive,
)

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = {"I": I2, "X": SX, "Y": SY, "Z": SZ}

# einsum subscripts for the single-qubit partial traces of a (2,)*6 tensor
_KEEP = {1: "abcdbc->ad", 2: "abcaec->be", 3: "abcabf->cf"}


def _square(m, n, name="matrix"):
    m = np.asarray(m, dtype=complex)
    if m.shape != (n, n):
        raise DimensionError(f"{name} must be {n}x{n}, got shape {m.shape}")
    return m


def kron3(a, b, c):
    """Tensor product ``a ⊗ b ⊗ c`` of three 2x2 matrices."""
    a = _square(a, 2, "a")
    b = _square(b, 2, "b")
    c = _square(c, 2, "c")
    return np.kron(np.kron(a, b), c)


def kron_vec3(u, v, w):
    return np.kron(np.kron(u, v), w)


def dagger(m):
    return np.conj(np.transpose(m))


def hermitian_defect(m):
    """Largest entrywise deviation from Hermiticity."""
    return float(np.max(np.abs(m - dagger(m)))) if m.size else 0.0


def partial_trace(rho, keep):
    """Reduced 2x2 matrix of qubit `keep` (1, 2 or 3) of an 8x8 operator."""
    if keep not in _KEEP:
        raise DimensionError(f"qubit index must be 1, 2 or 3, got {keep!r}")
    rho = _square(rho, 8, "rho")
    return np.einsum(_KEEP[keep], rho.reshape((2,) * 6))


def two_qubit_marginal(rho, j, k):
    """Reduced 4x4 matrix of qubits ``j < k``, ordered as ``j ⊗ k``."""
    (drop,) = {1, 2, 3} - {j, k}
    t = _square(rho, 8).reshape((2,) * 6)
    t = np.trace(t, axis1=drop - 1, axis2=drop + 2)
    return t.reshape(4, 4)


def herm_eigensystem(m):
    """Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.

    Parameters
    ----------
    m : array_like, shape (n, n)
        Hermitian up to ``1e-8`` entrywise.

    Returns
    -------
    w : ndarray, shape (n,)
        Real eigenvalues in ascending order.
    v : ndarray, shape (n, n)
        Eigenvectors as columns, ``m @ v[:, k] = w[k] * v[:, k]``.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    if hermitian_defect(m) > TOL.eigen_hermitian:
        raise NotHermitian("matrix is not Hermitian")
    return np.linalg.eigh(0.5 * (m + dagger(m)))


def min_eigenvalue(m):
    return float(herm_eigensystem(m)[0][0])


def inv_sqrt_2x2(m, threshold=TOL.singular):
    """``m**(-1/2)`` for a 2x2 Hermitian positive-definite matrix.

    Raises NearSingularMarginal when an eigenvalue is at or below `threshold`.
    """
    m = _square(m, 2, "m")
    w, v = herm_eigensystem(m)
    if w[0] <= threshold:
        raise NearSingularMarginal(f"marginal eigenvalue {w[0]:.3e} below {threshold:g}")
    return (v * w ** -0.5) @ dagger(v)


def density_matrix(m, tol=TOL):
    """Validate and clean an 8x8 density matrix.

    The input is Hermitised, eigenvalues in ``[-tol.psd_clip, 0)`` are clipped
    to zero, and the trace must lie in ``(0, 1]``.  Sub-normalised matrices
    are accepted because the normal form is not trace preserving.

    Returns
    -------
    ndarray, shape (8, 8), complex
    """
    m = _square(m, 8, "density matrix")
    if not np.all(np.isfinite(m)):
        raise NotPositive("density matrix contains non-finite entries")
    if hermitian_defect(m) > tol.hermitian:
        raise NotHermitian("density matrix is not Hermitian")
    m = 0.5 * (m + dagger(m))
    w, v = np.linalg.eigh(m)
    if w[0] < -tol.psd_clip:
        raise NotPositive(f"density matrix has eigenvalue {w[0]:.3e}")
    if w[0] < 0:
        m = (v * np.clip(w, 0.0, None)) @ dagger(v)
        m = 0.5 * (m + dagger(m))
    tr = np.trace(m).real
    if not 0 < tr <= 1 + tol.trace:
        raise InvalidTrace(f"trace {tr!r} outside (0, 1]")
    return m


def pure_state(amps, tol=TOL):
    """Validate 8 amplitudes of a normalised three-qubit pure state."""
    psi = np.asarray(amps, dtype=complex)
    if psi.shape != (8,):
        raise DimensionError(f"pure state needs 8 amplitudes, got shape {psi.shape}")
    if abs(np.vdot(psi, psi).real - 1) > tol.norm:
        raise NotNormalized("pure state is not normalised")
    return psi


def projector(psi):
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def basis_state(bits):
    """Computational basis vector for a bit string such as ``"001"``."""
    v = np.zeros(8, dtype=complex)
    v[int(bits, 2)] = 1
    return v


class LocalOperator(NamedTuple):
    """Triple of single-qubit 2x2 operators, one per qubit."""

    a1: np.ndarray
    a2: np.ndarray
    a3: np.ndarray

    def matrix(self):
        return kron3(self.a1, self.a2, self.a3)

    def apply(self, rho):
        a = self.matrix()
        return a @ rho @ dagger(a)

    def compose(self, other):
        """Operator ``self ∘ other`` (apply `other` first)."""
        return LocalOperator(*(s @ o for s, o in zip(self, other)))

    def is_unitary(self, tol=TOL.unitary):
        return all(np.max(np.abs(a @ dagger(a) - I2)) <= tol for a in self)


def identity_operator():
    return LocalOperator(I2.copy(), I2.copy(), I2.copy())


def local_operator(a1, a2, a3, tol=TOL.det):
    """Build a LocalOperator, checking each factor is in SL(2, C)."""
    ops = [_square(a, 2, f"a{i}") for i, a in enumerate((a1, a2, a3), start=1)]
    for i, a in enumerate(ops, start=1):
        if abs(np.linalg.det(a) - 1) > tol:
            raise InvalidOperator(f"a{i} does not have unit determinant")
    return LocalOperator(*ops)
