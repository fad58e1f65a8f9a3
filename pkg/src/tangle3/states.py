"""Named three-qubit states used throughout the package and its tests."""

import numpy as np

from .linalg import basis_state, projector

SQRT3 = np.sqrt(3.0)

GHZ_PLUS = (basis_state("000") + basis_state("111")) / np.sqrt(2)
GHZ_MINUS = (basis_state("000") - basis_state("111")) / np.sqrt(2)
GHZ = GHZ_PLUS
W = (basis_state("001") + basis_state("010") + basis_state("100")) / SQRT3
# GHZ-class state obtained from GHZ+ by a bit flip on qubit 1
FLIPPED_GHZ = (basis_state("100") + basis_state("011")) / np.sqrt(2)
# uniform superposition of the six inner basis states
PHI = sum(basis_state(f"{i:03b}") for i in range(1, 7)) / np.sqrt(6)

PI_GHZ = projector(GHZ_PLUS)
PI_GHZ_MINUS = projector(GHZ_MINUS)
PI_W = projector(W)

# threshold above which GHZ/W mixtures carry three-tangle
P0_GHZ_W = 2 ** (1 / 3) / (2 ** (1 / 3) + 0.75)


def rho1(p):
    """GHZ mixed with the orthogonal product state |001>."""
    _check_p(p)
    return p * PI_GHZ + (1 - p) * projector(basis_state("001"))


def rho2(p):
    """GHZ mixed with the W state."""
    _check_p(p)
    return p * PI_GHZ + (1 - p) * PI_W


def rho3():
    """Rank-3 mixture of |phi>, |000> and |111> with zero three-tangle."""
    m = np.zeros((8, 8), dtype=complex)
    m[0, 0] = m[7, 7] = 1
    m[1:7, 1:7] = 1
    return m / 8


def tau3_rho2_exact(p):
    """Known three-tangle of rho2(p)."""
    return max(0.0, (p - P0_GHZ_W) / (1 - P0_GHZ_W))


def _check_p(p):
    if not 0 <= p <= 1:
        raise ValueError(f"mixing parameter must lie in [0, 1], got {p!r}")


NAMED_PURE = {"ghz": GHZ_PLUS, "w": W, "flipped-ghz": FLIPPED_GHZ}


def named_state(name, p=None):
    """Density matrix of a named state; `p` is required for rho1 and rho2."""
    if name in NAMED_PURE:
        return projector(NAMED_PURE[name])
    if name == "rho3":
        return rho3()
    if name in ("rho1", "rho2"):
        if p is None:
            raise ValueError(f"{name} needs a mixing parameter p")
        return rho1(p) if name == "rho1" else rho2(p)
    raise ValueError(f"unknown state name {name!r}")
