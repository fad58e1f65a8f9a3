"""GHZ-symmetric three-qubit states.

A GHZ-symmetric state is fixed by two real coordinates ``(x, y)`` in which
the Hilbert-Schmidt geometry is Euclidean.  The physical states fill the
triangle with corners ``GHZ+ = (1/2, sqrt3/4)``, ``GHZ- = (-1/2, sqrt3/4)``
and the separable mixture ``(0, -sqrt3/12)``.  The curve returned by
:func:`ghz_w_line` separates GHZ-class from W-class states, and the exact
three-tangle is piecewise affine along rays from the nearer GHZ corner.
"""

import enum
import math
from typing import NamedTuple

import numpy as np

from .config import TOL
from .exceptions import NotGhzSymmetric, UnphysicalCoordinates
from .states import PI_GHZ, PI_GHZ_MINUS

SQRT3 = math.sqrt(3.0)
GHZ_CORNER = (0.5, SQRT3 / 4)
Y_TOP = SQRT3 / 4
Y_BOTTOM = -SQRT3 / 12
# point where the tangent witnesses touch the GHZ/W line
TANGENT_POINT = (3 / 8, SQRT3 / 6)


class SymCoords(NamedTuple):
    x: float
    y: float


def diagonal_a(y):
    """Corner diagonal entry ``rho_000,000 = rho_111,111``."""
    return 0.125 + SQRT3 / 2 * y


def diagonal_b(y):
    """Common value of the six inner diagonal entries."""
    return 0.125 - y / (2 * SQRT3)


def is_physical(x, y, tol=TOL.coords):
    return (y >= Y_BOTTOM - tol and y <= Y_TOP + tol
            and abs(x) <= diagonal_a(y) + tol)


def sym_coords(x, y, tol=TOL.coords):
    """Checked constructor for :class:`SymCoords`."""
    x, y = float(x), float(y)
    if not is_physical(x, y, tol):
        raise UnphysicalCoordinates(f"({x!r}, {y!r}) lies outside the physical triangle")
    return SymCoords(x, y)


def state_of_coords(c):
    """8x8 GHZ-symmetric density matrix with coordinates `c`."""
    x, y = sym_coords(*c)
    rho = np.diag([diagonal_a(y)] + [diagonal_b(y)] * 6 + [diagonal_a(y)]).astype(complex)
    rho[0, 7] = rho[7, 0] = x
    return rho


def coords_of_symmetric(rho, tol=TOL.symmetric_shape):
    """Coordinates of a matrix that already has the GHZ-symmetric shape.

    Raises NotGhzSymmetric if any entry outside the allowed pattern, or any
    spread among the tied entries, exceeds `tol`.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (8, 8):
        raise NotGhzSymmetric(f"expected an 8x8 matrix, got shape {rho.shape}")
    allowed = np.eye(8, dtype=bool)
    allowed[0, 7] = allowed[7, 0] = True
    defects = [np.max(np.abs(rho[~allowed]), initial=0.0),
               abs(rho[0, 0] - rho[7, 7]),
               abs(rho[0, 7] - rho[7, 0]),
               abs(rho[0, 7].imag),
               np.ptp(rho.diagonal()[1:7].real),
               np.max(np.abs(rho.diagonal().imag))]
    if max(defects) > tol:
        raise NotGhzSymmetric(f"matrix deviates from GHZ-symmetric shape by {max(defects):.3e}")
    fid_plus = 0.5 * (rho[0, 0] + rho[7, 7] + rho[0, 7] + rho[7, 0]).real
    fid_minus = 0.5 * (rho[0, 0] + rho[7, 7] - rho[0, 7] - rho[7, 0]).real
    return SymCoords(0.5 * (fid_plus - fid_minus), (fid_plus + fid_minus - 0.25) / SQRT3)


def ghz_w_line(v):
    """Point of the GHZ/W border curve for parameter ``v`` in ``[-1, 1]``."""
    if not -1 <= v <= 1:
        raise ValueError(f"curve parameter must lie in [-1, 1], got {v!r}")
    v2 = v * v
    den = 4 - v2
    return SymCoords((v2 * v2 * v + 8 * v2 * v) / (8 * den),
                     SQRT3 / 4 * (4 - v2 - v2 * v2) / den)


def _bearing_cross(dx, dy, v):
    # cross product of the ray direction with (curve(v) - GHZ corner)
    p = ghz_w_line(v)
    return dx * (p.y - GHZ_CORNER[1]) - dy * (p.x - GHZ_CORNER[0])


def wline_intersection(c, max_iter=200):
    """Intersection of the GHZ/W line with the ray from GHZ+ through `c`.

    The point is first mirrored to ``x >= 0``.  Bisection runs on the sign of
    the cross product between the ray direction and ``curve(v) - GHZ+``,
    which changes exactly once on ``v in [0, 1]``.

    Returns
    -------
    v : float
        Curve parameter in ``[0, 1]``.
    w : SymCoords
        The intersection point ``ghz_w_line(v)``.
    """
    x0, y0 = abs(c[0]), c[1]
    dx, dy = x0 - GHZ_CORNER[0], y0 - GHZ_CORNER[1]
    norm = math.hypot(dx, dy)
    if norm == 0:
        raise ValueError("the GHZ corner itself has no ray")
    dx, dy = dx / norm, dy / norm
    lo, hi = 0.0, 1.0
    h_lo, h_hi = _bearing_cross(dx, dy, lo), _bearing_cross(dx, dy, hi)
    if h_lo >= 0:
        return 0.0, ghz_w_line(0.0)
    if h_hi <= 0:  # the v = 1 end sits on the lower edge; rays along it round either way
        if h_hi < -1e-6:
            raise ArithmeticError(f"ray through ({x0}, {y0}) misses the GHZ/W line")
        return 1.0, ghz_w_line(1.0)
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        h = _bearing_cross(dx, dy, mid)
        if h == 0:
            lo = hi = mid
            break
        if h < 0:
            lo = mid
        else:
            hi = mid
    v = 0.5 * (lo + hi)
    return v, ghz_w_line(v)


def tau3_symmetric_exact(c):
    """Exact (convex-roof) three-tangle of the GHZ-symmetric state at `c`.

    Zero on and beyond the GHZ/W line, rising affinely along each ray to 1 at
    the nearer GHZ corner.
    """
    x, y = sym_coords(*c)
    x0 = abs(x)
    dist = math.hypot(x0 - GHZ_CORNER[0], y - GHZ_CORNER[1])
    if dist < 1e-15:
        return 1.0
    _, w = wline_intersection((x0, y))
    if dist >= math.hypot(w.x - GHZ_CORNER[0], w.y - GHZ_CORNER[1]) - 1e-12:
        return 0.0
    t = (x0 - w.x) / (0.5 - w.x)
    return min(max(t, 0.0), 1.0)


def tau3_symmetric_signed(c):
    """Affine continuation of the exact surface past the GHZ/W line.

    Equals ``1 - |c - G| / |w - G|`` along the ray from the nearer GHZ corner
    ``G`` through `c`, with ``w`` on the GHZ/W line.  It agrees with
    :func:`tau3_symmetric_exact` wherever that is positive and turns negative
    in the W region, which gives local search a slope to climb there.
    """
    x0, y = abs(c[0]), c[1]
    dist = math.hypot(x0 - GHZ_CORNER[0], y - GHZ_CORNER[1])
    if dist < 1e-15:
        return 1.0
    _, w = wline_intersection((x0, y))
    return 1.0 - dist / math.hypot(w.x - GHZ_CORNER[0], w.y - GHZ_CORNER[1])


def tau3_symmetric_approx(c):
    """Lower bound on the exact surface from the tangent witness planes."""
    x, y = sym_coords(*c)
    return max(0.0, 4 / 7 * (-4 + 4 * abs(x) + 5 * SQRT3 * y))


class WitnessKind(enum.Enum):
    PROJECTOR_GHZ = "projector"
    TANGENT_PLUS = "tangent+"
    TANGENT_MINUS = "tangent-"


def witness_operator(kind):
    kind = WitnessKind(kind)
    eye = np.eye(8, dtype=complex)
    if kind is WitnessKind.PROJECTOR_GHZ:
        return 0.75 * eye - PI_GHZ
    if kind is WitnessKind.TANGENT_PLUS:
        return 0.75 * eye - PI_GHZ - 3 / 7 * PI_GHZ_MINUS
    return 0.75 * eye - PI_GHZ_MINUS - 3 / 7 * PI_GHZ


def witness_expectation(rho, kind):
    """``tr(W rho)`` for the selected witness; negative values detect GHZ class."""
    return float(np.trace(witness_operator(kind) @ np.asarray(rho)).real)


def quantitative_tau3(rho, kind):
    """Plane value ``-4 tr(W rho)``.

    ``max(0, .)`` of this is a lower bound on the three-tangle.  For the
    tangent witnesses the plane coincides with the approximation returned by
    :func:`tau3_symmetric_approx` on its own half (``x > 0`` for
    ``TANGENT_PLUS``).
    """
    return -4.0 * witness_expectation(rho, kind)
