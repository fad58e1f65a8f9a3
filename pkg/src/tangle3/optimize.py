"""Local-unitary optimisation of a normalised state before projection.

Every criterion here depends on the rotated state only through
``<000|rho'|000>``, ``<111|rho'|111>`` and ``<000|rho'|111>``, which are
quadratic forms in the product vectors ``V^†|000>`` and ``V^†|111>``.  The
objective is evaluated on those three numbers instead of forming the full
8x8 conjugation.
"""

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .linalg import LocalOperator, dagger, kron_vec3
from .symmetric import (
    Y_BOTTOM,
    Y_TOP,
    diagonal_a,
    sym_coords,
    tau3_symmetric_exact,
    tau3_symmetric_signed,
)
from .twirl import coords

N_ANGLES = 9
MAX_EVALS = 2000
SIMPLEX_TOL = 1e-7
INITIAL_STEP = 0.4


class Criterion(enum.Enum):
    MAX_TAU3 = "tau3"
    MAX_FIDELITY = "fidelity"
    MIN_HS_DISTANCE = "hs"


# largest attainable value of each maximise-me objective
_SUPREMUM = {Criterion.MAX_TAU3: 1.0, Criterion.MAX_FIDELITY: 1.0, Criterion.MIN_HS_DISTANCE: 0.0}


@dataclass(frozen=True)
class OptResult:
    best_unitary: LocalOperator
    optimized_state: np.ndarray
    objective: float
    restarts_used: int
    seed: int
    objective_trace: list = field(default_factory=list)
    angles: np.ndarray = None


def su2_from_angles(alpha, beta, gamma):
    """Euler-angle element ``Rz(alpha) Ry(beta) Rz(gamma)`` of SU(2)."""
    ea, eg = np.exp(-0.5j * alpha), np.exp(-0.5j * gamma)
    c, s = math.cos(0.5 * beta), math.sin(0.5 * beta)
    return np.array([[ea * c * eg, -ea * s * eg.conjugate()],
                     [ea.conjugate() * s * eg, ea.conjugate() * c * eg.conjugate()]])


def local_unitary(angles):
    a = np.asarray(angles, dtype=float)
    return LocalOperator(*(su2_from_angles(*a[3 * j:3 * j + 3]) for j in range(3)))


def _clip_coords(x, y):
    # guards against round-off just outside the triangle
    y = min(max(y, Y_BOTTOM), Y_TOP)
    lim = diagonal_a(y)
    return min(max(x, -lim), lim), y


def _objective_from_entries(p00, p77, c07, crit, purity, signed=False):
    if crit is Criterion.MAX_TAU3:
        c = _clip_coords(c07, (p00 + p77 - 0.25) / math.sqrt(3))
        return tau3_symmetric_signed(c) if signed else tau3_symmetric_exact(c)
    fid = 0.5 * (p00 + p77) + c07
    if crit is Criterion.MAX_FIDELITY:
        return fid
    return -math.sqrt(max(0.0, 0.5 * (1 - 2 * fid + purity)))


def evaluate_criterion(rho, crit):
    """Maximise-me value of `crit` on a trace-one state.

    ``MAX_TAU3``: exact three-tangle of the twirl; ``MAX_FIDELITY``: GHZ
    fidelity; ``MIN_HS_DISTANCE``: minus the Hilbert-Schmidt distance
    ``sqrt(tr (pi_GHZ - rho)^2 / 2)``.
    """
    crit = Criterion(crit)
    rho = np.asarray(rho, dtype=complex)
    tr = np.trace(rho).real
    if abs(tr - 1) > 1e-9:
        raise ValueError(f"criterion needs a trace-one state, got trace {tr!r}")
    if crit is Criterion.MAX_TAU3:
        return tau3_symmetric_exact(sym_coords(*coords(rho)))
    purity = float(np.vdot(rho, rho).real)
    return _objective_from_entries(rho[0, 0].real, rho[7, 7].real, rho[0, 7].real, crit, purity)


def _make_objective(rho, crit, signed=False):
    purity = float(np.vdot(rho, rho).real)

    def neg_objective(angles):
        us = [su2_from_angles(*angles[3 * j:3 * j + 3]) for j in range(3)]
        e0 = kron_vec3(*(u[0].conj() for u in us))
        e7 = kron_vec3(*(u[1].conj() for u in us))
        r0 = rho @ e0
        r7 = rho @ e7
        p00 = np.vdot(e0, r0).real
        p77 = np.vdot(e7, r7).real
        c07 = np.vdot(e0, r7).real
        return -_objective_from_entries(p00, p77, c07, crit, purity, signed)

    return neg_objective


def start_points(seed, restarts):
    """Identity followed by uniformly drawn Euler angles (counter-based RNG)."""
    rng = np.random.Generator(np.random.Philox(seed))
    pts = [np.zeros(N_ANGLES)]
    for _ in range(restarts - 1):
        a = rng.uniform(-np.pi, np.pi, size=(3, 3))
        a[:, 1] = rng.uniform(0, np.pi, size=3)
        pts.append(a.ravel())
    return pts


def _run_restart(rho, crit, x0):
    # the search climbs the signed tau3 surface; the clamped value is reported
    search = _make_objective(rho, crit, signed=True)
    f = _make_objective(rho, crit)
    simplex = np.vstack([x0, x0 + INITIAL_STEP * np.eye(N_ANGLES)])
    res = minimize(search, x0, method="Nelder-Mead",
                   options={"maxfev": MAX_EVALS, "xatol": SIMPLEX_TOL, "fatol": np.inf,
                            "initial_simplex": simplex})
    if f(x0) <= f(res.x):
        return np.array(x0, dtype=float), -f(x0)
    return res.x, -f(res.x)


def optimize(rho, crit=Criterion.MAX_TAU3, seed=0, restarts=32, tol=1e-8, jobs=1):
    """Search ``V in SU(2)^{⊗3}`` maximising `crit` on ``V rho V^†``.

    Parameters
    ----------
    rho : array_like, shape (8, 8)
        Trace-one density matrix.
    crit : Criterion
    seed : int
        Seed for the start points; identical inputs give identical output.
    restarts : int
        Number of Nelder-Mead runs; run 0 starts at the identity.
    tol : float
        Restarts stop early once the objective is within `tol` of its
        supremum (1 for tau3 and fidelity, 0 for the distance).
    jobs : int
        Worker processes; the merge is the same as in a serial run.

    Returns
    -------
    OptResult
    """
    crit = Criterion(crit)
    rho = np.asarray(rho, dtype=complex)
    evaluate_criterion(rho, crit)
    target = _SUPREMUM[crit] - tol
    points = start_points(seed, restarts)
    results = []
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        for i in range(0, restarts, jobs):
            chunk = points[i:i + jobs]
            if pool is None:
                results.extend(_run_restart(rho, crit, x) for x in chunk)
            else:
                results.extend(pool.map(_run_restart, [rho] * len(chunk), [crit] * len(chunk), chunk))
            if any(v >= target for _, v in results):
                break
    finally:
        if pool is not None:
            pool.shutdown()

    values = [v for _, v in results]
    hit = [i for i, v in enumerate(values) if v >= target]
    if hit:
        best = hit[0]
        values = values[:best + 1]
    else:
        best = int(np.argmax(values))  # argmax keeps the lowest index on ties
    angles = results[best][0]
    op = local_unitary(angles)
    state = op.apply(rho)
    state = 0.5 * (state + dagger(state))
    return OptResult(
        best_unitary=op,
        optimized_state=state,
        objective=evaluate_criterion(state, crit),
        restarts_used=len(values),
        seed=seed,
        objective_trace=values,
        angles=angles,
    )
