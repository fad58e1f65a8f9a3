"""Certified lower bound on the mixed-state three-tangle, plus upper bounds.

The lower bound runs three stages: normal form, local-unitary optimisation
of the normalised normal form, and projection onto the GHZ-symmetric
family, whose exact three-tangle is known.  Twirling never increases the
three-tangle, so ``tr(rho_NF) * tau3(P(V rho_NF V^† / tr rho_NF))`` is a
lower bound for ``tau3(rho)``.

Upper bounds come from explicit decompositions: the spectral one, the
convexity estimate along the line from the projection through the
optimised state, and a search over decompositions inside a fixed subspace.
"""

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from .exceptions import StatesCoincide, UnsupportedState
from .linalg import dagger, density_matrix, herm_eigensystem, identity_operator, min_eigenvalue
from .normal_form import NormalFormResult, normal_form
from .optimize import Criterion, optimize
from .symmetric import (
    SymCoords,
    WitnessKind,
    coords_of_symmetric,
    sym_coords,
    tau3_symmetric_exact,
    witness_expectation,
)
from .tangle import hyperdeterminant, tau3_pure
from .twirl import coords, project, tau3_approx_rho

PSD_TOL = 1e-10
LAMBDA_ITERATIONS = 80
LAMBDA_FLOOR = 1e-6


class Verdict(enum.Enum):
    GHZ_CLASS_CERTIFIED = "GhzClassCertified"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ErrorEstimate:
    lam: float
    tau3_minus: float
    # bound on tau3 of the normalised optimised normal form
    upper_bound_normalized: float
    # the same bound rescaled by tr(rho_NF), comparable with the lower bound
    upper_bound: float
    # <GHZ|rho|GHZ> of the fidelity-optimised normal form; not a certified bound
    fidelity_heuristic: Optional[float] = None


@dataclass(frozen=True)
class BoundReport:
    lower_bound: float
    trace_nf: float
    coords_after: Optional[SymCoords]
    tau3_symmetric: float
    criterion: Criterion
    opt: dict
    degenerate_nf: bool
    nf_converged: bool
    nf_iterations: int
    approx_bound: float
    witness_values: dict
    upper_bound_spectral: float
    verdict: Verdict
    error_estimate: Optional[ErrorEstimate] = None
    optimized_state: Optional[np.ndarray] = field(default=None, repr=False)


@dataclass(frozen=True)
class Decomposition:
    weights: np.ndarray
    states: list

    def reconstruct(self):
        return sum(p * np.outer(s, s.conj()) for p, s in zip(self.weights, self.states))

    def average_tau3(self):
        return float(sum(p * tau3_pure(s) for p, s in zip(self.weights, self.states)))


def spectral_upper_bound(rho):
    """Average pure-state three-tangle of the eigen-decomposition of `rho`."""
    w, v = herm_eigensystem(rho)
    total = 0.0
    for lam, vec in zip(w, v.T):
        if lam > 0:
            total += lam * tau3_pure(vec / np.linalg.norm(vec))
    return float(total)


def lower_bound(rho, crit=Criterion.MAX_TAU3, seed=0, restarts=32, tol=1e-8, jobs=1,
                with_error_estimate=False, nf_options=None, use_normal_form=True):
    """Certified lower bound on the three-tangle of `rho`.

    Parameters
    ----------
    rho : array_like, shape (8, 8)
        Trace-one density matrix.
    crit : Criterion
        Criterion for the local-unitary step.
    seed, restarts, tol, jobs
        Passed to :func:`tangle3.optimize.optimize`.
    with_error_estimate : bool
        Also compute the convexity-based upper bound.
    nf_options : dict, optional
        Keyword arguments for :func:`tangle3.normal_form.normal_form`.
    use_normal_form : bool
        With False the filtering stage is skipped (identity filter, trace
        1).  The result is still a valid, usually weaker, bound.

    Returns
    -------
    BoundReport
    """
    rho = density_matrix(rho)
    if abs(np.trace(rho).real - 1) > 1e-9:
        raise ValueError("lower_bound needs a trace-one state")
    crit = Criterion(crit)
    if use_normal_form:
        nf = normal_form(rho, **(nf_options or {}))
    else:
        nf = NormalFormResult(nf=rho, accumulated_filter=identity_operator(), trace_nf=1.0,
                              iterations=0, converged=False, degenerate=False)
    witnesses = {k.value: witness_expectation(rho, k) for k in WitnessKind}
    common = dict(
        criterion=crit,
        nf_converged=nf.converged,
        nf_iterations=nf.iterations,
        approx_bound=tau3_approx_rho(rho),
        witness_values=witnesses,
        upper_bound_spectral=spectral_upper_bound(rho),
    )
    if nf.degenerate:
        return BoundReport(lower_bound=0.0, trace_nf=nf.trace_nf, coords_after=None,
                           tau3_symmetric=0.0, opt={}, degenerate_nf=True,
                           verdict=Verdict.INCONCLUSIVE, **common)

    normalized = nf.normalized
    opt = optimize(normalized, crit, seed=seed, restarts=restarts, tol=tol, jobs=jobs)
    state = opt.optimized_state
    c = sym_coords(*coords(state))
    tau_s = tau3_symmetric_exact(c)
    bound = tau_s * nf.trace_nf

    estimate = None
    if with_error_estimate:
        estimate = _error_report(state, nf.trace_nf, normalized, seed, restarts, tol, jobs)

    return BoundReport(
        lower_bound=bound,
        trace_nf=nf.trace_nf,
        coords_after=c,
        tau3_symmetric=tau_s,
        opt={
            "objective": opt.objective,
            "restarts_used": opt.restarts_used,
            "seed": opt.seed,
            "objective_trace": list(opt.objective_trace),
            "angles": [float(a) for a in opt.angles],
        },
        degenerate_nf=False,
        verdict=Verdict.GHZ_CLASS_CERTIFIED if bound > 0 else Verdict.INCONCLUSIVE,
        error_estimate=estimate,
        optimized_state=state,
        **common,
    )


def _error_report(state, trace_nf, normalized, seed, restarts, tol, jobs):
    rho_s = project(state)
    try:
        lam, rho_minus = boundary_lambda(state, rho_s)
        tau_minus = default_tau3_minus(rho_minus)
        upper = lam * tau_minus + (1 - lam) * tau3_symmetric_exact(coords_of_symmetric(rho_s))
    except StatesCoincide:
        lam, tau_minus = 0.0, 0.0
        upper = tau3_symmetric_exact(coords_of_symmetric(rho_s))
    fid = optimize(normalized, Criterion.MAX_FIDELITY, seed=seed, restarts=restarts,
                   tol=tol, jobs=jobs).objective
    return ErrorEstimate(lam=lam, tau3_minus=tau_minus, upper_bound_normalized=upper,
                         upper_bound=upper * trace_nf, fidelity_heuristic=fid)


def boundary_lambda(rho_nf, rho_s, iterations=LAMBDA_ITERATIONS):
    """Extend the segment from `rho_s` through `rho_nf` to the state-space border.

    Finds the smallest ``lam`` in ``(0, 1]`` for which
    ``rho_minus = rho_nf / lam - (1 - lam) / lam * rho_s`` is still positive
    semidefinite, by bisection on ``lam``.

    Returns
    -------
    lam : float
    rho_minus : ndarray
        Border state, smallest eigenvalue within ``1e-9`` of zero.  For
        ``lam == 1`` this is `rho_nf` itself (already on the border).

    Raises
    ------
    StatesCoincide
        If the two states differ by less than ``1e-12`` entrywise.
    """
    rho_nf = np.asarray(rho_nf, dtype=complex)
    rho_s = np.asarray(rho_s, dtype=complex)
    delta = rho_nf - rho_s
    if np.max(np.abs(delta)) <= 1e-12:
        raise StatesCoincide("optimised state equals its projection")

    def minus(lam):
        return rho_s + delta / lam

    def psd(lam):
        return min_eigenvalue(minus(lam)) >= -PSD_TOL

    hi = 1.0
    if not psd(LAMBDA_FLOOR):
        lo = LAMBDA_FLOOR
    else:
        lo = LAMBDA_FLOOR
        while psd(lo):
            hi = lo
            lo *= 1e-3
            if lo < 1e-300:
                raise ArithmeticError("state space border not found along the segment")
    if psd(hi) and not psd(lo):
        for _ in range(iterations):
            mid = 0.5 * (lo + hi)
            if psd(mid):
                hi = mid
            else:
                lo = mid
    out = minus(hi)
    return float(hi), 0.5 * (out + dagger(out))


def default_tau3_minus(rho_minus):
    """Spectral upper bound of the border state, falling back to 1."""
    tr = np.trace(rho_minus).real
    try:
        return min(1.0, spectral_upper_bound(rho_minus / tr))
    except (ValueError, ArithmeticError):
        return 1.0


def error_estimate(rho_nf, rho_s, tau3_minus=None):
    """Convexity upper bound ``lam * tau3_minus + (1 - lam) * tau3(rho_s)``.

    `rho_nf` is the normalised optimised state, `rho_s` its GHZ-symmetric
    projection.  `tau3_minus` must upper-bound the three-tangle of the border
    state; by default the spectral bound is used.
    """
    lam, rho_minus = boundary_lambda(rho_nf, rho_s)
    if tau3_minus is None:
        tau3_minus = default_tau3_minus(rho_minus)
    if not 0 <= tau3_minus <= 1:
        raise ValueError("tau3_minus must lie in [0, 1]")
    return convexity_bound(lam, tau3_minus, tau3_symmetric_exact(coords_of_symmetric(rho_s)))


def convexity_bound(lam, tau3_minus, tau3_s):
    return lam * tau3_minus + (1 - lam) * tau3_s


def _isometry(params, k, r):
    m = (params[:k * r] + 1j * params[k * r:]).reshape(k, r)
    a, _, bh = np.linalg.svd(m, full_matrices=False)
    return a @ bh


def subspace_decomposition_search(rho, basis, k, seed=0, restarts=64, max_evals=4000,
                                  tol=1e-8):
    """Search for a low-tangle ``k``-term decomposition of `rho` in a subspace.

    Decompositions are ``psi_j ∝ sum_i U[j, i] w_i`` where ``w_i`` are the
    columns of the spectral square root of `rho` and ``U`` is a ``k x rank``
    isometry, so every candidate reconstructs `rho` exactly.  The average
    three-tangle is minimised with Nelder-Mead over ``U`` (projected back to
    an isometry at every evaluation), from the spectral decomposition and
    ``restarts - 1`` random starts.

    Returns
    -------
    Decomposition
    float
        Average three-tangle, an upper bound on ``tau3(rho)``.

    Raises
    ------
    UnsupportedState
        If `rho` has weight outside ``span(basis)``.
    """
    rho = np.asarray(rho, dtype=complex)
    q, _ = np.linalg.qr(np.array([np.asarray(b, dtype=complex) for b in basis]).T)
    proj = q @ dagger(q)
    if np.max(np.abs(rho - proj @ rho @ proj)) > 1e-10:
        raise UnsupportedState("state is not supported on the given subspace")
    w, v = herm_eigensystem(rho)
    keep = w > 1e-12
    roots = v[:, keep] * np.sqrt(w[keep])
    r = roots.shape[1]
    if k < r:
        raise ValueError(f"k={k} is below the rank {r} of the state")

    def avg_tau3(params):
        psi = roots @ _isometry(params, k, r).T
        return float(np.sum(2.0 * np.sqrt(np.abs(hyperdeterminant(psi)))))

    rng = np.random.Generator(np.random.Philox(seed))
    n = 2 * k * r
    first = np.zeros(n)
    first[:k * r] = np.eye(k, r).ravel()
    best_x, best_f = first, avg_tau3(first)
    for i in range(restarts):
        x0 = first if i == 0 else rng.normal(size=n)
        simplex = np.vstack([x0, x0 + 0.3 * np.eye(n)])
        res = minimize(avg_tau3, x0, method="Nelder-Mead",
                       options={"maxfev": max_evals, "xatol": 1e-10, "fatol": 0.0,
                                "initial_simplex": simplex})
        if res.fun < best_f:
            best_x, best_f = res.x, res.fun
        if best_f <= tol:
            break

    psi = roots @ _isometry(best_x, k, r).T
    weights = np.sum(np.abs(psi) ** 2, axis=0)
    nonzero = weights > 1e-15
    states = [psi[:, j] / np.sqrt(weights[j]) for j in np.flatnonzero(nonzero)]
    dec = Decomposition(weights=weights[nonzero], states=states)
    return dec, dec.average_tau3()
