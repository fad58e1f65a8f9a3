"""SL(2,C)^{⊗3} normal form of a three-qubit state.

The normal form has all three single-qubit marginals proportional to the
identity.  It is reached by alternately filtering each qubit with
``rho_(j)^{-1/2}`` (normalised to unit determinant).  Each such step can only
lower the trace.  When the normal form lies at infinity on the orbit (e.g.
GHZ mixed with a product state) the plain sweep converges only
algebraically, so every sweep is followed by a damped Newton step on
``tr(A rho A^†)`` in the log-coordinates of the filters.  The Newton step is
itself a unit-determinant local filter and is accepted only if it lowers the
trace, so every intermediate state is a legal filtered state.
"""

from dataclasses import dataclass, field

import numpy as np

from .exceptions import NearSingularMarginal
from .linalg import (
    I2,
    SX,
    SY,
    SZ,
    LocalOperator,
    dagger,
    density_matrix,
    identity_operator,
    inv_sqrt_2x2,
    kron3,
    partial_trace,
    two_qubit_marginal,
)

PAULIS = (SX, SY, SZ)
_PAULI_PAIRS = np.array([[np.kron(a, b) for b in PAULIS] for a in PAULIS])
MAX_NEWTON_NORM = 10.0


@dataclass(frozen=True)
class NormalFormResult:
    nf: np.ndarray
    accumulated_filter: LocalOperator
    trace_nf: float
    iterations: int
    converged: bool
    degenerate: bool
    trace_history: list = field(default_factory=list, repr=False)

    @property
    def normalized(self):
        return self.nf / self.trace_nf


def marginal_deviation(rho):
    """Largest Frobenius distance of ``2 rho_(j) / tr rho`` from the identity."""
    tr = np.trace(rho).real
    return max(np.linalg.norm(2 * partial_trace(rho, j) / tr - I2) for j in (1, 2, 3))


def _embed(j, a):
    ops = [I2, I2, I2]
    ops[j - 1] = a
    return kron3(*ops)


def filter_step(rho, j):
    """Filter qubit `j` so that its marginal becomes proportional to identity.

    Returns
    -------
    rho_new : ndarray
        ``A rho A^†`` with ``A = a_j`` acting on qubit `j`.
    a_j : ndarray, shape (2, 2)
        Hermitian positive filter with unit determinant.

    Raises
    ------
    NearSingularMarginal
        If the normalised marginal of qubit `j` has an eigenvalue below 1e-14.
    """
    m = partial_trace(rho, j)
    m = m / np.trace(m).real
    s = inv_sqrt_2x2(m)
    a = s / np.sqrt(np.linalg.det(s).real)
    big = _embed(j, a)
    out = big @ rho @ dagger(big)
    return 0.5 * (out + dagger(out)), a


def _exp_pauli(vec):
    """``exp(vec · sigma)`` for a real 3-vector."""
    theta = np.linalg.norm(vec)
    if theta == 0:
        return I2.copy()
    n = vec / theta
    return np.cosh(theta) * I2 + np.sinh(theta) * (n[0] * SX + n[1] * SY + n[2] * SZ)


def newton_step(rho, max_halvings=40):
    """One damped Newton step on ``tr(A rho A^†)`` over positive SL(2,C) filters.

    With ``A_j^† A_j = exp(X_j)`` and ``X_j = x_j · sigma`` the trace is
    ``tr(rho exp(X_1)⊗exp(X_2)⊗exp(X_3))``; at ``x = 0`` its gradient is the
    vector of single-qubit Pauli expectations and its Hessian is
    ``tr(rho) I + C`` with ``C`` the two-qubit correlation blocks.

    Returns ``(rho_new, LocalOperator)``; the identity filter if no decrease
    was found.
    """
    tr = np.trace(rho).real
    s = rho / tr
    g = np.concatenate([[np.trace(partial_trace(s, j) @ p).real for p in PAULIS]
                        for j in (1, 2, 3)])
    hess = np.eye(9)
    for j, k in ((1, 2), (1, 3), (2, 3)):
        m = two_qubit_marginal(s, j, k)
        block = np.einsum("ij,abji->ab", m, _PAULI_PAIRS).real
        hess[3 * j - 3:3 * j, 3 * k - 3:3 * k] = block
        hess[3 * k - 3:3 * k, 3 * j - 3:3 * j] = block.T
    x = -np.linalg.solve(hess + 1e-12 * np.eye(9), g)
    norm = np.linalg.norm(x)
    if norm > MAX_NEWTON_NORM:
        x *= MAX_NEWTON_NORM / norm
    step = 1.0
    for _ in range(max_halvings):
        op = LocalOperator(*(_exp_pauli(0.5 * step * x[3 * j:3 * j + 3]) for j in range(3)))
        out = op.apply(rho)
        if np.trace(out).real < tr:
            return 0.5 * (out + dagger(out)), op
        step *= 0.5
    return rho, identity_operator()


def normal_form(rho, eps_nf=1e-9, trace_floor=1e-12, max_iter=10000, accelerate=True):
    """Iterate local filters until every marginal is maximally mixed.

    Parameters
    ----------
    rho : array_like, shape (8, 8)
        Density matrix, trace in ``(0, 1]``.
    eps_nf : float
        Convergence threshold on :func:`marginal_deviation`.
    trace_floor : float
        Below this trace the state is declared degenerate (normal form zero).
    max_iter : int
        Cap on the number of qubit 1→2→3 sweeps.
    accelerate : bool
        Follow each sweep with :func:`newton_step`.

    Returns
    -------
    NormalFormResult
        ``nf`` is unnormalised; ``degenerate`` signals a collapsing trace or
        a rank-one marginal, in which case the three-tangle is zero.
    """
    rho = density_matrix(rho)
    acc = identity_operator()
    history = [np.trace(rho).real]
    converged = degenerate = False
    it = 0
    for it in range(1, max_iter + 1):
        try:
            for j in (1, 2, 3):
                rho, a = filter_step(rho, j)
                acc = LocalOperator(*(a @ f if k == j - 1 else f for k, f in enumerate(acc)))
                history.append(np.trace(rho).real)
        except NearSingularMarginal:
            degenerate = True
            break
        if history[-1] < trace_floor:
            degenerate = True
            break
        if marginal_deviation(rho) <= eps_nf:
            converged = True
            break
        if accelerate:
            rho, op = newton_step(rho)
            acc = op.compose(acc)
            history.append(np.trace(rho).real)
    return NormalFormResult(
        nf=rho,
        accumulated_filter=acc,
        trace_nf=float(np.trace(rho).real),
        iterations=it,
        converged=converged,
        degenerate=degenerate,
        trace_history=history,
    )
