import numpy as np

from tangle3.optimize import local_unitary

# lines printed by the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LINES = []


def rng(seed=0):
    return np.random.default_rng(seed)


def random_pure(gen):
    v = gen.normal(size=8) + 1j * gen.normal(size=8)
    return v / np.linalg.norm(v)


def random_state(gen, rank=8):
    a = gen.normal(size=(8, rank)) + 1j * gen.normal(size=(8, rank))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_local_unitary(gen):
    angles = gen.uniform(-np.pi, np.pi, size=9)
    return local_unitary(angles)


def random_sl2(gen, spread=0.5):
    m = np.eye(2) + spread * (gen.normal(size=(2, 2)) + 1j * gen.normal(size=(2, 2)))
    return m / np.sqrt(np.linalg.det(m))


def cayley_tau3(psi):
    """2 sqrt|Det| with Cayley's 2x2x2 hyperdeterminant, written independently."""
    a = np.asarray(psi).reshape(2, 2, 2)
    first = (a[0, 0, 0] * a[1, 1, 1] - a[0, 0, 1] * a[1, 1, 0]
             - a[0, 1, 0] * a[1, 0, 1] + a[0, 1, 1] * a[1, 0, 0]) ** 2
    second = 4 * ((a[0, 0, 0] * a[0, 1, 1] - a[0, 0, 1] * a[0, 1, 0])
                  * (a[1, 0, 0] * a[1, 1, 1] - a[1, 0, 1] * a[1, 1, 0]))
    return 2 * np.sqrt(abs(first - second))


def record(number, title, ok, detail):
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def monte_carlo_twirl(rho, samples, gen):
    """Average of U rho U^† over random GHZ-symmetry elements.

    An element is a qubit permutation, an optional collective flip and the
    phases ``exp(i f1 Z) ⊗ exp(i f2 Z) ⊗ exp(-i (f1 + f2) Z)``.  The twelve
    discrete choices are cycled (stratified sampling); the angles are drawn
    uniformly.
    """
    from tangle3.linalg import SX, kron3
    from tangle3.twirl import QUBIT_PERMUTATIONS

    flip = kron3(SX, SX, SX)
    discrete = [p @ f for p in QUBIT_PERMUTATIONS for f in (np.eye(8), flip)]
    zsign = np.array([[1 - 2 * ((i >> (2 - k)) & 1) for k in range(3)] for i in range(8)])
    f = gen.uniform(0, 2 * np.pi, size=(samples, 2))
    angles = np.stack([f[:, 0], f[:, 1], -(f[:, 0] + f[:, 1])], axis=1)
    phases = np.exp(1j * angles @ zsign.T)  # (samples, 8) diagonal of the rotation
    acc = np.zeros((8, 8), dtype=complex)
    for k, d in enumerate(discrete):
        ph = phases[k::len(discrete)]
        r = d @ rho @ d.T
        acc += np.einsum("si,ij,sj->ij", ph, r, ph.conj())
    return acc / samples
