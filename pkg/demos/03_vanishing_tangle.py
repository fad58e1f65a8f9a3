"""A rank-3 state whose projection lands in the W region.

The pipeline bound is 0, which proves nothing.  Searching over decompositions
inside span{|000>, |phi>, |111>} finds three pure states of (numerically)
zero three-tangle, so the three-tangle really vanishes.
"""

import numpy as np

from tangle3.certify import lower_bound, subspace_decomposition_search
from tangle3.linalg import basis_state
from tangle3.states import PHI, rho3
from tangle3.tangle import tau3_pure

rho = rho3()
print("8 * rho3 =")
print(np.real(8 * rho).astype(int))

rep = lower_bound(rho)
print(f"\npipeline bound {rep.lower_bound}, projected point ({rep.coords_after.x:.4f}, {rep.coords_after.y:.4f})")
print("spectral upper bound", round(rep.upper_bound_spectral, 6))

basis = [basis_state("000"), PHI, basis_state("111")]
dec, avg = subspace_decomposition_search(rho, basis, k=3, seed=0)
print(f"\nbest decomposition: average tau3 {avg:.2e}")
for p, psi in sorted(zip(dec.weights, dec.states), key=lambda t: t[0]):
    # express each state in the three-vector basis, global phase removed
    amps = np.array([np.vdot(b, psi) for b in basis])
    amps *= np.exp(-1j * np.angle(amps[np.argmax(np.abs(amps))]))
    print(f"  p={p:.5f}  tau3={tau3_pure(psi):.1e}  coefficients={np.round(amps, 4)}")
print("reconstruction error", np.max(np.abs(dec.reconstruct() - rho)))
