"""From Pauli expectation values to a bound.

A noisy GHZ state is "measured" by computing its Pauli expectations.  With
all 64 numbers the state is rebuilt and run through the full pipeline; with
only the Z strings plus the XXX, XYY-type (and YYY, XXY-type) correlators the
four GHZ matrix elements are read off directly.
"""

import numpy as np

from tangle3.certify import lower_bound
from tangle3.linalg import basis_state, projector
from tangle3.tomography import (
    LABELS,
    bound_from_elements,
    expectations_of,
    ghz_elements_minimal,
    reconstruct,
)

phase = np.exp(0.4j)
psi = (basis_state("000") + phase * basis_state("111")) / np.sqrt(2)
rho = 0.9 * projector(psi) + 0.1 * np.eye(8) / 8

rec = expectations_of(rho)
nonzero = {k: round(v, 4) for k, v in rec.items() if abs(v) > 1e-12}
print(f"{len(LABELS)} labels, {len(nonzero)} non-zero:")
print(nonzero)

full = reconstruct(rec)
print("\nfull reconstruction error", np.max(np.abs(full - rho)))
print("pipeline bound from the full record", round(lower_bound(full).lower_bound, 6))

needed = ["III", "IIZ", "IZI", "IZZ", "ZII", "ZIZ", "ZZI", "ZZZ",
          "XXX", "XYY", "YXY", "YYX", "YYY", "XXY", "XYX", "YXX"]
small = {k: rec[k] for k in needed}
for with_imag in (False, True):
    e = ghz_elements_minimal(small, with_imag=with_imag)
    print(f"\nminimal settings, imaginary part {'used' if with_imag else 'ignored'}:")
    c_im = "-" if e.c_im is None else f"{e.c_im:.4f}"
    print(f"  p000={e.p000:.4f} p111={e.p111:.4f} c=({e.c_re:.4f}, {c_im})")
    print(f"  plane bound {bound_from_elements(e):.4f}")
