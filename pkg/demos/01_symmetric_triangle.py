"""Walk through the GHZ-symmetric triangle.

Every GHZ-symmetric state is a point (x, y).  This script prints a few
landmarks, traces the GHZ/W border, and compares the exact three-tangle with
the plane given by the tangent witnesses.
"""

import numpy as np

from tangle3.symmetric import (
    SQRT3,
    ghz_w_line,
    state_of_coords,
    tau3_symmetric_approx,
    tau3_symmetric_exact,
)
from tangle3.twirl import coords

landmarks = {
    "GHZ+ corner": (0.5, SQRT3 / 4),
    "GHZ- corner": (-0.5, SQRT3 / 4),
    "maximally mixed": (0.0, 0.0),
    "separable corner": (0.0, -SQRT3 / 12),
    "tangent point": tuple(ghz_w_line(1.0)),
}
print("landmark               x         y       tau3")
for name, c in landmarks.items():
    print(f"{name:<20} {c[0]:8.4f}  {c[1]:8.4f}  {tau3_symmetric_exact(c):8.4f}")

# the border between GHZ class and W class
print("\nGHZ/W border")
for v in np.linspace(0, 1, 6):
    p = ghz_w_line(v)
    print(f"  v={v:.1f}  x={p.x:.5f}  y={p.y:.5f}")

# walk from the maximally mixed state towards GHZ+
print("\nalong the segment I/8 -> GHZ+")
print("   t     exact    plane")
for t in np.linspace(0, 1, 11):
    c = (0.5 * t, SQRT3 / 4 * t)
    print(f"{t:4.1f}  {tau3_symmetric_exact(c):8.5f} {tau3_symmetric_approx(c):8.5f}")

# the plane is a lower bound everywhere and touches the surface on the lower edges
gaps = []
for y in np.linspace(-SQRT3 / 12, SQRT3 / 4, 80):
    a = 0.125 + SQRT3 / 2 * y
    for x in np.linspace(-a, a, 80):
        gaps.append(tau3_symmetric_exact((x, y)) - tau3_symmetric_approx((x, y)))
print(f"\nlargest exact-minus-plane gap on an 80x80 grid: {max(gaps):.4f}")
print(f"smallest: {min(gaps):.2e}")

rho = state_of_coords((0.4, 0.35))
print("\ncoordinates read back from an 8x8 matrix:", coords(rho))
