"""Certified lower bounds for two one-parameter families.

rho1(p) mixes GHZ with a product state; its three-tangle is exactly p and the
bound reproduces it.  rho2(p) mixes GHZ with W; here the bound is weaker, but
always sits below the known exact value.
"""

from tangle3.certify import lower_bound, spectral_upper_bound
from tangle3.states import rho1, rho2, tau3_rho2_exact
from tangle3.twirl import tau3_approx_rho

print("rho1(p) = p GHZ + (1-p) |001><001|")
print("   p    lower     trace_nf  upper")
for p in (0.1, 0.3, 0.5, 0.7, 0.9):
    rep = lower_bound(rho1(p))
    print(f"{p:4.1f}  {rep.lower_bound:.6f}  {rep.trace_nf:.6f}  {spectral_upper_bound(rho1(p)):.6f}")

# the plane formula alone sees nothing here: the product admixture hides the GHZ part
print("plane formula on rho1(0.9):", round(tau3_approx_rho(rho1(0.9)), 6))

print("\nrho2(p) = p GHZ + (1-p) W")
print("   p    plane     no-filter  pipeline  exact")
for p in (0.7, 0.75, 0.8, 0.85, 0.9, 0.95, 1.0):
    rho = rho2(p)
    plain = lower_bound(rho, use_normal_form=False, restarts=8).lower_bound
    full = lower_bound(rho, restarts=8).lower_bound
    print(f"{p:5.2f}  {tau3_approx_rho(rho):.5f}  {plain:.5f}    {full:.5f}   {tau3_rho2_exact(p):.5f}")

# an error estimate brackets the answer from above
rep = lower_bound(rho1(0.5), with_error_estimate=True)
est = rep.error_estimate
print(f"\nrho1(0.5): {rep.lower_bound:.6f} <= tau3 <= {est.upper_bound:.6f}  (lambda={est.lam:.3f})")
