"""Designing the copier that maximizes the Holevo information of its copies.

Fix the copies' Bloch length r. Unitarity and equal-purity constraints then
allow a smallest angle-cosine between the two copies, given by a root of a
quartic in cos(phi). Smaller cosine means more distinguishable copies, so the
information becomes a function of r alone, maximized numerically.

Below f of about 0.206 the best choice is r = sqrt(1-f), cos(phi) = -1: plain
basis copying. Above it the optimum moves toward pure, partially overlapping
copies.
"""
import math

import numpy as np

from qcopiers import optimizer

f = 0.5
print(f"quartic at f={f}, r=0.8:", np.round(optimizer.quartic_coeffs(f, 0.8), 5))
roots = optimizer.quartic_roots(np.array(optimizer.quartic_coeffs(f, 0.8)))[0]
print("  roots:", np.round(np.sort_complex(roots), 6), "-> selected", round(optimizer.cos_phi_of_r(f, 0.8), 6))

print("\nobjective along r at f = 0.5:")
for r in np.linspace(math.sqrt(0.5), 1, 9):
    print(f"  r={r:.4f}  cos(phi)={optimizer.cos_phi_of_r(f, r):+.5f}  ih={optimizer.ih_of_r(f, r):.6f}")

print("\noptimum versus overlap:")
print("  f      r_m         cos(phi_m)   ih")
for f in (0.05, 0.15, 0.2, 0.206, 0.207, 0.25, 0.5, 0.8, 0.95):
    sol = optimizer.maximize_ih(f)
    print(f"  {f:<6} {sol.r_m:.8f}  {sol.cos_phi:+.6f}    {sol.ih:.6f}")

# The optimum is realizable: with K = C = 1 both unitarity conditions admit a
# common x, found here by bracketing independently of the closed form.
sol = optimizer.maximize_ih(0.5)
print("\nfeasibility witness at f = 0.5:", optimizer.feasibility_check(0.5, sol))
