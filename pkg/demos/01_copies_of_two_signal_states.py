"""What each copier does to a pair of nonorthogonal signal states.

Two equiprobable qubit states with squared overlap f are fed into six
different symmetric 1 -> 2 copiers. For each we print the reduced state of one
copy and the three Bloch numbers that decide everything downstream:

    q    half the distance between the two copies' Bloch vectors
    r    length of either Bloch vector (1 = pure copy)
    q_h  half the length of their sum
"""
import numpy as np

from qcopiers import CopierFamily, make_copier, make_ensemble
from qcopiers.qstate import bloch_from_state

np.set_printoptions(precision=4, suppress=True)

f = 0.5
ens = make_ensemble(f)
print(f"signal states at f = {f}: theta = {ens.theta:.4f}")
print("  psi1 =", ens.psi1.real, "  psi2 =", ens.psi2.real)
print("  Bloch vectors:", ens.bloch1, ens.bloch2)
print()

for family in CopierFamily:
    out = make_copier(family, f)
    print(f"{family.value:12s} q={out.q:.4f}  r={out.r:.4f}  q_h={out.q_h:.4f}  local fidelity={out.local_fidelity:.4f}")
    print("   copy of psi1:", bloch_from_state(out.copy1), "(Bloch vector)")

# Basis copying keeps the separation between the copies (q = sqrt(1-f)) but
# throws away all coherence (q_h = 0). The unentangled copier does the opposite:
# pure copies (r = 1) that have been pushed toward each other.
wz = make_copier("wz", f)
print("\nWZ joint output for psi1 in (|++>, |+->, |-+>, |-->):", wz.joint1.real)
print("WZ copy of psi1:\n", wz.copy1.real)
