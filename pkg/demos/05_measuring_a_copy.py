"""The closed-form one-state information against a brute-force measurement scan.

For two equiprobable states with Bloch vectors in a plane, scanning projective
measurements over that plane finds the accessible information directly. The
scan agrees with the closed form in q and never exceeds the Holevo bound.
"""
from qcopiers import CopierFamily, make_copier
from qcopiers.infomeasures import accessible_info_oracle, binary_info_from_q, holevo_two_state

f = 0.6
print(f"f = {f}")
print(f"{'copier':12s} {'scan':>10s} {'closed form':>12s} {'Holevo':>10s}")
for family in CopierFamily:
    out = make_copier(family, f)
    scan = accessible_info_oracle(out.copy1, out.copy2)
    print(f"{family.value:12s} {scan:10.7f} {binary_info_from_q(out.q):12.7f} {holevo_two_state(out.copy1, out.copy2):10.7f}")
