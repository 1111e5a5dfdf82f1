"""Basis copying can be repeated without further loss.

Each WZ copy is diagonal in the copying basis, so copying a copy is classical
duplication. Feeding copies back into more WZ copiers yields any number of
copies, each with the same one-state information as the original.
"""
import numpy as np

from qcopiers import make_ensemble, wz_cascade
from qcopiers.infomeasures import binary_info_from_q, i1_baseline
from qcopiers.qstate import bloch_from_state

f = 0.5
ens = make_ensemble(f)
for n in (2, 4, 8):
    copies1, copies2 = wz_cascade(ens, n)
    qs = [np.linalg.norm(bloch_from_state(a) - bloch_from_state(b)) / 2 for a, b in zip(copies1, copies2)]
    infos = [binary_info_from_q(q) for q in qs]
    print(f"{n} copies: one-state info per copy = {min(infos):.9f} .. {max(infos):.9f}")
print(f"original signal:           {i1_baseline(f):.9f}")
print("every copy of psi1:\n", np.round(copies1[0].real, 6))
