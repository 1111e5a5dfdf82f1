"""How much of the signal's information survives copying.

Two figures of merit:

* one-state information i1: best Shannon information from measuring a single
  copy. It depends on q only.
* Holevo information ih: what is reachable with block coding over long runs of
  copies.

The uncopied signal sets the baseline for both. Basis copying (WZ) keeps all
of the one-state information and nothing more, so the gap between the two
baselines is exactly what block coding on the originals would add.
"""
from qcopiers import CopierFamily, evaluate
from qcopiers.infomeasures import i1_baseline, ih_baseline

families = list(CopierFamily)
print("f     " + "".join(f"{c.value:>12s}" for c in families) + "       input")
for label, field, base in (("i1", "i1", i1_baseline), ("ih", "ih", ih_baseline)):
    print(f"--- {label} (bits per signal) ---")
    for f in (0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99):
        row = "".join(f"{getattr(evaluate(f, c), field):12.5f}" for c in families)
        print(f"{f:<6}{row}{base(f):12.5f}")

print("\nfraction of the input Holevo information that a copy cannot deliver:")
for f in (0.5, 0.85, 0.9, 0.95, 0.99):
    base = ih_baseline(f)
    ult = evaluate(f, "ultimate").ih
    wz = evaluate(f, "wz").ih
    print(f"  f={f:<5} best copier {1 - ult / base:6.1%}   WZ copier {1 - wz / base:6.1%}")
