"""Named invariants checked over a grid of overlaps.

Each invariant is a function ``f -> None`` that raises ``AssertionError`` with a
short reason when it is violated. Any other exception counts as a failure too.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import optimizer
from .copiers import CopierFamily, make_copier, make_ensemble, wz_cascade
from .infomeasures import accessible_info_oracle, binary_info_from_q, holevo_two_state, i1_baseline, ih_baseline
from .qstate import bloch_from_state, fidelity_mixed, is_density_matrix, overlap_sq, partial_trace, projector, schmidt_coefficients
from .sweep import evaluate, f_grid

ORDER_TOL = 1e-9
JOINT_FAMILIES = (CopierFamily.WZ, CopierFamily.ULTIMATE, CopierFamily.UNENTANGLED)


@dataclass(frozen=True)
class InvariantResult:
    name: str
    passed: bool
    checked: int
    f: float | None = None
    detail: str = ""

    def line(self) -> str:
        if self.passed:
            return f"PASS  {self.name} ({self.checked} points)"
        return f"FAIL  {self.name} at f={self.f!r}: {self.detail}"


def _records(f):
    return {fam: evaluate(f, fam) for fam in CopierFamily}


def check_copies_are_states(f):
    for fam in CopierFamily:
        out = make_copier(fam, f)
        for rho in out.copies:
            assert is_density_matrix(rho, 1e-10), f"{fam.value} copy is not a density matrix"


def check_bloch_parameters(f):
    for fam in CopierFamily:
        out = make_copier(fam, f)
        v1, v2 = (bloch_from_state(rho) for rho in out.copies)
        assert abs(np.linalg.norm(v1 - v2) / 2 - out.q) < 1e-10, f"{fam.value}: q mismatch"
        assert abs(np.linalg.norm(v1 + v2) / 2 - out.q_h) < 1e-10, f"{fam.value}: q_h mismatch"
        assert abs(np.linalg.norm(v1) - out.r) < 1e-10, f"{fam.value}: r mismatch"
        assert abs(np.linalg.norm(v2) - out.r) < 1e-10, f"{fam.value}: copies have unequal Bloch length"


def check_local_fidelity(f):
    ens = make_ensemble(f)
    for fam in CopierFamily:
        out = make_copier(fam, f)
        for psi, rho in zip((ens.psi1, ens.psi2), out.copies):
            got = fidelity_mixed(projector(psi), rho)
            assert abs(got - out.local_fidelity) < 1e-8, f"{fam.value}: closed form {out.local_fidelity} vs {got}"


def check_joint_outputs(f):
    for fam in JOINT_FAMILIES:
        out = make_copier(fam, f)
        j1, j2 = out.joints
        assert abs(overlap_sq(j1, j2) - f) < 1e-12, f"{fam.value}: overlap not preserved"
        for j in (j1, j2):
            assert np.abs(partial_trace(j, 0) - partial_trace(j, 1)).max() < 1e-10, f"{fam.value}: copies differ"
        if fam is CopierFamily.UNENTANGLED:
            assert schmidt_coefficients(j1)[1] < 1e-12 and schmidt_coefficients(j2)[1] < 1e-12, "entangled output"


def check_wz_lossless(f):
    rec = evaluate(f, CopierFamily.WZ)
    assert abs(rec.i1 - i1_baseline(f)) < 1e-12, f"i1 {rec.i1} vs input {i1_baseline(f)}"


def check_wz_fidelity(f):
    rec = evaluate(f, CopierFamily.WZ)
    assert abs(rec.f_local - (1 - f / 2)) < 1e-12, f"f_local {rec.f_local}"


def check_wz_cascade(f):
    ens = make_ensemble(f)
    target = math.sqrt(1 - f)
    for copies1, copies2 in [wz_cascade(ens, 4)]:
        for a, b in zip(copies1, copies2):
            q = np.linalg.norm(bloch_from_state(a) - bloch_from_state(b)) / 2
            assert abs(q - target) < 1e-12, f"cascade copy has q={q}"


def check_uqcm_fidelity(f):
    rec = evaluate(f, CopierFamily.UQCM)
    assert abs(rec.f_local - 5 / 6) < 1e-12, f"f_local {rec.f_local}"


def check_orderings(f):
    recs = _records(f)
    ult, loc, wz = recs[CopierFamily.ULTIMATE], recs[CopierFamily.LOCAL_FID], recs[CopierFamily.WZ]
    bound = ih_baseline(f)
    for fam, rec in recs.items():
        assert ult.ih >= rec.ih - ORDER_TOL, f"ih(ultimate)={ult.ih} < ih({fam.value})={rec.ih}"
        assert loc.f_local >= rec.f_local - ORDER_TOL, f"f_local(local_fid) < f_local({fam.value})"
        assert wz.i1 >= rec.i1 - ORDER_TOL, f"i1(wz) < i1({fam.value})"
        assert rec.ih <= bound + ORDER_TOL, f"ih({fam.value})={rec.ih} exceeds input bound {bound}"


def check_record_ranges(f):
    for rec in _records(f).values():
        values = [rec.i1, rec.i1_ratio, rec.ih, rec.f_local, rec.q, rec.r, rec.q_h]
        assert all(math.isfinite(v) for v in values), f"{rec.copier}: non-finite field"
        assert 0 <= rec.i1_ratio <= 1 + 1e-9, f"{rec.copier}: i1_ratio={rec.i1_ratio}"
        assert 0 <= rec.f_local <= 1, f"{rec.copier}: f_local={rec.f_local}"


def check_oracle(f):
    for fam in CopierFamily:
        out = make_copier(fam, f)
        oracle = accessible_info_oracle(out.copy1, out.copy2)
        closed = binary_info_from_q(out.q)
        assert abs(oracle - closed) < 1e-6, f"{fam.value}: scan {oracle} vs closed form {closed}"
        assert oracle <= holevo_two_state(out.copy1, out.copy2) + 1e-9, f"{fam.value}: exceeds Holevo bound"


def check_quartic_root_residual(f):
    if f == 1.0:
        return
    sol = optimizer.maximize_ih(f)
    res = optimizer.quartic_residual(f, sol.r_m, sol.cos_phi)
    assert abs(res) < 1e-8, f"residual {res:.3e} at r={sol.r_m}, cos(phi)={sol.cos_phi}"


def check_low_overlap_root(f):
    if f > 0.19:
        return
    c = optimizer.cos_phi_of_r(f, math.sqrt(1 - f))
    assert abs(c + 1) < 1e-8, f"cos(phi)={c} at r=sqrt(1-f)"


def check_feasibility(f):
    if 0.0 < f < 1.0:
        optimizer.feasibility_check(f, optimizer.maximize_ih(f))


def check_ultimate_ih(f):
    sol = optimizer.maximize_ih(f)
    rec = evaluate(f, CopierFamily.ULTIMATE)
    assert abs(rec.ih - sol.ih) < 1e-10, f"Holevo of copies {rec.ih} vs optimizer {sol.ih}"


INVARIANTS: dict[str, Callable[[float], None]] = {
    "copies_are_states": check_copies_are_states,
    "bloch_parameters": check_bloch_parameters,
    "local_fidelity_closed_form": check_local_fidelity,
    "joint_isometry_symmetry_purity": check_joint_outputs,
    "wz_lossless_one_state_info": check_wz_lossless,
    "wz_fidelity_law": check_wz_fidelity,
    "wz_cascade_lossless": check_wz_cascade,
    "uqcm_constant_fidelity": check_uqcm_fidelity,
    "orderings": check_orderings,
    "record_ranges": check_record_ranges,
    "accessible_info_oracle": check_oracle,
    "quartic_root_residual": check_quartic_root_residual,
    "low_overlap_root_identity": check_low_overlap_root,
    "feasibility_K1_C1": check_feasibility,
    "ultimate_holevo_consistency": check_ultimate_ih,
}


def run_invariant(name: str, check: Callable[[float], None], grid) -> InvariantResult:
    for f in grid:
        try:
            check(f)
        except Exception as exc:  # noqa: BLE001 - any failure is reported, not raised
            reason = str(exc) or type(exc).__name__
            return InvariantResult(name, False, len(grid), f=f, detail=f"{type(exc).__name__}: {reason}")
    return InvariantResult(name, True, len(grid))


def run_verification(steps: int = 21, names=None) -> list[InvariantResult]:
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    grid = f_grid(0.0, 1.0, steps)
    selected = INVARIANTS if names is None else {n: INVARIANTS[n] for n in names}
    return [run_invariant(name, check, grid) for name, check in selected.items()]
