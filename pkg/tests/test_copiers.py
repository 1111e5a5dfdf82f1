import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bloch_pauli, cascade_explicit, fidelity_sqrtm, partial_trace_loops, reduced_qubit, ultimate_joint_natural
from qcopiers import optimizer
from qcopiers.copiers import (
    CopierFamily,
    global_fid_copier,
    local_fid_copier,
    local_fid_sin2phi,
    make_copier,
    make_ensemble,
    ultimate_copier,
    unentangled_copier,
    uqcm_copier,
    wz_cascade,
    wz_copier,
)
from qcopiers.exceptions import ConsistencyError, DomainError
from qcopiers.qstate import fidelity_mixed, is_density_matrix, overlap_sq, projector, schmidt_coefficients

JOINT = (CopierFamily.WZ, CopierFamily.ULTIMATE, CopierFamily.UNENTANGLED)
overlaps = st.floats(0, 1)


class TestEnsemble:
    def test_orthogonal(self):
        ens = make_ensemble(0)
        assert ens.theta == 0
        np.testing.assert_allclose(ens.psi1, [1, 0])
        np.testing.assert_allclose(ens.psi2, [0, 1])

    def test_identical(self):
        ens = make_ensemble(1)
        assert ens.theta == pytest.approx(math.pi / 4)
        np.testing.assert_allclose(ens.psi1, ens.psi2, atol=1e-15)

    def test_half(self):
        ens = make_ensemble(0.5)
        assert ens.theta == pytest.approx(math.pi / 8)
        np.testing.assert_allclose(ens.psi1, [0.923879532511, 0.382683432365], atol=1e-12)
        assert ens.priors == (0.5, 0.5)

    @given(overlaps)
    def test_invariants(self, f):
        ens = make_ensemble(f)
        assert overlap_sq(ens.psi1, ens.psi2) == pytest.approx(f, abs=1e-14)
        np.testing.assert_allclose(bloch_pauli(projector(ens.psi1)), ens.bloch1, atol=1e-14)
        np.testing.assert_allclose(bloch_pauli(projector(ens.psi2)), ens.bloch2, atol=1e-14)

    @pytest.mark.parametrize("f", [-1e-9, 1.0000001, math.nan])
    def test_domain(self, f):
        with pytest.raises(DomainError):
            make_ensemble(f)


class TestFamilyTags:
    def test_parse(self):
        assert CopierFamily.parse("WZ") is CopierFamily.WZ
        assert CopierFamily.parse(" global_fid ") is CopierFamily.GLOBAL_FID
        assert CopierFamily.parse(CopierFamily.UQCM) is CopierFamily.UQCM
        with pytest.raises(DomainError):
            CopierFamily.parse("input")


class TestWZ:
    def test_orthogonal(self):
        out = wz_copier(make_ensemble(0))
        assert out.q == 1 and out.local_fidelity == 1
        np.testing.assert_allclose(out.copy1, np.diag([1, 0]))

    def test_identical(self):
        out = wz_copier(make_ensemble(1))
        np.testing.assert_allclose(out.copy1, np.eye(2) / 2, atol=1e-15)
        np.testing.assert_allclose(out.copy2, np.eye(2) / 2, atol=1e-15)
        assert out.q == 0 and out.local_fidelity == 0.5

    def test_half(self):
        out = wz_copier(make_ensemble(0.5))
        assert out.local_fidelity == 0.75
        assert out.q == pytest.approx(0.707106781187, abs=1e-12)
        np.testing.assert_allclose(out.copy1, np.diag([0.853553390593, 0.146446609407]), atol=1e-12)
        np.testing.assert_allclose(out.copy2, np.diag([0.146446609407, 0.853553390593]), atol=1e-12)

    def test_basis_copying(self):
        ens = make_ensemble(0.3)
        out = wz_copier(ens)
        c, s = math.cos(ens.theta), math.sin(ens.theta)
        np.testing.assert_allclose(out.joint1, [c, 0, 0, s], atol=1e-15)
        np.testing.assert_allclose(out.joint2, [s, 0, 0, c], atol=1e-15)


class TestCascade:
    def test_two_copies_match_wz(self):
        ens = make_ensemble(0.4)
        c1, c2 = wz_cascade(ens, 2)
        out = wz_copier(ens)
        for got in c1:
            np.testing.assert_allclose(got, out.copy1, atol=1e-15)
        for got in c2:
            np.testing.assert_allclose(got, out.copy2, atol=1e-15)

    def test_four_copies_explicit(self):
        ens = make_ensemble(0.5)
        c1, c2 = wz_cascade(ens, 4)
        state = cascade_explicit(ens.psi1, 4)
        for k in range(4):
            np.testing.assert_allclose(reduced_qubit(state, k, 4), np.diag([0.853553390593, 0.146446609407]), atol=1e-12)
            np.testing.assert_allclose(c1[k], reduced_qubit(state, k, 4), atol=1e-14)
        state2 = cascade_explicit(ens.psi2, 4)
        for k in range(4):
            np.testing.assert_allclose(c2[k], reduced_qubit(state2, k, 4), atol=1e-14)

    def test_three_perfect_clones(self):
        c1, c2 = wz_cascade(make_ensemble(0), 3)
        assert len(c1) == len(c2) == 3
        for a, b in zip(c1, c2):
            np.testing.assert_allclose(a, np.diag([1, 0]))
            np.testing.assert_allclose(b, np.diag([0, 1]))

    @settings(max_examples=20, deadline=None)
    @given(overlaps, st.integers(2, 6))
    def test_explicit_any_size(self, f, n):
        ens = make_ensemble(f)
        c1, _ = wz_cascade(ens, n)
        state = cascade_explicit(ens.psi1, n)
        expected = sorted(np.round(reduced_qubit(state, k, n).real, 12).tolist() for k in range(n))
        assert sorted(np.round(c.real, 12).tolist() for c in c1) == expected

    def test_too_few(self):
        with pytest.raises(DomainError):
            wz_cascade(make_ensemble(0.5), 1)


class TestUltimate:
    def test_below_threshold_is_wz(self):
        ens = make_ensemble(0.1)
        out, wz = ultimate_copier(ens), wz_copier(ens)
        assert out.family is CopierFamily.ULTIMATE
        np.testing.assert_allclose(out.joint1, wz.joint1)
        np.testing.assert_allclose(out.joint2, wz.joint2)
        assert out.q == pytest.approx(0.948683298051, abs=1e-12)
        assert out.q_h == pytest.approx(0, abs=1e-15)

    def test_orthogonal(self):
        assert ultimate_copier(make_ensemble(0)).local_fidelity == 1

    def test_half(self):
        ens = make_ensemble(0.5)
        sol = optimizer.maximize_ih(0.5)
        out = ultimate_copier(ens, sol)
        assert overlap_sq(out.joint1, out.joint2) == pytest.approx(0.5, abs=1e-12)
        for joint, copy in zip(out.joints, out.copies):
            for keep in (0, 1):
                np.testing.assert_allclose(partial_trace_loops(joint, keep), copy, atol=1e-12)
        q, q_h = sol.q, sol.q_h
        np.testing.assert_allclose(out.copy1, 0.5 * np.array([[1 + q, q_h], [q_h, 1 - q]]), atol=1e-12)
        np.testing.assert_allclose(out.copy2, 0.5 * np.array([[1 - q, q_h], [q_h, 1 + q]]), atol=1e-12)

    @pytest.mark.parametrize("f", [0.25, 0.5, 0.75, 0.9, 0.99])
    def test_matches_natural_frame_construction(self, f):
        sol = optimizer.maximize_ih(f)
        out = ultimate_copier(make_ensemble(f), sol)
        j1, j2 = ultimate_joint_natural(sol.r_m, sol.cos_phi)
        np.testing.assert_allclose(out.joint1, j1, atol=1e-12)
        np.testing.assert_allclose(out.joint2, j2, atol=1e-12)

    def test_infeasible_solution_rejected(self):
        sol = optimizer.maximize_ih(0.5)
        bad = optimizer.UltimateCopierSolution(f=0.5, r_m=sol.r_m, phi_m=sol.phi_m, x=sol.x + 0.5, ih=sol.ih)
        with pytest.raises(ConsistencyError):
            ultimate_copier(make_ensemble(0.5), bad)


class TestUnentangled:
    def test_orthogonal(self):
        assert unentangled_copier(make_ensemble(0)).q == 1

    def test_identical(self):
        out = unentangled_copier(make_ensemble(1))
        assert out.q == 0 and out.local_fidelity == pytest.approx(1)

    def test_quarter(self):
        out = unentangled_copier(make_ensemble(0.25))
        assert out.q == pytest.approx(0.707106781187, abs=1e-12)
        assert out.q_h == pytest.approx(0.707106781187, abs=1e-12)
        assert out.local_fidelity == pytest.approx(0.982962913145, abs=1e-12)
        ens = make_ensemble(0.25)
        assert fidelity_mixed(projector(ens.psi1), out.copy1) == pytest.approx(0.982962913145, abs=1e-10)

    @given(overlaps)
    def test_product_and_pure(self, f):
        out = unentangled_copier(make_ensemble(f))
        for joint, copy in zip(out.joints, out.copies):
            assert schmidt_coefficients(joint)[1] < 1e-12
            assert np.trace(copy @ copy).real == pytest.approx(1, abs=1e-12)


class TestFidelityTargetedCopiers:
    def test_global_limits(self):
        out = global_fid_copier(make_ensemble(0))
        assert (out.q, out.r, out.q_h) == (1, 1, 0)
        out = global_fid_copier(make_ensemble(1))
        assert out.q == 0 and out.q_h == pytest.approx(1) and out.r == pytest.approx(1)

    def test_global_half(self):
        out = global_fid_copier(make_ensemble(0.5))
        assert out.q == pytest.approx(0.577350269190, abs=1e-12)
        assert out.q_h == pytest.approx(0.804737854124, abs=1e-12)
        assert out.r == pytest.approx(0.990422307500, abs=1e-12)
        v1, v2 = bloch_pauli(out.copy1), bloch_pauli(out.copy2)
        assert np.linalg.norm(v1) == pytest.approx(out.r, abs=1e-12)
        assert np.linalg.norm(v1 - v2) / 2 == pytest.approx(out.q, abs=1e-12)

    def test_local_limits(self):
        assert local_fid_sin2phi(0) == 0
        out = local_fid_copier(make_ensemble(0))
        assert out.q == 1 and out.local_fidelity == 1
        assert local_fid_sin2phi(1) == pytest.approx(math.sqrt(2) / 2, abs=1e-15)
        assert local_fid_copier(make_ensemble(1)).q == 0

    def test_local_half(self):
        assert local_fid_sin2phi(0.5) == pytest.approx(0.611095687419, abs=1e-12)
        out = local_fid_copier(make_ensemble(0.5))
        assert is_density_matrix(out.copy1) and is_density_matrix(out.copy2)

    @given(st.floats(0, 1))
    def test_local_is_optimal_over_its_family(self, f):
        # local fidelity of the one-parameter family as a function of the angle
        sf = math.sqrt(f)

        def fid(two_phi):
            return 0.5 * (1 + math.cos(two_phi) * (1 - f + sf * (1 + sf) * math.sin(two_phi)))

        best = max(fid(t) for t in np.linspace(0, math.pi / 2, 4001))
        assert local_fid_copier(make_ensemble(f)).local_fidelity >= best - 1e-9

    def test_uqcm(self):
        for f in (0, 0.3, 0.5, 1):
            assert uqcm_copier(make_ensemble(f)).local_fidelity == pytest.approx(5 / 6, abs=1e-15)
        out = uqcm_copier(make_ensemble(0))
        assert out.q == pytest.approx(2 / 3) and out.q_h == 0

    def test_uqcm_half_matrix(self):
        out = uqcm_copier(make_ensemble(0.5))
        expected = np.array([[3 + 1.414213562373, 1.414213562373], [1.414213562373, 3 - 1.414213562373]]) / 6
        np.testing.assert_allclose(out.copy1, expected, atol=1e-12)
        v = bloch_pauli(out.copy1)
        assert np.linalg.norm(v) == pytest.approx(2 / 3, abs=1e-12)
        assert v[0] == pytest.approx(out.q_h, abs=1e-12) and v[2] == pytest.approx(out.q, abs=1e-12)


@pytest.mark.parametrize("family", list(CopierFamily))
class TestAllFamilies:
    def test_invariants_on_grid(self, family, grid101):
        for f in grid101:
            out = make_copier(family, f)
            v1, v2 = bloch_pauli(out.copy1), bloch_pauli(out.copy2)
            assert is_density_matrix(out.copy1, 1e-12) and is_density_matrix(out.copy2, 1e-12)
            assert out.q == pytest.approx(np.linalg.norm(v1 - v2) / 2, abs=1e-12)
            assert out.q_h == pytest.approx(np.linalg.norm(v1 + v2) / 2, abs=1e-12)
            assert np.linalg.norm(v1) == pytest.approx(out.r, abs=1e-12)
            assert np.linalg.norm(v2) == pytest.approx(out.r, abs=1e-12)
            assert out.q**2 + out.q_h**2 <= out.r**2 + 1e-12

    def test_local_fidelity_direct(self, family, grid101):
        for f in grid101:
            out = make_copier(family, f)
            ens = make_ensemble(f)
            for psi, copy in zip((ens.psi1, ens.psi2), out.copies):
                # the pure-input closed form is exact: F = <psi|rho|psi>
                direct = np.vdot(psi, copy @ psi).real
                assert out.local_fidelity == pytest.approx(direct, abs=1e-12)
                assert fidelity_mixed(projector(psi), copy) == pytest.approx(direct, abs=1e-8)

    def test_joint_outputs(self, family, grid101):
        if family not in JOINT:
            assert make_copier(family, 0.5).joints is None
            return
        for f in grid101:
            out = make_copier(family, f)
            assert overlap_sq(out.joint1, out.joint2) == pytest.approx(f, abs=1e-12)
            for joint, copy in zip(out.joints, out.copies):
                assert np.vdot(joint, joint).real == pytest.approx(1, abs=1e-12)
                np.testing.assert_allclose(partial_trace_loops(joint, 0), copy, atol=1e-10)
                np.testing.assert_allclose(partial_trace_loops(joint, 1), copy, atol=1e-10)


def test_fidelity_oracle_agrees_at_mixed_points():
    ens = make_ensemble(0.37)
    for family in CopierFamily:
        out = make_copier(family, 0.37)
        if np.linalg.matrix_rank(out.copy1, tol=1e-9) == 2:
            assert fidelity_sqrtm(projector(ens.psi1), out.copy1) == pytest.approx(out.local_fidelity, abs=1e-6)
