"""Symmetric 1 -> 2 copiers acting on two equiprobable pure qubit signal states.

Signal states are ``cos(t)|+> + sin(t)|->`` and ``sin(t)|+> + cos(t)|->`` with
``f = sin(2t)**2`` their squared overlap. Every copier yields, for each signal,
the reduced state of one copy (both copies are identical). Copiers built from an
explicit two-qubit output also carry the joint pure states.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import optimizer
from .exceptions import ConsistencyError, DomainError
from .qstate import MINUS, PLUS, clamp_nonneg, partial_trace, partial_trace_mixed, product_state, projector

PRIORS = (0.5, 0.5)


class CopierFamily(str, Enum):
    WZ = "wz"
    ULTIMATE = "ultimate"
    UNENTANGLED = "unentangled"
    GLOBAL_FID = "global_fid"
    LOCAL_FID = "local_fid"
    UQCM = "uqcm"

    @classmethod
    def parse(cls, tag) -> "CopierFamily":
        if isinstance(tag, cls):
            return tag
        try:
            return cls(str(tag).strip().lower())
        except ValueError:
            known = ", ".join(m.value for m in cls)
            raise DomainError(f"unknown copier {tag!r} (expected one of: {known})") from None


@dataclass(frozen=True, eq=False)
class InputEnsemble:
    f: float
    theta: float
    psi1: np.ndarray
    psi2: np.ndarray

    @property
    def priors(self) -> tuple[float, float]:
        return PRIORS

    @property
    def bloch1(self) -> np.ndarray:
        return np.array([math.sqrt(self.f), 0.0, math.sqrt(1 - self.f)])

    @property
    def bloch2(self) -> np.ndarray:
        return np.array([math.sqrt(self.f), 0.0, -math.sqrt(1 - self.f)])


@dataclass(frozen=True, eq=False)
class CopierOutput:
    """Reduced copies for each signal plus the Bloch parameters that fix the indicators.

    ``q`` is half the distance between the two copy Bloch vectors, ``r`` their
    common length and ``q_h`` half the length of their sum.
    """

    family: CopierFamily
    f: float
    copy1: np.ndarray
    copy2: np.ndarray
    q: float
    r: float
    q_h: float
    local_fidelity: float
    joint1: np.ndarray | None = None
    joint2: np.ndarray | None = None

    @property
    def copies(self) -> tuple[np.ndarray, np.ndarray]:
        return self.copy1, self.copy2

    @property
    def joints(self) -> tuple[np.ndarray, np.ndarray] | None:
        if self.joint1 is None:
            return None
        return self.joint1, self.joint2


def make_ensemble(f: float) -> InputEnsemble:
    if not 0.0 <= f <= 1.0:
        raise DomainError(f"overlap f must lie in [0, 1], got {f!r}")
    f = float(f)
    theta = 0.5 * math.asin(math.sqrt(f))
    c, s = math.cos(theta), math.sin(theta)
    return InputEnsemble(f=f, theta=theta, psi1=np.array([c, s], dtype=complex), psi2=np.array([s, c], dtype=complex))


def _symmetric_pair(q, q_h):
    rho1 = 0.5 * np.array([[1 + q, q_h], [q_h, 1 - q]], dtype=complex)
    rho2 = 0.5 * np.array([[1 - q, q_h], [q_h, 1 + q]], dtype=complex)
    return rho1, rho2


def _from_joints(family, ens, joint1, joint2, q, r, q_h, local_fidelity):
    return CopierOutput(
        family=family, f=ens.f,
        copy1=partial_trace(joint1, 0), copy2=partial_trace(joint2, 0),
        q=q, r=r, q_h=q_h, local_fidelity=local_fidelity,
        joint1=joint1, joint2=joint2,
    )


def _wz(ens: InputEnsemble, family: CopierFamily) -> CopierOutput:
    c, s = math.cos(ens.theta), math.sin(ens.theta)
    pp, mm = product_state(PLUS, PLUS), product_state(MINUS, MINUS)
    q = math.sqrt(1 - ens.f)
    return _from_joints(family, ens, c * pp + s * mm, s * pp + c * mm, q=q, r=q, q_h=0.0,
                        local_fidelity=1 - ens.f / 2)


def wz_copier(ens: InputEnsemble) -> CopierOutput:
    """Basis copying ``|+> -> |++>``, ``|-> -> |-->``."""
    return _wz(ens, CopierFamily.WZ)


# basis copying on (|++>, |+->, |-+>, |-->): flips the blank when the original is |->
_BASIS_COPY = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)


def _basis_copy(rho: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    blank = projector(PLUS)
    joint = _BASIS_COPY @ np.kron(rho, blank) @ _BASIS_COPY.conj().T
    return partial_trace_mixed(joint, 0), partial_trace_mixed(joint, 1)


def wz_cascade(ens: InputEnsemble, n_copies: int) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """Copies produced by feeding WZ copies back into further WZ copiers.

    Returns, for each signal state, the list of ``n_copies`` reduced copies.
    """
    if n_copies < 2:
        raise DomainError(f"a cascade produces at least 2 copies, got {n_copies}")
    result = []
    for psi in (ens.psi1, ens.psi2):
        copies = [projector(psi)]
        while len(copies) < n_copies:
            copies.extend(_basis_copy(copies.pop()))
        result.append(copies)
    return result[0], result[1]


def _sqrt_checked(value, what):
    if value < -1e-10:
        raise ConsistencyError(f"infeasible copier amplitude: {what} = {value:.3e}")
    return math.sqrt(max(value, 0.0))


def ultimate_copier(ens: InputEnsemble, sol: optimizer.UltimateCopierSolution | None = None) -> CopierOutput:
    """Ancilla-free copier with the largest Holevo copied information.

    Of the family with that information, this member has the best local fidelity.
    """
    if sol is None:
        sol = optimizer.maximize_ih(ens.f)
    if sol.cos_phi <= -1.0:
        return _wz(ens, CopierFamily.ULTIMATE)

    r, c, x = sol.r_m, sol.cos_phi, sol.x
    amps1 = np.array([
        _sqrt_checked((1 + r) / 2, "(1+r)/2"),
        _sqrt_checked((1 - r) / 2, "(1-r)/2"),
        0.0,
        0.0,
    ])
    side = _sqrt_checked((1 - x + r * c) / 2, "(1-x+r cos)/2")
    amps2 = np.array([
        _sqrt_checked(x / 2, "x/2"),
        _sqrt_checked(x / 2 - r * c, "x/2-r cos"),
        side,
        side,
    ])
    basis = optimizer.build_basis_matrix(sol.phi_m)
    joint1 = (basis.T @ amps1).astype(complex)
    joint2 = (basis.T @ amps2).astype(complex)
    q, q_h = sol.q, sol.q_h
    fid = 0.5 * (1 + q * math.sqrt(1 - ens.f) + q_h * math.sqrt(ens.f))
    return _from_joints(CopierFamily.ULTIMATE, ens, joint1, joint2, q=q, r=r, q_h=q_h, local_fidelity=fid)


def unentangled_copier(ens: InputEnsemble) -> CopierOutput:
    """Best copier whose two copies come out as a product state."""
    f = ens.f
    q = math.sqrt(clamp_nonneg(1 - math.sqrt(f)))
    q_h = f ** 0.25
    a, b = math.sqrt((1 + q) / 2), math.sqrt((1 - q) / 2)
    copy1 = np.array([a, b], dtype=complex)
    copy2 = np.array([b, a], dtype=complex)
    fid = 0.5 * (f ** 0.75 + 1 + math.sqrt(clamp_nonneg((1 - f) * (1 - math.sqrt(f)))))
    return _from_joints(CopierFamily.UNENTANGLED, ens, product_state(copy1, copy1), product_state(copy2, copy2),
                        q=q, r=1.0, q_h=q_h, local_fidelity=fid)


def global_fid_copier(ens: InputEnsemble) -> CopierOutput:
    """Copier maximizing the fidelity of the joint output with two perfect copies."""
    f = ens.f
    sf = math.sqrt(f)
    q = math.sqrt((1 - f) / (1 + f))
    q_h = (f + sf) / (1 + f)
    r = math.sqrt(1 + f * (1 + 2 * sf)) / (1 + f)
    fid = 0.5 * (1 + ((1 - f) * math.sqrt(1 + f) + f * (1 + sf)) / (1 + f))
    copy1, copy2 = _symmetric_pair(q, q_h)
    return CopierOutput(CopierFamily.GLOBAL_FID, f, copy1, copy2, q=q, r=r, q_h=q_h, local_fidelity=fid)


def local_fid_sin2phi(f: float) -> float:
    if f < 1e-12:
        return 0.0
    sf = math.sqrt(f)
    return (sf - 1 + math.sqrt(1 - 2 * sf + 9 * f)) / (4 * sf)


def local_fid_copier(ens: InputEnsemble) -> CopierOutput:
    """Copier maximizing the fidelity of each copy with its original."""
    f = ens.f
    sf = math.sqrt(f)
    s2 = local_fid_sin2phi(f)
    c2 = math.sqrt(1 - s2 * s2)
    q = math.sqrt(1 - f) * c2
    q_h = s2 * c2 * (1 + sf)
    r = c2 * math.sqrt(1 - f + (1 + sf) ** 2 * s2 * s2)
    fid = 0.5 * (1 + c2 * (1 - f + sf * (1 + sf) * s2))
    copy1, copy2 = _symmetric_pair(q, q_h)
    return CopierOutput(CopierFamily.LOCAL_FID, f, copy1, copy2, q=q, r=r, q_h=q_h, local_fidelity=fid)


def uqcm_copier(ens: InputEnsemble) -> CopierOutput:
    """Universal copier: shrinks every Bloch vector to 2/3 of its length."""
    f = ens.f
    q = 2 / 3 * math.sqrt(1 - f)
    q_h = 2 / 3 * math.sqrt(f)
    copy1, copy2 = _symmetric_pair(q, q_h)
    return CopierOutput(CopierFamily.UQCM, f, copy1, copy2, q=q, r=2 / 3, q_h=q_h, local_fidelity=5 / 6)


_BUILDERS = {
    CopierFamily.WZ: wz_copier,
    CopierFamily.ULTIMATE: ultimate_copier,
    CopierFamily.UNENTANGLED: unentangled_copier,
    CopierFamily.GLOBAL_FID: global_fid_copier,
    CopierFamily.LOCAL_FID: local_fid_copier,
    CopierFamily.UQCM: uqcm_copier,
}


def make_copier(family, f: float) -> CopierOutput:
    return _BUILDERS[CopierFamily.parse(family)](make_ensemble(f))
