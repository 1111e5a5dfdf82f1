"""Exact linear algebra for single qubits and qubit pairs.

Single-qubit states are 2x2 complex ``ndarray`` density matrices. Two-qubit
pure states are length-4 complex vectors in the fixed basis order
``(|++>, |+->, |-+>, |-->)``, first factor = original slot, second = copy slot.
"""
from __future__ import annotations

import math

import numpy as np

from .exceptions import DomainError

ATOL = 1e-12

PLUS = np.array([1.0, 0.0], dtype=complex)
MINUS = np.array([0.0, 1.0], dtype=complex)

BASIS_LABELS = ("++", "+-", "-+", "--")

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY = np.eye(2, dtype=complex)


def clamp_nonneg(value: float, what: str = "value", atol: float = ATOL) -> float:
    """Return ``max(value, 0)``; values below ``-atol`` are an error."""
    if value < -atol:
        raise DomainError(f"{what} is negative ({value:.3e})")
    return max(float(value), 0.0)


def xlog2x(x: float) -> float:
    return 0.0 if x <= 0.0 else x * math.log2(x)


def det2(m: np.ndarray) -> float:
    return float((m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]).real)


# -- construction ---------------------------------------------------------

def ket(*amplitudes) -> np.ndarray:
    return np.asarray(amplitudes, dtype=complex)


def projector(psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def product_state(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def is_density_matrix(rho: np.ndarray, atol: float = ATOL) -> bool:
    rho = np.asarray(rho)
    if rho.shape != (2, 2):
        return False
    if not np.allclose(rho, rho.conj().T, rtol=0, atol=atol):
        return False
    if abs(np.trace(rho) - 1) >= atol:
        return False
    det = det2(rho)
    return det >= -atol and rho[0, 0].real >= -atol and rho[1, 1].real >= -atol


def check_density_matrix(rho: np.ndarray, atol: float = ATOL) -> np.ndarray:
    if not is_density_matrix(rho, atol):
        raise DomainError(f"not a valid qubit density matrix:\n{rho}")
    return np.asarray(rho, dtype=complex)


def check_joint_state(psi: np.ndarray, atol: float = ATOL) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (4,):
        raise DomainError(f"joint state must have 4 amplitudes, got shape {psi.shape}")
    if abs(np.vdot(psi, psi).real - 1) >= atol:
        raise DomainError("joint state is not normalized")
    return psi


# -- reductions -----------------------------------------------------------

def partial_trace(state: np.ndarray, keep: int) -> np.ndarray:
    """Reduced state of subsystem ``keep`` (0 = first, 1 = second) of a pure pair."""
    if keep not in (0, 1):
        raise DomainError(f"keep must be 0 or 1, got {keep!r}")
    m = np.asarray(state, dtype=complex).reshape(2, 2)
    if keep == 0:
        return m @ m.conj().T
    return m.T @ m.conj()


def partial_trace_mixed(rho: np.ndarray, keep: int) -> np.ndarray:
    """Same as :func:`partial_trace` for a 4x4 two-qubit density matrix."""
    r = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    if keep == 0:
        return np.einsum("ijkj->ik", r)
    if keep == 1:
        return np.einsum("jijk->ik", r)
    raise DomainError(f"keep must be 0 or 1, got {keep!r}")


def schmidt_coefficients(state: np.ndarray) -> np.ndarray:
    """Singular values of the 2x2 amplitude matrix, largest first."""
    return np.linalg.svd(np.asarray(state, dtype=complex).reshape(2, 2), compute_uv=False)


# -- Bloch representation -------------------------------------------------

def bloch_from_state(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    return np.array([
        2.0 * rho[0, 1].real,
        -2.0 * rho[0, 1].imag + 0.0,
        (rho[0, 0] - rho[1, 1]).real,
    ])


def state_from_bloch(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if np.linalg.norm(v) > 1 + 1e-9:
        raise DomainError(f"Bloch vector longer than 1: |v| = {np.linalg.norm(v):.12g}")
    return 0.5 * (IDENTITY + v[0] * SIGMA_X + v[1] * SIGMA_Y + v[2] * SIGMA_Z)


def eigenvalues(rho: np.ndarray) -> tuple[float, float]:
    """Eigenvalues of a 2x2 Hermitian matrix from trace and determinant, descending."""
    rho = np.asarray(rho, dtype=complex)
    t = np.trace(rho).real
    d = det2(rho)
    disc = np.sqrt(clamp_nonneg(t * t - 4 * d, "discriminant"))
    return (t + disc) / 2, (t - disc) / 2


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Entropy in bits."""
    lams = eigenvalues(rho)
    return float(-sum(xlog2x(clamp_nonneg(lam, "eigenvalue")) for lam in lams))


def fidelity_mixed(rho1: np.ndarray, rho2: np.ndarray) -> float:
    """Uhlmann fidelity of two qubit states, ``Tr(r1 r2) + 2 sqrt(det r1 det r2)``."""
    rho1 = np.asarray(rho1, dtype=complex)
    rho2 = np.asarray(rho2, dtype=complex)
    overlap = np.trace(rho1 @ rho2).real
    d1 = clamp_nonneg(det2(rho1), "det")
    d2 = clamp_nonneg(det2(rho2), "det")
    return float(min(max(overlap + 2.0 * np.sqrt(d1 * d2), 0.0), 1.0))


def overlap_sq(a: np.ndarray, b: np.ndarray) -> float:
    return float(abs(np.vdot(a, b)) ** 2)
