"""Shannon and Holevo information carried by a pair of equiprobable qubit states.

All quantities are in bits per signal state.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError
from .qstate import ATOL, bloch_from_state, von_neumann_entropy, xlog2x
from .search import golden_section_max


@dataclass(frozen=True)
class MeasurementStatistics:
    """Outcome statistics of one measurement on a binary ensemble.

    ``cond_probs[i, j]`` is the probability of outcome ``j`` given signal ``i``.
    """

    cond_probs: np.ndarray
    priors: tuple[float, float] = (0.5, 0.5)

    def __post_init__(self):
        p = np.asarray(self.cond_probs, dtype=float)
        if p.ndim != 2 or p.shape[0] != 2:
            raise DomainError(f"cond_probs must have shape (2, K), got {p.shape}")
        if np.any(p < -ATOL) or np.any(p > 1 + ATOL):
            raise DomainError("conditional probabilities must lie in [0, 1]")
        if np.any(np.abs(p.sum(axis=1) - 1) > ATOL):
            raise DomainError("each row of cond_probs must sum to 1")
        if abs(sum(self.priors) - 1) > ATOL:
            raise DomainError("priors must sum to 1")
        object.__setattr__(self, "cond_probs", np.clip(p, 0.0, 1.0))

    @property
    def marginals(self) -> np.ndarray:
        return np.asarray(self.priors) @ self.cond_probs


def mutual_information(stats: MeasurementStatistics) -> float:
    marg = stats.marginals
    total = 0.0
    for i, prior in enumerate(stats.priors):
        for j, pji in enumerate(stats.cond_probs[i]):
            if prior > 0 and pji > 0:
                total += prior * pji * np.log2(pji / marg[j])
    return max(total, 0.0)


def binary_info_from_q(q: float) -> float:
    """One-state information of a symmetric pair with distinguishability ``q``."""
    if q < -ATOL or q > 1 + ATOL:
        raise DomainError(f"distinguishability q must lie in [0, 1], got {q!r}")
    q = min(max(float(q), 0.0), 1.0)
    return 0.5 * (xlog2x(1 + q) + xlog2x(1 - q))


def holevo_two_state(rho1: np.ndarray, rho2: np.ndarray, p1: float = 0.5) -> float:
    if not 0.0 <= p1 <= 1.0:
        raise DomainError(f"prior must lie in [0, 1], got {p1!r}")
    avg = p1 * np.asarray(rho1) + (1 - p1) * np.asarray(rho2)
    chi = von_neumann_entropy(avg) - p1 * von_neumann_entropy(rho1) - (1 - p1) * von_neumann_entropy(rho2)
    return float(max(chi, 0.0))


def ultimate_info_from_bloch(r: float, q_h: float) -> float:
    """Holevo bound for two equal-length Bloch vectors.

    ``r`` is the common length and ``q_h`` half the length of their sum.
    """
    if q_h > r + ATOL:
        raise DomainError(f"q_h ({q_h!r}) cannot exceed r ({r!r})")
    if r < -ATOL or r > 1 + ATOL or q_h < -ATOL:
        raise DomainError(f"need 0 <= q_h <= r <= 1, got r={r!r}, q_h={q_h!r}")
    return max(binary_info_from_q(min(r, 1.0)) - binary_info_from_q(min(max(q_h, 0.0), 1.0)), 0.0)


def _check_f(f: float) -> float:
    if not 0.0 <= f <= 1.0:
        raise DomainError(f"overlap f must lie in [0, 1], got {f!r}")
    return float(f)


def i1_baseline(f: float) -> float:
    """One-state information extractable from the uncopied signal states."""
    return binary_info_from_q(np.sqrt(1 - _check_f(f)))


def ih_baseline(f: float) -> float:
    """Holevo bound of the uncopied signal states."""
    sf = np.sqrt(_check_f(f))
    return float(1 - 0.5 * xlog2x(1 + sf) - 0.5 * xlog2x(1 - sf))


def one_state_info(out) -> float:
    return binary_info_from_q(out.q)


def _measurement_plane(v1: np.ndarray, v2: np.ndarray):
    """Orthonormal pair spanning a plane that contains both Bloch vectors."""
    candidates = [v1 - v2, v1 + v2, v1, v2, np.array([0.0, 0.0, 1.0])]
    e1 = next(c / np.linalg.norm(c) for c in candidates if np.linalg.norm(c) > 1e-15)
    for c in candidates + [np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0])]:
        w = c - np.dot(c, e1) * e1
        if np.linalg.norm(w) > 1e-9:
            return e1, w / np.linalg.norm(w)
    raise AssertionError("unreachable")


def _binary_channel_info(p1, p2):
    """Mutual information of two equiprobable inputs with P(outcome 0) = p1, p2."""
    p1 = np.clip(p1, 0.0, 1.0)
    p2 = np.clip(p2, 0.0, 1.0)
    out = np.zeros(np.broadcast(p1, p2).shape)
    for a, b in ((p1, p2), (1 - p1, 1 - p2)):
        m = 0.5 * (a + b)
        with np.errstate(divide="ignore", invalid="ignore"):
            ta = np.where(a > 0, a * np.log2(a / m), 0.0)
            tb = np.where(b > 0, b * np.log2(b / m), 0.0)
        out = out + 0.5 * (ta + tb)
    return np.maximum(out, 0.0)


def accessible_info_oracle(rho1: np.ndarray, rho2: np.ndarray, n_angles: int = 2048, tol: float = 1e-10) -> float:
    """Best one-state information over projective measurements, by direct scan.

    Scans measurement axes in the plane of the two Bloch vectors, then refines
    the best angle by golden-section search. Independent of the closed form
    :func:`binary_info_from_q`.
    """
    v1 = bloch_from_state(rho1)
    v2 = bloch_from_state(rho2)
    e1, e2 = _measurement_plane(v1, v2)

    def info_at(chi):
        n = np.multiply.outer(np.cos(chi), e1) + np.multiply.outer(np.sin(chi), e2)
        return _binary_channel_info(0.5 * (1 + n @ v1), 0.5 * (1 + n @ v2))

    step = np.pi / n_angles
    chis = np.arange(n_angles) * step
    values = info_at(chis)
    k = int(np.argmax(values))
    _, refined = golden_section_max(lambda c: float(info_at(c)), chis[k] - step, chis[k] + step, tol)
    return float(max(values[k], refined))


__all__ = [
    "MeasurementStatistics",
    "mutual_information",
    "binary_info_from_q",
    "holevo_two_state",
    "ultimate_info_from_bloch",
    "i1_baseline",
    "ih_baseline",
    "one_state_info",
    "accessible_info_oracle",
]
