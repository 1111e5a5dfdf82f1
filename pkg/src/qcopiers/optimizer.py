"""Design of the ancilla-free copier that maximizes the Holevo copied information.

For a copy Bloch length ``r`` the smallest reachable cosine of the angle between
the two copy Bloch vectors is a root of a quartic; the copied Holevo information
is then a function of ``r`` alone and is maximized over
``r in [sqrt(1 - f), 1]``.

The search runs over ``s = sqrt(1 - r**2)`` rather than ``r``: for strongly
overlapping inputs the optimum crowds against ``r = 1``, where ``r`` is a poor
coordinate (``ds/dr`` diverges).
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import brentq

from .exceptions import ConsistencyError, DomainError, InfeasibleError
from .infomeasures import ultimate_info_from_bloch
from .search import golden_section_max

REAL_TOL = 1e-9
ROOT_TOL = 1e-9
N_GRID = 513
R_TOL = 1e-10


class QuarticCoefficients(NamedTuple):
    """Coefficients of the quartic in ``cos(phi)``, highest power first."""

    c4: float
    c3: float
    c2: float
    c1: float
    c0: float

    def __call__(self, c):
        return (((self.c4 * c + self.c3) * c + self.c2) * c + self.c1) * c + self.c0


@dataclass(frozen=True)
class UltimateCopierSolution:
    f: float
    r_m: float
    phi_m: float
    x: float
    ih: float

    @property
    def cos_phi(self) -> float:
        return math.cos(self.phi_m)

    @property
    def q(self) -> float:
        return self.r_m * math.sin(self.phi_m / 2)

    @property
    def q_h(self) -> float:
        return self.r_m * math.cos(self.phi_m / 2)


@dataclass(frozen=True)
class FeasibilityWitness:
    x: float
    residual_f: float
    residual_n: float
    K: float = 1.0
    C: float = 1.0

    def ok(self, tol: float = 1e-8) -> bool:
        return abs(self.residual_f) < tol and abs(self.residual_n) < tol


def _check_f(f):
    if not 0.0 <= f <= 1.0:
        raise DomainError(f"overlap f must lie in [0, 1], got {f!r}")


def _check_r(f, r):
    lo = math.sqrt(1 - f)
    if not lo - 1e-12 <= r <= 1 + 1e-12:
        raise DomainError(f"r={r!r} outside [sqrt(1-f), 1] = [{lo:.12g}, 1] for f={f!r}")


def _coeff_arrays(f, r):
    r = np.asarray(r, dtype=float)
    r2 = r * r
    s = np.sqrt(np.clip(1 - r2, 0.0, None))
    return (
        r2 * (2 - r2 - 2 * s),
        4 * r2 * (1 - s),
        2 * (r2 * r2 + 2 * r2 + 4 * f * (s - 1)),
        4 * r2 * (1 + s - 4 * f),
        (4 * f - 1) ** 2 - (1 - r2) ** 2 + 2 * (r2 - 4 * f) * s,
    )


def quartic_coeffs(f: float, r: float) -> QuarticCoefficients:
    _check_f(f)
    _check_r(f, r)
    return QuarticCoefficients(*(float(c) for c in _coeff_arrays(f, min(r, 1.0))))


def quartic_residual(f: float, r: float, c: float) -> float:
    """The quartic evaluated term by term, without going through :func:`quartic_coeffs`."""
    s = math.sqrt(max(1 - r * r, 0.0))
    return (
        c**4 * (r**2 * (2 - r**2 - 2 * s))
        + c**3 * (4 * r**2 * (1 - s))
        + c**2 * (2 * (r**4 + 2 * r**2 + 4 * f * (s - 1)))
        + c * (4 * r**2 * (1 + s - 4 * f))
        + ((4 * f - 1) ** 2 - (1 - r**2) ** 2 + 2 * (r**2 - 4 * f) * s)
    )


def _polish(coeffs: np.ndarray, z: np.ndarray, max_iter: int = 200) -> np.ndarray:
    """Newton iterations on every root at once; coeffs has shape (n, 5), z (n, 4).

    Runs until every step is at rounding level, so that clustered (double or
    quadruple) roots, where Newton converges only linearly, are resolved too.
    """
    c = coeffs[:, :, None]
    z = z.astype(complex)
    active = np.ones(z.shape, dtype=bool)
    eps = np.finfo(float).eps
    for _ in range(max_iter):
        p = c[:, 0] * np.ones_like(z)
        dp = np.zeros_like(z)
        bound = np.abs(p)
        for k in range(1, 5):
            dp = dp * z + p
            p = p * z + c[:, k]
            bound = bound * np.abs(z) + np.abs(c[:, k])
        # stop once p(z) is indistinguishable from rounding noise
        active &= np.abs(p) > 8 * eps * bound
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(dp != 0, p / dp, 0.0)
        step = np.where(active & np.isfinite(step), step, 0.0)
        z = z - step
        active &= np.abs(step) > 4 * np.finfo(float).eps * np.maximum(1.0, np.abs(z))
        if not active.any():
            break
    return z


def quartic_roots(coeffs: np.ndarray) -> np.ndarray:
    """All complex roots of a batch of quartics via companion-matrix eigenvalues."""
    coeffs = np.atleast_2d(np.asarray(coeffs, dtype=float))
    if np.any(coeffs[:, 0] == 0):
        raise DomainError("leading coefficient vanishes; polynomial is not quartic")
    monic = coeffs[:, 1:] / coeffs[:, :1]
    n = coeffs.shape[0]
    comp = np.zeros((n, 4, 4))
    comp[:, 0, :] = -monic
    comp[:, 1, 0] = comp[:, 2, 1] = comp[:, 3, 2] = 1.0
    return _polish(coeffs, np.linalg.eigvals(comp))


def _second_largest_real(roots: np.ndarray) -> float:
    real = np.sort(roots[np.abs(roots.imag) < REAL_TOL].real)[::-1]
    if real.size < 2:
        raise InfeasibleError(f"quartic has fewer than two real roots: {roots}")
    c = float(real[1])
    if not -1 - ROOT_TOL <= c <= 1 + ROOT_TOL:
        raise InfeasibleError(f"second-largest root {c:.12g} is not a cosine")
    return min(max(c, -1.0), 1.0)


def cos_phi_of_r(f: float, r: float) -> float:
    """Smallest reachable cosine of the copy Bloch angle at copy Bloch length ``r``.

    This is the second-largest real root of the quartic, counted with
    multiplicity (at ``r = 1`` the quartic is a perfect square).
    """
    quartic_coeffs(f, r)
    c = float(_cos_phi_grid(f, np.array([float(r)]), strict=True)[0])
    return _refine_cos(f, min(float(r), 1.0), c)


def _refine_cos(f, r, c, width=1e-6):
    """Polish a quartic root against the overlap constraint.

    Near ``r = 1`` the quartic has two nearly coincident roots, so its roots
    carry errors around ``sqrt(eps)``. With ``x`` eliminated through the purity
    constraint, the overlap constraint has a simple root of slope about 2 in
    ``cos(phi)``, which brackets cleanly.
    """
    if r >= 1.0 or c <= -1.0 or c >= 1.0:
        return c

    def g(t):
        return _hof(f, r, t, x_parameter(r, t))

    lo, hi = max(c - width, -1.0), min(c + width, 1.0)
    g_lo, g_hi = g(lo), g(hi)
    if not g_lo * g_hi < 0:
        return c
    return brentq(g, lo, hi, xtol=1e-16, rtol=4 * np.finfo(float).eps)


def _cos_phi_grid(f: float, r: np.ndarray, strict: bool = False) -> np.ndarray:
    out = np.full(len(r), np.nan)
    # at r = 1 the quartic is (c**2 + 2c + 1 - 4f)**2 exactly
    edge = r >= 1.0
    out[edge] = min(-1 + 2 * math.sqrt(f), 1.0)
    inner = np.flatnonzero(~edge)
    if inner.size:
        coeffs = np.array(_coeff_arrays(f, r[inner])).T
        for i, row in zip(inner, quartic_roots(coeffs)):
            try:
                out[i] = _second_largest_real(row)
            except InfeasibleError:
                if strict:
                    raise
    return out


def _ih(r: float, c: float) -> float:
    q_h = r * math.sqrt(max((1 + c) / 2, 0.0))
    return ultimate_info_from_bloch(r, min(q_h, r))


def ih_of_r(f: float, r: float) -> float:
    """Holevo copied information at copy Bloch length ``r``; ``-inf`` if infeasible."""
    try:
        return _ih(r, cos_phi_of_r(f, r))
    except InfeasibleError:
        return -math.inf


def x_parameter(r: float, c: float) -> float:
    s = math.sqrt(max(1 - r * r, 0.0))
    return 0.5 * (1 + c * c + 2 * r * c + s * (1 - c * c))


def _solution(f, r, c):
    if abs(c + 1) < 1e-12:
        c = -1.0
    phi = math.acos(c)
    return UltimateCopierSolution(f=f, r_m=r, phi_m=phi, x=x_parameter(r, c), ih=_ih(r, c))


@functools.lru_cache(maxsize=4096)
def maximize_ih(f: float, n_grid: int = N_GRID, tol: float = R_TOL) -> UltimateCopierSolution:
    """Optimal copy Bloch length ``r_m`` and angle ``phi_m`` for overlap ``f``."""
    _check_f(f)
    f = float(f)
    if f == 0.0:
        return _solution(f, 1.0, -1.0)
    if f == 1.0:
        return UltimateCopierSolution(f=f, r_m=0.0, phi_m=math.pi, x=1.0, ih=0.0)

    s_max = math.sqrt(f)
    ss = np.linspace(0.0, s_max, n_grid)
    rs = np.sqrt(1 - ss * ss)
    rs[-1] = math.sqrt(1 - f)
    cs = _cos_phi_grid(f, rs)
    values = np.array([_ih(r, c) if np.isfinite(c) else -np.inf for r, c in zip(rs, cs)])
    k = int(np.argmax(values))

    def objective(s):
        return ih_of_r(f, math.sqrt(max(1 - s * s, 0.0)))

    # |dr/ds| = s/r can exceed 1, so tighten the tolerance on s accordingly
    s_tol = tol * rs[-1] / s_max
    lo, hi = ss[max(k - 1, 0)], ss[min(k + 1, n_grid - 1)]
    s_best, v_best = golden_section_max(objective, lo, hi, s_tol)

    # endpoints are legitimate optima; prefer them on ties
    for idx in (0, n_grid - 1):
        if values[idx] >= v_best:
            s_best, v_best = ss[idx], values[idx]
    if s_best == ss[-1]:
        r_best, c_best = rs[-1], float(cs[-1])
    else:
        r_best = math.sqrt(1 - s_best * s_best)
        c_best = cos_phi_of_r(f, r_best)
    return _solution(f, float(r_best), c_best)


def _hof(f, r, c, x):
    s = math.sqrt(max(1 - r * r, 0.0))
    return x + r * (r - 1) * c + s * math.sqrt(max(x * (x - 2 * r * c), 0.0)) - 2 * f


def _hon(r, c, x):
    return 2 * (1 + r * c - x) * (x - r * c + math.sqrt(max(x * (x - 2 * r * c), 0.0))) - r * r * (1 - c * c)


def feasibility_check(f: float, sol: UltimateCopierSolution, tol: float = 1e-8) -> FeasibilityWitness:
    """Solve the overlap constraint for ``x`` with K = C = 1 and test the purity one.

    ``x`` is found by bracketing, independently of the closed form stored in
    ``sol.x``; the two must agree.
    """
    r, c = sol.r_m, sol.cos_phi
    lo = max(0.0, 2 * r * c)
    hi = 1 + r * c
    if hi < lo - 1e-12:
        raise ConsistencyError(f"empty x range at f={f}, r={r}, cos(phi)={c}")
    g_lo, g_hi = _hof(f, r, c, lo), _hof(f, r, c, hi)
    if abs(g_lo) < 1e-14:
        x = lo
    elif abs(g_hi) < 1e-14:
        x = hi
    elif g_lo < 0 < g_hi:
        x = brentq(lambda t: _hof(f, r, c, t), lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    else:
        raise ConsistencyError(f"overlap constraint has no root in [{lo}, {hi}] (f={f}, r={r}, cos={c})")
    witness = FeasibilityWitness(x=x, residual_f=_hof(f, r, c, x), residual_n=_hon(r, c, x))
    if not witness.ok(tol) or abs(x - sol.x) > tol:
        raise ConsistencyError(
            f"no common x at f={f}: x={x!r} (closed form {sol.x!r}), "
            f"residuals {witness.residual_f:.3e}, {witness.residual_n:.3e}"
        )
    return witness


def build_basis_matrix(phi_m: float) -> np.ndarray:
    """Rows are the entangled output basis vectors in canonical (++, +-, -+, --) order.

    The matrix is written most compactly with columns ordered (++, --, +-, -+);
    it is permuted here so that it composes with the rest of the package.
    """
    if not 0.0 < phi_m <= math.pi + 1e-12:
        raise DomainError(f"phi_m must lie in (0, pi], got {phi_m!r}")
    sn, cs = math.sin(phi_m / 2), math.cos(phi_m / 2)
    u = 0.5 * np.array([
        [1 + sn, 1 - sn, cs, cs],
        [1 - sn, 1 + sn, -cs, -cs],
        [-cs, cs, 1 + sn, sn - 1],
        [-cs, cs, sn - 1, 1 + sn],
    ])
    return u[:, [0, 2, 3, 1]]
