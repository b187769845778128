"""Coin density matrix, its time averages, and the entanglement temperature.

Tracing the walker's position out of the pure state leaves a 2x2 coin
density matrix with diagonal chirality probabilities (P_L, P_R) and an
off-diagonal interference term Q.  The instantaneous matrix never
converges, but its running (Cesaro) average does; matching the eigenvalues
of the averaged matrix to the Gibbs weights of a two-level system with gap
``2 * energy_scale`` assigns the walk a temperature.

Everything here has two routes: numeric averaging of the directly iterated
walk, and exact closed forms built on :mod:`cyclewalk.spectral`.  The key
scalar is ``chi = 1/4 - det(rho_avg)``: chi = 0 is infinite temperature
(maximally mixed coin), chi = 1/4 a pure coin at zero temperature.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateSpectrumError,
    InvalidDensityError,
    ParameterError,
    UndefinedAverageError,
)
from .spectral import SpectralDecomposition, decompose
from .walk import WalkParams, WalkState, localized_initial_state, step

_TRACE_TOL = 1e-9
_PSD_TOL = 1e-12


@dataclass(frozen=True)
class CoinDensity:
    """2x2 Hermitian coin density matrix (p_left, p_right on the diagonal,
    q in the upper-right corner)."""

    p_left: float
    p_right: float
    q: complex

    def __post_init__(self) -> None:
        if abs(self.p_left + self.p_right - 1.0) > _TRACE_TOL:
            raise InvalidDensityError(
                f"trace must be 1, got {self.p_left + self.p_right}"
            )
        if self.p_left * self.p_right - abs(self.q) ** 2 < -_PSD_TOL:
            raise InvalidDensityError("density matrix is not positive semidefinite")

    @property
    def matrix(self) -> np.ndarray:
        return np.array(
            [[self.p_left, self.q], [np.conj(self.q), self.p_right]],
            dtype=np.complex128,
        )

    def eigenvalues(self) -> tuple[float, float]:
        """(larger, smaller) eigenvalue; they are 1/2 +- sqrt(chi)."""
        root = math.sqrt(chi_of_density(self))
        return 0.5 + root, 0.5 - root


@dataclass(frozen=True)
class ThermoState:
    """Thermodynamic reading of an (averaged) coin density.

    ``beta`` is the inverse temperature in units of 1/energy_scale; beta = 0
    encodes infinite temperature, in which case ``temperature`` is inf.
    """

    lambda_plus: float
    lambda_minus: float
    chi: float
    beta: float
    temperature: float


def coin_density(state: WalkState) -> CoinDensity:
    """Trace the position out of a pure walk state."""
    p_left = float(np.sum(np.abs(state.a) ** 2))
    p_right = float(np.sum(np.abs(state.b) ** 2))
    q = complex(np.sum(state.a * np.conj(state.b)))
    return CoinDensity(p_left, p_right, q)


def chi_of_density(rho: CoinDensity) -> float:
    """1/4 minus the determinant; tiny negative roundoff is clamped to 0."""
    chi = 0.25 - (rho.p_left * rho.p_right - abs(rho.q) ** 2)
    if chi < -_PSD_TOL:
        raise InvalidDensityError(f"determinant exceeds 1/4: chi = {chi}")
    return max(chi, 0.0)


def entanglement_entropy(rho: CoinDensity) -> float:
    """Von Neumann entropy -sum(lam * ln(lam)) of the coin density."""
    total = 0.0
    for lam in rho.eigenvalues():
        if lam > 0.0:
            total -= lam * math.log(lam)
    return total


def averaged_density_numeric(params: WalkParams, t: int) -> CoinDensity:
    """Average of the instantaneous coin density over steps 0..t-1.

    Runs the walk directly from the localized initial state of ``params``;
    the average needs at least one term.
    """
    if t < 1:
        raise UndefinedAverageError("time average needs t >= 1")
    state = localized_initial_state(params)
    p_left = p_right = 0.0
    q = 0.0 + 0.0j
    for _ in range(t):
        rho = coin_density(state)
        p_left += rho.p_left
        p_right += rho.p_right
        q += rho.q
        state = step(state, params.theta)
    return CoinDensity(p_left / t, p_right / t, q / t)


def _mode_oscillation(decomp: SpectralDecomposition, t) -> np.ndarray:
    """Partial-sum factor F_k(t) of the oscillating part of the average.

    F_k(t) = (1 - exp(i*(2*omega_k + pi)*t)) / (1 + exp(2i*omega_k)); for an
    array ``t`` the result has shape (N, len(t)).
    """
    denom = 1.0 + np.exp(2j * decomp.omega)
    if np.any(np.abs(denom) < 1e-9):
        raise DegenerateSpectrumError("a mode phase sits at omega_k = +-pi/2")
    num = 1.0 - np.exp(1j * np.multiply.outer(2 * decomp.omega + np.pi, t))
    return num / (denom[:, None] if num.ndim == 2 else denom)


def averaged_trajectory_closed(
    decomp: SpectralDecomposition, times: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Closed-form averaged density entries for an array of times >= 1.

    Returns ``(p_left_avg, p_right_avg, q_avg)`` arrays.  This is the exact
    finite-time average, not an asymptotic expansion: the deviation from the
    limit is 2/t times a bounded oscillating coefficient.
    """
    times = np.asarray(times, dtype=np.float64)
    if np.any(times < 1):
        raise UndefinedAverageError("time average needs t >= 1")
    limit = asymptotic_density(decomp)
    f = _mode_oscillation(decomp, times)  # (N, T)
    xi = np.einsum("k,kt->t", decomp.alpha_l * np.conj(decomp.beta_l), f).real
    sigma = 0.5 * (
        np.einsum("k,kt->t", decomp.alpha_l * np.conj(decomp.beta_r), f)
        + np.einsum("k,kt->t", decomp.beta_l * np.conj(decomp.alpha_r), f.conj())
    )
    p_left = limit.p_left + 2.0 / times * xi
    p_right = limit.p_right - 2.0 / times * xi
    q = limit.q + 2.0 / times * sigma
    return p_left, p_right, q


def averaged_density_closed(decomp: SpectralDecomposition, t: int) -> CoinDensity:
    """Exact averaged coin density over steps 0..t-1 from the closed form."""
    if t < 1:
        raise UndefinedAverageError("time average needs t >= 1")
    p_left, p_right, q = averaged_trajectory_closed(decomp, np.array([t]))
    return CoinDensity(float(p_left[0]), float(p_right[0]), complex(q[0]))


def asymptotic_density(decomp: SpectralDecomposition) -> CoinDensity:
    """Limit of the averaged coin density, from the mode coefficients."""
    p_left = float(np.sum(np.abs(decomp.alpha_l) ** 2 + np.abs(decomp.beta_l) ** 2))
    p_right = float(np.sum(np.abs(decomp.alpha_r) ** 2 + np.abs(decomp.beta_r) ** 2))
    q = complex(
        np.sum(
            np.conj(decomp.alpha_r) * decomp.alpha_l
            + np.conj(decomp.beta_r) * decomp.beta_l
        )
    )
    return CoinDensity(p_left, p_right, q)


def asymptotic_density_from_initial_modes(
    decomp: SpectralDecomposition,
) -> CoinDensity:
    """Same limit expressed through the t = 0 and t = 1 mode values.

    Algebraically identical to :func:`asymptotic_density`; kept as an
    independent cross-check of the coefficient inversion.
    """
    cos2 = 2 * np.cos(decomp.omega) ** 2
    sin_om = np.sin(decomp.omega)
    l0, l1 = decomp.c_l0, decomp.c_l1
    r0, r1 = decomp.c_r0, decomp.c_r1
    p_left = np.sum(
        (np.abs(l1) ** 2 + np.abs(l0) ** 2) / cos2
        + 1j * sin_om * (l1 * np.conj(l0) - np.conj(l1) * l0) / cos2
    )
    p_right = np.sum(
        (np.abs(r1) ** 2 + np.abs(r0) ** 2) / cos2
        + 1j * sin_om * (r1 * np.conj(r0) - np.conj(r1) * r0) / cos2
    )
    q = np.sum(
        (l0 * np.conj(r0) + l1 * np.conj(r1)) / cos2
        + 1j * sin_om * (l1 * np.conj(r0) - l0 * np.conj(r1)) / cos2
    )
    return CoinDensity(float(p_left.real), float(p_right.real), complex(q))


def f_g_h(n_sites: int, theta: float) -> tuple[float, float, float]:
    """Lattice sums controlling the localized-start asymptotics.

    f is the mean of 1/(1 - cos^2(theta) sin^2(2*pi*k/N)) over the N modes;
    g and h are the derived combinations (f - 1)/cos^2(theta) and
    2/cos^2(theta) + (1 - 2/cos^2(theta)) f.  g and h are undefined at
    theta = pi/2; the sum itself is singular only at theta = 0 on a cycle
    divisible by 4.
    """
    if n_sites < 3:
        raise ParameterError(f"n_sites must be >= 3, got {n_sites}")
    k = np.arange(n_sites)
    denom = 1.0 - np.cos(theta) ** 2 * np.sin(2 * np.pi * k / n_sites) ** 2
    if np.any(denom < 1e-15):
        raise DegenerateSpectrumError(
            "singular term in the lattice sum (theta = 0, n_sites divisible by 4)"
        )
    f = float(np.mean(1.0 / denom))
    cos_sq = math.cos(theta) ** 2
    if cos_sq < 1e-15:
        raise ParameterError("g and h are undefined at theta = pi/2")
    g = (f - 1.0) / cos_sq
    h = 2.0 / cos_sq + (1.0 - 2.0 / cos_sq) * f
    return f, g, h


def hadamard_f_closed(n_sites: int) -> float:
    """Closed form of f(N, pi/4) in powers of 1 +- sqrt(2)."""
    m = n_sites if n_sites % 2 else n_sites // 2
    plus = (1.0 + math.sqrt(2.0)) ** m
    minus = (1.0 - math.sqrt(2.0)) ** m
    return (plus + minus) / (plus - minus) * math.sqrt(2.0)


def asymptotic_density_localized(params: WalkParams) -> CoinDensity:
    """Asymptotic averaged density for a walker starting at the origin.

    Closed form in the Bloch angles (gamma, phi) and the lattice sums f, g,
    h; valid for theta in (0, pi/2).
    """
    f, g, h = f_g_h(params.n_sites, params.theta)
    th, ga, ph = params.theta, params.gamma, params.phi
    cos_sq = math.cos(th) ** 2
    p_right = (
        0.5 - 0.5 * cos_sq * math.cos(ga) - 0.25 * math.sin(ga) * math.sin(2 * th) * math.cos(ph)
    ) * f + (
        0.25 * math.sin(ga) * math.sin(2 * th) * math.cos(ph)
        - cos_sq * math.sin(ga / 2) ** 2
    ) * g
    q = 0.25 * (
        cmath.exp(-1j * ph) * math.sin(ga) * math.sin(th) ** 2
        + 0.5 * math.cos(ga) * math.sin(2 * th)
    ) * f + 0.25 * (
        cmath.exp(1j * ph) * math.sin(ga) * math.sin(th) ** 2
        + 0.5 * math.cos(ga) * math.sin(2 * th)
    ) * h
    return CoinDensity(1.0 - p_right, p_right, q)


def chi_isotherm(params: WalkParams) -> float:
    """Asymptotic chi for a localized start, directly in the Bloch angles.

    This is the isotherm map: level sets of the returned value in the
    (gamma, phi) plane are lines of constant asymptotic temperature.
    """
    f, _, h = f_g_h(params.n_sites, params.theta)
    th, ga, ph = params.theta, params.gamma, params.phi
    term1 = (h - f) ** 2 * math.sin(ph) ** 2 * math.sin(ga) ** 2 * math.sin(th) ** 4 / 16
    term2 = (
        (h + f) ** 2
        * (math.cos(ph) * math.sin(ga) * math.sin(th) + math.cos(ga) * math.cos(th)) ** 2
        / 16
    )
    return term1 + term2


def chi_reference(n_sites: int, theta: float) -> float:
    """chi of the gamma = pi start; sets the characteristic temperature T0."""
    f, _, h = f_g_h(n_sites, theta)
    return (h + f) ** 2 * math.cos(theta) ** 2 / 16


def temperature_from_chi(chi: float, e0: float) -> float:
    """Temperature of the two-level ensemble with eigenvalue split 2*sqrt(chi).

    T = 2*e0 / ln((1 + 2*sqrt(chi)) / (1 - 2*sqrt(chi))); chi = 0 gives
    infinite temperature and chi = 1/4 gives T = 0.
    """
    if not 0.0 <= chi <= 0.25:
        raise ParameterError(f"chi must lie in [0, 1/4], got {chi}")
    gap = 2.0 * math.sqrt(chi)
    if gap == 0.0:
        return math.inf
    if gap >= 1.0:
        return 0.0
    return 2.0 * e0 / math.log((1.0 + gap) / (1.0 - gap))


def transient_temperature(
    rho_avg: CoinDensity, e0: float, *, convention: str = "tanh"
) -> ThermoState:
    """Thermodynamic reading of an averaged coin density.

    With the default ``"tanh"`` convention, tanh(beta * e0) equals the
    eigenvalue split of ``rho_avg`` and the finite-time temperature
    converges to :func:`temperature_from_chi` of the asymptotic chi.  The
    ``"literal"`` convention instead uses T = e0 / ln(lambda+/lambda-),
    which differs by a factor of 2.
    """
    if convention not in ("tanh", "literal"):
        raise ParameterError(f"unknown convention {convention!r}")
    chi = chi_of_density(rho_avg)
    lam_plus, lam_minus = 0.5 + math.sqrt(chi), 0.5 - math.sqrt(chi)
    gap = lam_plus - lam_minus
    if gap >= 1.0:
        beta = math.inf
    else:
        beta = math.atanh(gap) / e0
        if convention == "literal":
            beta *= 2.0
    temperature = math.inf if beta == 0.0 else 1.0 / beta
    return ThermoState(
        lambda_plus=lam_plus,
        lambda_minus=lam_minus,
        chi=chi,
        beta=beta,
        temperature=temperature,
    )


def decompose_localized(params: WalkParams) -> SpectralDecomposition:
    """Spectral solution for the localized initial state of ``params``."""
    return decompose(localized_initial_state(params), params.theta)
