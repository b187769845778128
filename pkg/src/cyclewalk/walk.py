"""Direct unitary evolution of a coined quantum walk on an N-cycle.

The walker lives on N sites with periodic boundary and carries a two-state
coin (chirality).  A state is a pair of complex amplitude vectors
``(a, b)``: ``a[k]`` is the left-chirality amplitude at site ``k`` and
``b[k]`` the right-chirality one.  One time step rotates the coin by the
bias angle ``theta`` and shifts the two chirality channels in opposite
directions around the cycle:

    a'[k] =  a[k+1] cos(theta) + b[k+1] sin(theta)
    b'[k] =  a[k-1] sin(theta) - b[k-1] cos(theta)

with site indices taken modulo N.  The map is unitary, so the total
probability is conserved to roundoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError

# Hard ceiling on iterated evolution; asymptotics are reached far earlier.
MAX_STEPS = 10**6


@dataclass(frozen=True)
class WalkParams:
    """Walk configuration: cycle size, coin bias, and initial Bloch angles.

    Parameters
    ----------
    n_sites:
        Number of cycle sites, at least 3.
    theta:
        Coin bias in [0, pi/2]; pi/4 is the unbiased (Hadamard) coin.
    gamma, phi:
        Bloch-sphere angles of the initial coin state, gamma in [0, pi]
        and phi in [0, 2*pi).
    energy_scale:
        Positive energy gap of the two-level thermometer Hamiltonian.
    """

    n_sites: int
    theta: float
    gamma: float = 0.0
    phi: float = 0.0
    energy_scale: float = 1.0

    def __post_init__(self) -> None:
        if self.n_sites < 3:
            raise ParameterError(f"n_sites must be >= 3, got {self.n_sites}")
        if not 0.0 <= self.theta <= math.pi / 2:
            raise ParameterError(f"theta must lie in [0, pi/2], got {self.theta}")
        if not 0.0 <= self.gamma <= math.pi:
            raise ParameterError(f"gamma must lie in [0, pi], got {self.gamma}")
        if not 0.0 <= self.phi < 2 * math.pi:
            raise ParameterError(f"phi must lie in [0, 2*pi), got {self.phi}")
        if not self.energy_scale > 0:
            raise ParameterError(
                f"energy_scale must be positive, got {self.energy_scale}"
            )


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.asarray(arr, dtype=np.complex128).copy()
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class WalkState:
    """Immutable walk state: amplitude vectors and the current step count."""

    a: np.ndarray
    b: np.ndarray
    time: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _frozen(self.a))
        object.__setattr__(self, "b", _frozen(self.b))
        if self.a.shape != self.b.shape or self.a.ndim != 1:
            raise ParameterError("amplitude vectors must be 1-d and equal length")
        if self.time < 0:
            raise ParameterError("time must be non-negative")

    @property
    def n_sites(self) -> int:
        return self.a.size

    @property
    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.a) ** 2 + np.abs(self.b) ** 2))


def localized_initial_state(params: WalkParams) -> WalkState:
    """Walker at the origin with coin state (cos(g/2), e^{i*phi} sin(g/2)).

    The Bloch angles (gamma, phi) of ``params`` pick the initial coin
    orientation; all amplitude is on site 0.
    """
    a = np.zeros(params.n_sites, dtype=np.complex128)
    b = np.zeros(params.n_sites, dtype=np.complex128)
    a[0] = math.cos(params.gamma / 2)
    b[0] = np.exp(1j * params.phi) * math.sin(params.gamma / 2)
    return WalkState(a, b, time=0)


def step(state: WalkState, theta: float) -> WalkState:
    """Advance the walk by one unitary step with coin bias ``theta``."""
    c, s = math.cos(theta), math.sin(theta)
    a_new = np.roll(state.a, -1) * c + np.roll(state.b, -1) * s
    b_new = np.roll(state.a, 1) * s - np.roll(state.b, 1) * c
    return WalkState(a_new, b_new, time=state.time + 1)


def evolve(state: WalkState, theta: float, steps: int) -> WalkState:
    """Apply :func:`step` exactly ``steps`` times."""
    if steps < 0:
        raise ParameterError(f"steps must be non-negative, got {steps}")
    if steps > MAX_STEPS:
        raise ParameterError(f"steps exceeds the {MAX_STEPS} iteration ceiling")
    for _ in range(steps):
        state = step(state, theta)
    return state
