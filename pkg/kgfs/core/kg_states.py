"""
Klein-Gordon bound states in a Coulomb well.

State scalars are computed in natural units (hbar c = 1, m0 c^2 = 1) and
converted to the system's units on the way out. Densities are evaluated in
the dimensionless radius x = r / L, where L is the density's length scale,
so their shape depends on (gamma, n, l) only.
"""
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple

import numpy as np

from .errors import DomainError, SupercriticalChargeError
from .specfun import (
    ArrayLike,
    LaguerreParams,
    laguerre_orthonormal,
    laguerre_orthonormal_derivative,
    laguerre_zeros,
    power_exp,
    sph_harmonic_sq,
)

logger = logging.getLogger(__name__)

PION_MASS_ME = 273.13
FINE_STRUCTURE = 1.0 / 137.035999
_SPECTROSCOPIC = "spdfghiklmnoqrtuv"


class DensityModel(str, Enum):
    KG_LI = "KG-LI"
    KG_NLI = "KG-NLI"
    SCH = "SCH"


@dataclass(frozen=True)
class QuantumNumbers:
    """(n, l, m) of a stationary state."""

    n: int
    l: int
    m: int = 0

    def __post_init__(self):
        for name in ("n", "l", "m"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value:
                raise DomainError(f"{name} must be an integer, got {value!r}")
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got n={self.n}")
        if not 0 <= self.l <= self.n - 1:
            raise DomainError(f"l must satisfy 0 <= l <= n-1, got n={self.n}, l={self.l}")
        if abs(self.m) > self.l:
            raise DomainError(f"|m| must not exceed l, got l={self.l}, m={self.m}")

    @property
    def laguerre_degree(self) -> int:
        return self.n - self.l - 1

    @property
    def label(self) -> str:
        letter = _SPECTROSCOPIC[self.l] if self.l < len(_SPECTROSCOPIC) else f"[l={self.l}]"
        return f"{self.n}{letter}"


@dataclass(frozen=True)
class CoulombSystem:
    """A point nucleus of charge Z binding a spinless particle of rest energy mass_c2.

    mass_c2 is in the system's energy unit and hbar_c in energy * length,
    which fixes the length unit of every reported quantity.
    """

    Z: float
    mass_c2: float
    alpha_fs: float = FINE_STRUCTURE
    hbar_c: float = 1.0
    units: str = "natural"

    def __post_init__(self):
        for name in ("Z", "mass_c2", "alpha_fs", "hbar_c"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be a positive number, got {value!r}")

    @classmethod
    def atomic(
        cls, Z: float, mass_me: float = PION_MASS_ME, alpha_fs: float = FINE_STRUCTURE
    ) -> "CoulombSystem":
        """Hartree energies and bohr lengths: m0 c^2 = mass_me / alpha^2, hbar c = 1 / alpha."""
        return cls(Z, mass_me / alpha_fs**2, alpha_fs, 1.0 / alpha_fs, "atomic")

    @classmethod
    def natural(cls, Z: float, alpha_fs: float = FINE_STRUCTURE) -> "CoulombSystem":
        """hbar c = m0 c^2 = 1; lengths in reduced Compton wavelengths."""
        return cls(Z, 1.0, alpha_fs, 1.0, "natural")

    @property
    def gamma(self) -> float:
        return self.Z * self.alpha_fs

    @property
    def compton_length(self) -> float:
        """Reduced Compton wavelength hbar c / m0 c^2 in system length units."""
        return self.hbar_c / self.mass_c2


@dataclass(frozen=True)
class KGBoundState:
    """Derived record of one Klein-Gordon bound state.

    energy, beta and norm are in system units; epsilon_ratio = energy / m0c^2
    and beta_natural = beta * hbar c / m0c^2 are dimensionless. lam is
    evaluated from energy and beta, independently of l_eff.
    """

    qn: QuantumNumbers
    system: CoulombSystem
    l_eff: float
    energy: float
    beta: float
    lam: float
    norm: float
    epsilon_ratio: float
    beta_natural: float

    @property
    def binding_energy(self) -> float:
        return kg_binding_energy(self.qn, self.system)

    @property
    def laguerre_params(self) -> LaguerreParams:
        return LaguerreParams(self.qn.laguerre_degree, 2.0 * self.l_eff + 1.0)


@dataclass(frozen=True)
class ProbabilityDensity:
    """Position density D(r) |Y_lm(theta)|^2 of one state under one model.

    The radial part is held in the scaled variable x = r / length_scale as

        x f(x) = amplitude_norm * x^(l_eff+1) e^(-x/2) Lt(x) * sqrt(W(x)),
        W(x)   = energy_ratio + coupling / x,

    with Lt the orthonormal Laguerre polynomial of degree n-l-1 and
    parameter 2 l_eff + 1, and D_x = f^2. coupling = 0 gives the unweighted
    forms (KG-NLI, SCH).
    """

    model: DensityModel
    qn: QuantumNumbers
    Z: float
    length_scale: float
    compton_length: float
    l_eff: float
    amplitude_norm: float
    energy_ratio: float = 1.0
    coupling: float = 0.0
    normalized: bool = True
    params: LaguerreParams = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "params", LaguerreParams(self.qn.laguerre_degree, 2.0 * self.l_eff + 1.0)
        )

    @property
    def weighted(self) -> bool:
        return self.coupling > 0.0

    @property
    def origin_exponent(self) -> float:
        """p such that D(r) ~ r^p as r -> 0."""
        return 2.0 * self.l_eff - 1.0 if self.weighted else 2.0 * self.l_eff

    @property
    def nodes(self) -> np.ndarray:
        """Radial nodes in the scaled variable x."""
        return laguerre_zeros(self.params)

    @property
    def label(self) -> str:
        return f"{self.model.value} Z={self.Z:g} {self.qn.label} m={self.qn.m}"

    def _laguerre(self, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        return (
            np.asarray(laguerre_orthonormal(self.params, x)),
            np.asarray(laguerre_orthonormal_derivative(self.params, x)),
        )

    def scaled_amplitude(self, x: ArrayLike) -> ArrayLike:
        """x f(x); its square is the radial probability per unit x."""
        xs = np.asarray(x, dtype=float)
        lag = np.asarray(laguerre_orthonormal(self.params, xs))
        if self.weighted:
            out = (
                self.amplitude_norm
                * power_exp(self.l_eff + 0.5, xs)
                * np.sqrt(self.energy_ratio * xs + self.coupling)
                * lag
            )
        else:
            out = self.amplitude_norm * power_exp(self.l_eff + 1.0, xs) * lag
        return float(out) if np.ndim(x) == 0 else out

    def scaled_amplitude_derivative(self, x: ArrayLike) -> ArrayLike:
        """x f'(x), from the analytic product rule."""
        xs = np.asarray(x, dtype=float)
        lag, dlag = self._laguerre(xs)
        poly = (self.l_eff - 0.5 * xs) * lag + xs * dlag
        if self.weighted:
            root = np.sqrt(self.energy_ratio * xs + self.coupling)
            out = (
                self.amplitude_norm
                * power_exp(self.l_eff - 0.5, xs)
                * (root * poly - 0.5 * self.coupling * lag / root)
            )
        else:
            out = self.amplitude_norm * power_exp(self.l_eff, xs) * poly
        return float(out) if np.ndim(x) == 0 else out

    def scaled_radial(self, x: ArrayLike) -> ArrayLike:
        xs = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            out = (np.asarray(self.scaled_amplitude(xs)) / xs) ** 2
        return float(out) if np.ndim(x) == 0 else out

    def scaled_radial_derivative(self, x: ArrayLike) -> ArrayLike:
        xs = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            out = (
                2.0
                * np.asarray(self.scaled_amplitude(xs))
                * np.asarray(self.scaled_amplitude_derivative(xs))
                / (xs * xs)
            )
        return float(out) if np.ndim(x) == 0 else out

    def radial(self, r: ArrayLike) -> ArrayLike:
        """D(r) in inverse length^3 of the system's units."""
        L = self.length_scale
        out = np.asarray(self.scaled_radial(np.asarray(r, dtype=float) / L)) / L**3
        return float(out) if np.ndim(r) == 0 else out

    def radial_derivative(self, r: ArrayLike) -> ArrayLike:
        L = self.length_scale
        out = np.asarray(self.scaled_radial_derivative(np.asarray(r, dtype=float) / L)) / L**4
        return float(out) if np.ndim(r) == 0 else out

    def angular(self, theta: ArrayLike) -> ArrayLike:
        return sph_harmonic_sq(self.qn.l, self.qn.m, theta)

    def density(self, r: ArrayLike, theta: ArrayLike) -> ArrayLike:
        return np.asarray(self.radial(r)) * np.asarray(self.angular(theta))


def effective_l(l: int, gamma: float) -> float:
    """l' = sqrt((l+1/2)^2 - gamma^2) - 1/2, in a form exact as gamma -> 0."""
    if gamma < 0:
        raise DomainError(f"gamma must be non-negative, got {gamma!r}")
    half = l + 0.5
    if gamma >= half:
        raise SupercriticalChargeError(gamma, l)
    return l - gamma * gamma / (math.sqrt(half * half - gamma * gamma) + half)


def _natural_scalars(qn: QuantumNumbers, gamma: float) -> Tuple[float, float, float, float]:
    """(l', n-l+l', epsilon/m0c^2, beta hbar c/m0c^2)."""
    l_eff = effective_l(qn.l, gamma)
    lam = qn.n - qn.l + l_eff
    root = math.hypot(lam, gamma)
    return l_eff, lam, lam / root, 2.0 * gamma / root


def kg_energy(qn: QuantumNumbers, system: CoulombSystem) -> float:
    """epsilon = m0c^2 / sqrt(1 + (gamma / (n - l + l'))^2)."""
    _, _, eps_hat, _ = _natural_scalars(qn, system.gamma)
    return system.mass_c2 * eps_hat


def kg_binding_energy(qn: QuantumNumbers, system: CoulombSystem) -> float:
    """epsilon - m0c^2 without the cancellation of the direct difference."""
    gamma = system.gamma
    _, lam, _, _ = _natural_scalars(qn, gamma)
    root = math.hypot(lam, gamma)
    return -system.mass_c2 * gamma * gamma / (root * (lam + root))


def kg_state(qn: QuantumNumbers, system: CoulombSystem) -> KGBoundState:
    gamma = system.gamma
    l_eff, lam_n, eps_hat, beta_hat = _natural_scalars(qn, gamma)
    energy = system.mass_c2 * eps_hat
    beta = beta_hat * system.mass_c2 / system.hbar_c
    lam = 2.0 * energy * gamma / (system.hbar_c * beta)
    norm = math.sqrt(system.mass_c2 * gamma / system.hbar_c / (lam_n * lam_n + gamma * gamma))
    logger.debug(
        "KG state Z=%g %s: l'=%.12g eps/mc2=%.12g beta=%.6g",
        system.Z, qn.label, l_eff, eps_hat, beta,
    )
    return KGBoundState(
        qn=qn,
        system=system,
        l_eff=l_eff,
        energy=energy,
        beta=beta,
        lam=lam,
        norm=norm,
        epsilon_ratio=eps_hat,
        beta_natural=beta_hat,
    )


def radial_u(state: KGBoundState, s: ArrayLike) -> ArrayLike:
    """u(s) = N s^(l'+1) e^(-s/2) Lt_(n-l-1)^(2l'+1)(s)."""
    ss = np.asarray(s, dtype=float)
    out = (
        state.norm
        * np.asarray(power_exp(state.l_eff + 1.0, ss))
        * np.asarray(laguerre_orthonormal(state.laguerre_params, ss))
    )
    return float(out) if np.ndim(s) == 0 else out


def radial_u_derivative(state: KGBoundState, s: ArrayLike) -> ArrayLike:
    """du/ds."""
    ss = np.asarray(s, dtype=float)
    params = state.laguerre_params
    lag = np.asarray(laguerre_orthonormal(params, ss))
    dlag = np.asarray(laguerre_orthonormal_derivative(params, ss))
    out = (
        state.norm
        * np.asarray(power_exp(state.l_eff, ss))
        * ((state.l_eff + 1.0 - 0.5 * ss) * lag + ss * dlag)
    )
    return float(out) if np.ndim(s) == 0 else out


def radial_nodes(state: KGBoundState) -> np.ndarray:
    """Positive zeros of u in the variable s = beta r."""
    return laguerre_zeros(state.laguerre_params)


def _kg_density(state: KGBoundState, weighted: bool) -> ProbabilityDensity:
    gamma = state.system.gamma
    lam_n = state.qn.n - state.qn.l + state.l_eff
    amplitude_norm = math.sqrt(gamma / ((lam_n * lam_n + gamma * gamma) * state.beta_natural))
    return ProbabilityDensity(
        model=DensityModel.KG_LI if weighted else DensityModel.KG_NLI,
        qn=state.qn,
        Z=state.system.Z,
        length_scale=1.0 / state.beta,
        compton_length=state.system.compton_length,
        l_eff=state.l_eff,
        amplitude_norm=amplitude_norm,
        energy_ratio=state.epsilon_ratio if weighted else 1.0,
        coupling=gamma * state.beta_natural if weighted else 0.0,
        normalized=weighted,
    )


def density_li(state: KGBoundState) -> ProbabilityDensity:
    """Lorentz-invariant charge density divided by the charge.

    D(r) = [epsilon + Z e^2 / r] / m0c^2 * (u(beta r) / r)^2.
    """
    return _kg_density(state, weighted=True)


def density_nli(state: KGBoundState) -> ProbabilityDensity:
    """|Psi|^2 with the same normalization constant; not unit-normalized."""
    return _kg_density(state, weighted=False)
