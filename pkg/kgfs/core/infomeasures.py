"""
Information-theoretic functionals of a ProbabilityDensity.

Every 3-D functional factorises into a radial integral in the scaled
variable x = r / L and an angular integral over theta (the densities do
not depend on phi). Radial integrals are split at the radial nodes so each
piece has at most endpoint singularities.

Integrals whose integrand behaves like x^q at the origin with
q <= SINGULAR_EXPONENT_LIMIT are taken from an inner cutoff instead of
zero; the cutoff is given in reduced Compton wavelengths of the particle
and the report records that it was applied. With no cutoff such integrals
raise DivergenceError.
"""
import logging
import math
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Optional, Tuple

import numpy as np
from scipy.special import roots_legendre

from .errors import DivergenceError, DomainError
from .kg_states import DensityModel, ProbabilityDensity
from .quadrature import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    QuadratureResult,
    integrate_interval,
    integrate_semi_infinite,
)
from .specfun import (
    legendre_zeros,
    sph_harmonic_amplitude,
    sph_harmonic_amplitude_derivative,
)

logger = logging.getLogger(__name__)

SINGULAR_EXPONENT_LIMIT = -0.9
DEFAULT_INNER_CUTOFF = 1e-3
_LN_4PI = math.log(4.0 * math.pi)


@dataclass(frozen=True)
class InfoReport:
    """Information measures of one state under one model, in the system's units."""

    model: DensityModel
    Z: float
    n: int
    l: int
    m: int
    shannon_S: float
    fisher_I: float
    entropic_power_J: float
    disequilibrium: float
    c_fs: float
    c_lmc: float
    shannon_radial: float
    shannon_angular: float
    fisher_radial: float
    fisher_angular: float
    inverse_r2: float
    epsilon_over_mc2: Optional[float] = None
    binding_energy: Optional[float] = None
    fisher_regularized: bool = False
    diseq_regularized: bool = False

    @property
    def labels(self) -> Tuple[float, int, int, int]:
        return (self.Z, self.n, self.l, self.m)

    def to_dict(self) -> dict:
        data = asdict(self)
        data["model"] = self.model.value
        return data


def _sum_results(results: Iterable[QuadratureResult]) -> QuadratureResult:
    value = error = 0.0
    evaluations = 0
    for r in results:
        value += r.value
        error += r.error_estimate
        evaluations += r.evaluations
    return QuadratureResult(value, error, evaluations)


def integrate_radial(
    d: ProbabilityDensity,
    integrand: Callable[[np.ndarray], np.ndarray],
    config: Optional[QuadratureConfig] = None,
    lower: float = 0.0,
) -> QuadratureResult:
    """Integrate over x in [lower, inf), split at the radial nodes of d."""
    config = config or DEFAULT_CONFIG
    breaks = [float(z) for z in d.nodes if z > lower]
    edges = [lower] + breaks
    pieces = [integrate_interval(integrand, a, b, config) for a, b in zip(edges, edges[1:])]
    pieces.append(integrate_semi_infinite(integrand, config, lower=edges[-1]))
    return _sum_results(pieces)


def _integrate_theta(
    l: int, m: int, integrand: Callable[[np.ndarray], np.ndarray], config: QuadratureConfig
) -> float:
    edges = [0.0] + [float(t) for t in legendre_zeros(l, m)] + [math.pi]
    return _sum_results(
        integrate_interval(integrand, a, b, config) for a, b in zip(edges, edges[1:])
    ).value


def _origin_lower(
    d: ProbabilityDensity, exponent: float, inner_cutoff: Optional[float], what: str
) -> Tuple[float, bool]:
    """Lower x-limit for an integrand ~ x^exponent at the origin."""
    if exponent > SINGULAR_EXPONENT_LIMIT:
        return 0.0, False
    if not inner_cutoff:
        raise DivergenceError(
            f"{what} of {d.label} diverges: integrand ~ r^{exponent:.4g} at the origin "
            "(set a positive inner cutoff to regularize)"
        )
    lower = inner_cutoff * d.compton_length / d.length_scale
    logger.info(
        "%s of %s regularized: integrand ~ r^%.4g, integrating from r = %g hbar/(m0 c)",
        what, d.label, exponent, inner_cutoff,
    )
    return lower, True


def _require_normalized(d: ProbabilityDensity) -> None:
    if not d.normalized:
        raise DomainError(f"{d.label} is not unit-normalized")


def total_probability(
    d: ProbabilityDensity, config: Optional[QuadratureConfig] = None
) -> float:
    """Integral of D(r) r^2 dr (the angular factor integrates to one)."""
    return integrate_radial(d, lambda x: np.asarray(d.scaled_amplitude(x)) ** 2, config).value


def radial_moment(
    d: ProbabilityDensity, k: float, config: Optional[QuadratureConfig] = None
) -> float:
    """<r^k> = integral of r^k D(r) r^2 dr."""
    if k + d.origin_exponent + 2.0 <= -1.0:
        raise DivergenceError(f"<r^{k}> diverges for {d.label}")
    value = integrate_radial(
        d, lambda x: x**k * np.asarray(d.scaled_amplitude(x)) ** 2, config
    ).value
    return value * d.length_scale**k


# Angular factors


def angular_entropy(l: int, m: int, config: Optional[QuadratureConfig] = None) -> float:
    """-integral of |Y_lm|^2 ln |Y_lm|^2 over the sphere."""
    if l == 0:
        return _LN_4PI
    config = config or DEFAULT_CONFIG

    def integrand(theta: np.ndarray) -> np.ndarray:
        y2 = np.asarray(sph_harmonic_amplitude(l, m, theta)) ** 2
        with np.errstate(divide="ignore", invalid="ignore"):
            plogp = np.where(y2 > 0, y2 * np.log(y2), 0.0)
        return -2.0 * math.pi * plogp * np.sin(theta)

    return _integrate_theta(l, m, integrand, config)


def angular_fisher(l: int, m: int) -> float:
    """Closed form of integral (d|Y|^2/dtheta)^2 / |Y|^2 dOmega."""
    return 4.0 * l * (l + 1) - 2.0 * abs(m) * (2 * l + 1)


def angular_fisher_quadrature(
    l: int, m: int, config: Optional[QuadratureConfig] = None
) -> float:
    """angular_fisher by quadrature: 8 pi integral of (dy/dtheta)^2 sin(theta)."""
    config = config or DEFAULT_CONFIG

    def integrand(theta: np.ndarray) -> np.ndarray:
        dy = np.asarray(sph_harmonic_amplitude_derivative(l, m, theta))
        return 8.0 * math.pi * dy * dy * np.sin(theta)

    return _integrate_theta(l, m, integrand, config)


def angular_disequilibrium(l: int, m: int) -> float:
    """Integral of |Y_lm|^4 dOmega; exact Gauss-Legendre in cos(theta)."""
    nodes, weights = roots_legendre(2 * l + 2)
    y = np.asarray(sph_harmonic_amplitude(l, m, np.arccos(nodes)))
    return float(2.0 * math.pi * np.sum(weights * y**4))


# Radial pieces (scaled variable)


def _shannon_radial_scaled(d: ProbabilityDensity, config: QuadratureConfig) -> float:
    def integrand(x: np.ndarray) -> np.ndarray:
        a = np.abs(np.asarray(d.scaled_amplitude(x)))
        with np.errstate(divide="ignore", invalid="ignore"):
            log_d = 2.0 * np.log(a) - 2.0 * np.log(x)
            return np.where(a > 0, -a * a * log_d, 0.0)

    return integrate_radial(d, integrand, config).value


@dataclass(frozen=True)
class _FisherParts:
    radial: float
    inverse_r2: float
    angular: float
    regularized: bool


def _fisher_parts(
    d: ProbabilityDensity, config: QuadratureConfig, inner_cutoff: Optional[float]
) -> _FisherParts:
    """Radial Fisher term and <r^-2> in the scaled variable."""
    lower, regularized = _origin_lower(
        d, d.origin_exponent, inner_cutoff, "Fisher information"
    )
    radial = 4.0 * integrate_radial(
        d, lambda x: np.asarray(d.scaled_amplitude_derivative(x)) ** 2, config, lower
    ).value

    coefficient = angular_fisher(d.qn.l, d.qn.m)
    inverse_r2 = 0.0
    if coefficient != 0.0:
        inverse_r2 = integrate_radial(
            d, lambda x: (np.asarray(d.scaled_amplitude(x)) / x) ** 2, config, lower
        ).value
    return _FisherParts(radial, inverse_r2, coefficient, regularized)


def _disequilibrium_scaled(
    d: ProbabilityDensity, config: QuadratureConfig, inner_cutoff: Optional[float]
) -> Tuple[float, bool]:
    lower, regularized = _origin_lower(
        d, 2.0 * d.origin_exponent + 2.0, inner_cutoff, "Disequilibrium"
    )
    radial = integrate_radial(
        d, lambda x: (np.asarray(d.scaled_amplitude(x)) ** 2 / x) ** 2, config, lower
    ).value
    return radial * angular_disequilibrium(d.qn.l, d.qn.m), regularized


# Public functionals


def shannon_entropy(
    d: ProbabilityDensity, config: Optional[QuadratureConfig] = None
) -> float:
    """S = -<ln rho>, in nats, for lengths in the system's units."""
    _require_normalized(d)
    config = config or DEFAULT_CONFIG
    radial = _shannon_radial_scaled(d, config) + 3.0 * math.log(d.length_scale)
    return radial + angular_entropy(d.qn.l, d.qn.m, config)


def fisher_information(
    d: ProbabilityDensity,
    config: Optional[QuadratureConfig] = None,
    inner_cutoff: Optional[float] = DEFAULT_INNER_CUTOFF,
) -> float:
    """I = integral of |grad rho|^2 / rho d^3r = I_radial + <r^-2> A_lm."""
    _require_normalized(d)
    parts = _fisher_parts(d, config or DEFAULT_CONFIG, inner_cutoff)
    return (parts.radial + parts.inverse_r2 * parts.angular) / d.length_scale**2


def fisher_information_nested(
    d: ProbabilityDensity,
    config: Optional[QuadratureConfig] = None,
    inner_cutoff: Optional[float] = DEFAULT_INNER_CUTOFF,
) -> float:
    """I from nested 1-D quadrature of the full (r, theta) integrand.

    Slow; exists to validate the separable form used by fisher_information.
    """
    _require_normalized(d)
    config = config or DEFAULT_CONFIG
    l, m = d.qn.l, d.qn.m
    lower, _ = _origin_lower(d, d.origin_exponent, inner_cutoff, "Fisher information")

    def inner(x: float) -> float:
        D = float(d.scaled_radial(x))
        dD = float(d.scaled_radial_derivative(x))

        def integrand(theta: np.ndarray) -> np.ndarray:
            y = np.asarray(sph_harmonic_amplitude(l, m, theta))
            dy = np.asarray(sph_harmonic_amplitude_derivative(l, m, theta))
            rho = D * y * y
            d_r = dD * y * y
            d_theta = D * 2.0 * y * dy
            with np.errstate(divide="ignore", invalid="ignore"):
                kernel = np.where(rho > 0, (d_r**2 + d_theta**2 / (x * x)) / rho, 0.0)
            return 2.0 * math.pi * kernel * np.sin(theta)

        return _integrate_theta(l, m, integrand, config)

    def outer(xs: np.ndarray) -> np.ndarray:
        return np.array([x * x * inner(float(x)) for x in xs])

    return integrate_radial(d, outer, config, lower).value / d.length_scale**2


def entropic_power(S: float) -> float:
    """J = exp(2S/3) / (2 pi e)."""
    return math.exp(2.0 * S / 3.0) / (2.0 * math.pi * math.e)


def fisher_shannon(I: float, J: float) -> float:
    if I < 0 or not J > 0:
        raise DomainError(f"fisher_shannon requires I >= 0 and J > 0, got I={I}, J={J}")
    return I * J


def disequilibrium(
    d: ProbabilityDensity,
    config: Optional[QuadratureConfig] = None,
    inner_cutoff: Optional[float] = DEFAULT_INNER_CUTOFF,
) -> float:
    """<rho> = integral of rho^2 d^3r."""
    _require_normalized(d)
    value, _ = _disequilibrium_scaled(d, config or DEFAULT_CONFIG, inner_cutoff)
    return value / d.length_scale**3


def lmc_complexity(diseq: float, S: float) -> float:
    """<rho> exp(S)."""
    if not diseq > 0:
        raise DomainError(f"disequilibrium must be positive, got {diseq}")
    return math.exp(math.log(diseq) + S)


def zeta_fs(c_sch: float, c_kg: float) -> float:
    """1 - C_SCH / C_KG."""
    if not (c_sch > 0 and c_kg > 0):
        raise DomainError(f"complexities must be positive, got {c_sch}, {c_kg}")
    return 1.0 - c_sch / c_kg


def zeta_lmc(c_sch: float, c_kg: float) -> float:
    """zeta_fs applied to LMC complexities."""
    return zeta_fs(c_sch, c_kg)


def info_report(
    d: ProbabilityDensity,
    config: Optional[QuadratureConfig] = None,
    inner_cutoff: Optional[float] = DEFAULT_INNER_CUTOFF,
    epsilon_over_mc2: Optional[float] = None,
    binding_energy: Optional[float] = None,
) -> InfoReport:
    """All measures of one density, sharing each radial integral between them."""
    _require_normalized(d)
    config = config or DEFAULT_CONFIG
    L = d.length_scale
    l, m = d.qn.l, d.qn.m

    s_radial = _shannon_radial_scaled(d, config) + 3.0 * math.log(L)
    s_angular = angular_entropy(l, m, config)
    S = s_radial + s_angular

    parts = _fisher_parts(d, config, inner_cutoff)
    fisher_radial = parts.radial / L**2
    inverse_r2 = parts.inverse_r2 / L**2
    fisher_angular = inverse_r2 * parts.angular
    I = fisher_radial + fisher_angular

    diseq_scaled, diseq_regularized = _disequilibrium_scaled(d, config, inner_cutoff)
    diseq = diseq_scaled / L**3

    J = entropic_power(S)
    return InfoReport(
        model=d.model,
        Z=d.Z,
        n=d.qn.n,
        l=l,
        m=m,
        shannon_S=S,
        fisher_I=I,
        entropic_power_J=J,
        disequilibrium=diseq,
        c_fs=fisher_shannon(I, J),
        c_lmc=lmc_complexity(diseq, S),
        shannon_radial=s_radial,
        shannon_angular=s_angular,
        fisher_radial=fisher_radial,
        fisher_angular=fisher_angular,
        inverse_r2=inverse_r2,
        epsilon_over_mc2=epsilon_over_mc2,
        binding_energy=binding_energy,
        fisher_regularized=parts.regularized,
        diseq_regularized=diseq_regularized,
    )
