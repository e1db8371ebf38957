"""
Special functions behind the Coulomb eigenfunctions.

Generalized Laguerre polynomials at real parameter, their orthonormal
variant, fully normalized spherical-harmonic profiles, and a couple of
small helpers the density code shares. All functions are pure and
vectorised over numpy arrays; scalar input gives a float back.
"""
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np
from numpy.polynomial import legendre as npleg
from scipy import special

from .errors import DomainError, RangeError

ArrayLike = Union[float, np.ndarray]

_LOG_FLOAT_MAX = float(np.log(np.finfo(float).max))
_INV_SQRT_4PI = 1.0 / np.sqrt(4.0 * np.pi)


def _finish(values: np.ndarray, like: ArrayLike) -> ArrayLike:
    return float(values) if np.ndim(like) == 0 else values


def log_gamma(x: float) -> float:
    """Return ln Gamma(x) for x > 0."""
    if not np.isfinite(x) or x <= 0:
        raise DomainError(f"log_gamma requires a finite x > 0, got {x!r}")
    return float(special.gammaln(x))


@dataclass(frozen=True)
class LaguerreParams:
    """Degree k and parameter alpha of L_k^alpha."""

    degree: int
    alpha: float

    def __post_init__(self):
        if int(self.degree) != self.degree or self.degree < 0:
            raise DomainError(f"Laguerre degree must be an integer >= 0, got {self.degree!r}")
        if not np.isfinite(self.alpha) or self.alpha <= -1.0:
            raise DomainError(f"Laguerre alpha must be > -1, got {self.alpha!r}")

    @property
    def log_norm(self) -> float:
        """ln sqrt(Gamma(k+alpha+1)/k!), the log of the orthonormalising factor."""
        return 0.5 * (log_gamma(self.degree + self.alpha + 1.0) - log_gamma(self.degree + 1.0))


def laguerre(params: LaguerreParams, x: ArrayLike) -> ArrayLike:
    """Evaluate L_k^alpha(x) by upward three-term recurrence in the degree."""
    xs = np.asarray(x, dtype=float)
    k, a = params.degree, params.alpha

    prev = np.ones_like(xs)
    if k == 0:
        return _finish(prev, x)
    cur = 1.0 + a - xs
    for j in range(2, k + 1):
        prev, cur = cur, ((2 * j - 1 + a - xs) * cur - (j - 1 + a) * prev) / j
    return _finish(cur, x)


def _orthonormal_factor(params: LaguerreParams) -> float:
    log_norm = params.log_norm
    if abs(log_norm) > _LOG_FLOAT_MAX:
        raise RangeError(
            f"Laguerre norm overflows for degree={params.degree}, alpha={params.alpha}"
        )
    return float(np.exp(-log_norm))


def laguerre_orthonormal(params: LaguerreParams, x: ArrayLike) -> ArrayLike:
    """L_k^alpha(x) / sqrt(Gamma(k+alpha+1)/k!), orthonormal for x^alpha e^-x."""
    factor = _orthonormal_factor(params)
    return _finish(np.asarray(laguerre(params, x)) * factor, x)


def laguerre_orthonormal_derivative(params: LaguerreParams, x: ArrayLike) -> ArrayLike:
    """d/dx of laguerre_orthonormal, from dL_k^a/dx = -L_{k-1}^{a+1}."""
    xs = np.asarray(x, dtype=float)
    if params.degree == 0:
        return _finish(np.zeros_like(xs), x)
    factor = _orthonormal_factor(params)
    lowered = LaguerreParams(params.degree - 1, params.alpha + 1.0)
    return _finish(-np.asarray(laguerre(lowered, xs)) * factor, x)


def laguerre_zeros(params: LaguerreParams) -> np.ndarray:
    """Positive zeros of L_k^alpha in increasing order (empty for k = 0)."""
    if params.degree == 0:
        return np.empty(0)
    nodes, _ = special.roots_genlaguerre(params.degree, params.alpha)
    return np.sort(np.asarray(nodes, dtype=float))


def power_exp(p: float, x: ArrayLike) -> ArrayLike:
    """x^p e^{-x/2} evaluated in log space, with the x -> 0 limits."""
    xs = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        out = np.exp(p * np.log(xs) - 0.5 * xs)
    if p == 0:
        out = np.where(xs == 0, 1.0, out)
    return _finish(out, x)


def _check_lm(l: int, m: int) -> int:
    if l < 0 or int(l) != l:
        raise DomainError(f"l must be an integer >= 0, got {l!r}")
    if abs(m) > l or int(m) != m:
        raise DomainError(f"|m| must not exceed l, got l={l}, m={m}")
    return abs(int(m))


def _legendre_pair(
    l: int, m: int, theta: np.ndarray, reduced: bool = False
) -> Tuple[np.ndarray, np.ndarray]:
    """Normalized (y_l^m, y_{l-1}^m) by the stable (l, m) recurrences.

    With reduced=True the sin^m(theta) factor is left out.
    """
    c = np.cos(theta)
    s = np.ones_like(theta) if reduced else np.sin(theta)

    y = np.full_like(c, _INV_SQRT_4PI)
    for j in range(1, m + 1):
        y = y * np.sqrt((2 * j + 1) / (2 * j)) * s
    if l == m:
        return y, np.zeros_like(y)

    prev, cur = y, np.sqrt(2 * m + 3) * c * y
    a_prev = np.sqrt(2 * m + 3)
    for j in range(m + 2, l + 1):
        a_j = np.sqrt((4 * j * j - 1) / (j * j - m * m))
        prev, cur = cur, a_j * (c * cur - prev / a_prev)
        a_prev = a_j
    return cur, prev


def sph_harmonic_amplitude(l: int, m: int, theta: ArrayLike) -> ArrayLike:
    """Real theta profile y with |Y_lm(theta, phi)|^2 = y^2 (no Condon-Shortley phase)."""
    mm = _check_lm(l, m)
    th = np.asarray(theta, dtype=float)
    y, _ = _legendre_pair(l, mm, th)
    return _finish(y, theta)


def sph_harmonic_sq(l: int, m: int, theta: ArrayLike) -> ArrayLike:
    """|Y_lm|^2, normalized over the full solid angle."""
    y = np.asarray(sph_harmonic_amplitude(l, m, theta))
    return _finish(y * y, theta)


def sph_harmonic_amplitude_derivative(l: int, m: int, theta: ArrayLike) -> ArrayLike:
    """d/dtheta of sph_harmonic_amplitude."""
    mm = _check_lm(l, m)
    th = np.asarray(theta, dtype=float)
    if l == 0:
        return _finish(np.zeros_like(th), theta)

    c, s = np.cos(th), np.sin(th)
    y, y_lower = _legendre_pair(l, mm, th)
    coupling = np.sqrt((2 * l + 1) * (l * l - mm * mm) / (2 * l - 1))
    numerator = l * c * y - coupling * y_lower

    at_pole = s == 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(at_pole, 0.0, numerator / np.where(at_pole, 1.0, s))
    if mm == 1 and np.any(at_pole):
        reduced, _ = _legendre_pair(l, mm, th, reduced=True)
        out = np.where(at_pole, reduced * c, out)
    return _finish(out, theta)


def legendre_zeros(l: int, m: int) -> np.ndarray:
    """Interior theta-nodes of Y_lm on (0, pi), ascending."""
    mm = _check_lm(l, m)
    if l - mm == 0:
        return np.empty(0)
    roots = npleg.Legendre.basis(l).deriv(mm).roots()
    roots = np.clip(np.real(roots), -1.0, 1.0)
    return np.sort(np.arccos(roots))
