"""Spectral quantities of the model spaces that random surfaces converge to.

The hyperbolic plane is parametrized by lambda = 1/4 + r^2 and carries the
Plancherel density (1/4pi) tanh(pi r) in r^2, i.e. in lambda
(1/4pi) tanh(pi sqrt(lambda - 1/4)) on [1/4, inf).
"""
import math
from dataclasses import dataclass
from typing import List

import numpy as np
from scipy.integrate import quad, simpson
from scipy.special import gamma

from src.errors import InvalidArgumentError

# intervallo e punti della regola di Simpson usata come controllo indipendente
SIMPSON_UPPER = 8.0
SIMPSON_POINTS = 200_001


def lambda_exceptional(d: int, p: int) -> float:
    """Bottom (p - (d-1)/2)^2 of the degree-p spectrum of the d-dimensional hyperbolic space"""
    if d < 2:
        raise InvalidArgumentError(f"d must be at least 2, got {d}")
    if p < 0:
        raise InvalidArgumentError(f"p must be nonnegative, got {p}")
    if 2 * p >= d:
        raise InvalidArgumentError(f"p must be smaller than d/2, got d={d}, p={p}")
    return (p - (d - 1) / 2) ** 2


def sphere_volume(two_m: int) -> float:
    """Surface area of the unit sphere S^(2m) in R^(2m+1)"""
    k = two_m + 1
    return 2 * math.pi ** (k / 2) / gamma(k / 2)


def middle_betti_limit(two_m: int) -> float:
    """Limit of b_m / vol for Benjamini-Schramm convergent sequences of 2m-dimensional manifolds"""
    if two_m < 2 or two_m % 2 != 0:
        raise InvalidArgumentError(f"two_m must be an even integer >= 2, got {two_m}")
    return 2 / sphere_volume(two_m)


def betti_ratio_genus(genus: int) -> float:
    """b_1 / area of a closed hyperbolic surface of the given genus"""
    if genus < 2:
        raise InvalidArgumentError(f"genus must be at least 2, got {genus}")
    return 2 * genus / (2 * math.pi * (2 * genus - 2))


def h2_plancherel_density(lam: float) -> float:
    if lam <= 0.25:
        return 0.0
    return math.tanh(math.pi * math.sqrt(lam - 0.25)) / (4 * math.pi)


def h2_spectral_mass(a: float, b: float) -> float:
    """Plancherel mass of [a, b] per unit area"""
    if b < a:
        raise InvalidArgumentError(f"empty interval [{a}, {b}]")
    lo, hi = max(a, 0.25), max(b, 0.25)
    if hi == lo:
        return 0.0
    # in r: massa = (1/2pi) * integrale di r tanh(pi r)
    r_lo, r_hi = math.sqrt(lo - 0.25), math.sqrt(hi - 0.25)
    value, _ = quad(lambda r: r * math.tanh(math.pi * r), r_lo, r_hi, epsabs=1e-12)
    return value / (2 * math.pi)


def _heat_integrand(u: float, t: float) -> float:
    return u * math.exp(-u * u) * math.tanh(math.pi * u / math.sqrt(t))


def _check_t(t: float) -> None:
    if not t > 0:
        raise InvalidArgumentError(f"t must be positive, got {t}")


def h2_plancherel_heat_trace(t: float) -> float:
    """Pointwise heat trace of the Laplacian on functions of the hyperbolic plane.

    With u = r sqrt(t) the integral becomes
    e^(-t/4) / (2 pi t) * int_0^inf u e^(-u^2) tanh(pi u / sqrt t) du,
    evaluated by adaptive quadrature.
    """
    _check_t(t)
    value, _ = quad(_heat_integrand, 0.0, np.inf, args=(t,), epsabs=1e-12, epsrel=1e-10, limit=400)
    return math.exp(-t / 4) / (2 * math.pi * t) * value


def h2_heat_trace_simpson(t: float) -> float:
    """Same heat trace by composite Simpson on [0, 8] (the tail is below e^-64)"""
    _check_t(t)
    u = np.linspace(0.0, SIMPSON_UPPER, SIMPSON_POINTS)
    values = u * np.exp(-u * u) * np.tanh(np.pi * u / np.sqrt(t))
    return math.exp(-t / 4) / (2 * math.pi * t) * float(simpson(values, x=u))


@dataclass
class HeatTraceRow:
    t: float
    quad: float
    simpson: float
    weyl: float  # termine principale 1/(4 pi t)


def h2_heat_trace_table(t_values: List[float]) -> List[HeatTraceRow]:
    return [
        HeatTraceRow(t=t, quad=h2_plancherel_heat_trace(t), simpson=h2_heat_trace_simpson(t),
                     weyl=1 / (4 * math.pi * t))
        for t in t_values
    ]
