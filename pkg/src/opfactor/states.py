"""Closed-form reference states used as ground truth by the other modules.

Covers the ground state, coherent states and their time evolution, the
general squeezed state, and the symmetric/antisymmetric superpositions of two
displaced squeezed Gaussians together with their densities.

Normalization caveat: the two-Gaussian family below is written with constants
whose norm is not conserved in t (see rho_spm); comparisons should use states
renormalized by quadrature, e.g. WaveFunction.from_callable(..., normalize=True).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .algebra import SqueezeParameter, squeeze_scale

__all__ = [
    "EvenOddSpec",
    "SqueezedStateSpec",
    "box_mode_phase",
    "coherent_evolved",
    "coherent_state",
    "psi0",
    "psi_spm",
    "psi_ss",
    "rho_spm",
]

_ROOT4_PI_INV = math.pi**-0.25


def psi0(x):
    """Oscillator ground state pi^{-1/4} exp(-x^2/2)."""
    x = np.asarray(x, dtype=float)
    return (_ROOT4_PI_INV * np.exp(-0.5 * x * x)).astype(complex)


def coherent_state(x, x0: float = 0.0, p0: float = 0.0):
    """Displaced ground state, including its -x0 p0 / 2 phase-space phase."""
    x = np.asarray(x, dtype=float)
    return _ROOT4_PI_INV * np.exp(-0.5 * (x - x0) ** 2 + 1j * p0 * x - 0.5j * x0 * p0)


@dataclass(frozen=True)
class SqueezedStateSpec:
    """Displacement (x0, p0) and squeeze argument of a general squeezed state."""

    x0: float = 0.0
    p0: float = 0.0
    z: SqueezeParameter = SqueezeParameter(0.0)


def psi_ss(x, spec: SqueezedStateSpec):
    """General squeezed state: displacement applied after the squeeze.

    With S = squeeze_scale(z) and chirp kappa = (sin(phi)/2) sinh(r) / S:

        pi^{-1/4} [S (1 + 2i kappa)]^{-1/2}
            exp[-(x - x0)^2 (1 / (2 S^2 (1 + 2i kappa)) - i kappa)
                + i p0 x - i x0 p0 / 2]

    For real positive z (phi = 0) this collapses to a width-e^r Gaussian
    centered at x0 carrying momentum p0.
    """
    x = np.asarray(x, dtype=float)
    z = spec.z
    scale = squeeze_scale(z, 1.0)
    kappa = 0.5 * math.sin(z.phi) * math.sinh(z.r) / scale
    chirp = 1.0 + 2j * kappa
    prefactor = _ROOT4_PI_INV / cmath.sqrt(scale * chirp)
    exponent = (
        -((x - spec.x0) ** 2) * (1.0 / (2.0 * scale * scale * chirp) - 1j * kappa)
        + 1j * spec.p0 * x
        - 0.5j * spec.x0 * spec.p0
    )
    return prefactor * np.exp(exponent)


def coherent_evolved(x, t: float, x0: float = 0.0, p0: float = 0.0):
    """Coherent state after oscillator evolution by time t.

    The center rotates to x0 cos t + p0 sin t; the state stays a unit-width
    Gaussian with momentum p0 cos t - x0 sin t, a global phase e^{-it/2}, and
    a phase-space area term.  Entire in t, so caustics need no special care.
    """
    x = np.asarray(x, dtype=float)
    xc = x0 * math.cos(t) + p0 * math.sin(t)
    pc = p0 * math.cos(t) - x0 * math.sin(t)
    phase = cmath.exp(-0.5j * t) * cmath.exp(-0.5j * xc * pc)
    return _ROOT4_PI_INV * phase * np.exp(-0.5 * (x - xc) ** 2 + 1j * pc * x)


@dataclass(frozen=True)
class EvenOddSpec:
    """Two displaced width-s Gaussians at +-x0, combined with the given sign."""

    x0: float
    s: float
    sign: int = +1

    def __post_init__(self) -> None:
        if not self.s > 0.0:
            raise ValueError(f"width scale s must be > 0, got {self.s!r}")
        if self.sign not in (+1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    def width_sq(self, t: float) -> float:
        """Evolved width parameter d^2 = s^2 cos^2 t + sin^2 t / s^2."""
        s2 = self.s * self.s
        return s2 * math.cos(t) ** 2 + math.sin(t) ** 2 / s2


def psi_spm(x, t: float, spec: EvenOddSpec, caustic_eps: float = 1e-8):
    """Evolved symmetric (sign=+1) / antisymmetric (sign=-1) Gaussian pair.

    The exponents are evaluated in a combined form in which the individually
    divergent tan(t) phases cancel algebraically, so the expression stays
    finite at odd multiples of pi/2 (where d^2 = 1/s^2).  The antisymmetric
    normalization constant 1 - exp(-x0^2 cos^2 t) has a vanishing limit
    there; within caustic_eps of the caustic the norm-preserving value
    1 - exp(-x0^2 / s^2) is substituted.  Away from caustics the constants
    are kept as written even though they do not conserve the norm in t;
    renormalize before pointwise comparisons.
    """
    x = np.asarray(x, dtype=float)
    s2 = spec.s * spec.s
    c, sn = math.cos(t), math.sin(t)
    sd2 = s2 * s2 * c * c + sn * sn  # equals s^2 d^2, never zero
    quad = -0.5 * (s2 - 1j * (1.0 - s2 * s2) * sn * c) / sd2
    lin = spec.x0 * (s2 * c - 1j * sn) / sd2
    const = -0.5 * spec.x0**2 * c * (s2 * c - 1j * sn) / sd2
    body = np.exp(quad * x * x + lin * x + const) + spec.sign * np.exp(
        quad * x * x - lin * x + const
    )

    if spec.sign == +1:
        denom = 1.0 + math.exp(-spec.x0**2 * c * c)
    elif abs(c) >= caustic_eps:
        denom = -math.expm1(-spec.x0**2 * c * c)
    else:
        denom = -math.expm1(-spec.x0**2 / s2)
    if denom == 0.0:
        raise ValueError("antisymmetric state vanishes identically for x0 = 0")

    prefactor = cmath.sqrt(
        spec.s * (s2 * c - 1j * sn) / (2.0 * math.sqrt(math.pi) * denom * sd2)
    )
    return prefactor * body


def rho_spm(x, t: float, spec: EvenOddSpec):
    """Closed-form density of the evolved pair, with d^2 = s^2 cos^2 t + sin^2 t / s^2.

    Proportional to |psi_spm|^2 at every (x, t), but its overall constant
    integrates to (1 +- e^{-x0^2/s^2}) / (1 +- d e^{-x0^2/s^2}) instead of 1;
    dropping the factor d in the denominator would restore a unit integral
    for all t.  See the README normalization notes.
    """
    x = np.asarray(x, dtype=float)
    s2 = spec.s * spec.s
    c, sn = math.cos(t), math.sin(t)
    d2 = spec.width_sq(t)
    d = math.sqrt(d2)
    envelope = np.exp(-(x * x + spec.x0**2 * c * c) / d2)
    interference = np.cosh(2.0 * x * spec.x0 * c / d2) + spec.sign * np.cos(
        2.0 * x * spec.x0 * sn / (d2 * s2)
    )
    constant = math.sqrt(math.pi) * d * (1.0 + spec.sign * d * math.exp(-spec.x0**2 / s2))
    return envelope * interference / constant


def box_mode_phase(n: int, t: float = 1.0) -> complex:
    """Phase exp[-i pi^2 n^2 t / 2] acquired by sin(pi n x) under exp[i t d^2/dx^2 / 2]."""
    if not (isinstance(n, (int, np.integer)) and n >= 1):
        raise ValueError(f"mode number must be a positive integer, got {n!r}")
    return cmath.exp(-0.5j * (math.pi * n) ** 2 * t)
