"""Wavefunctions on a uniform position grid and the elementary factor actions.

The factor set covers shifts (spectral), dilations (cubic-spline resampling),
exp[c d^2/dx^2] convolutions (spectral multiplier exp(-c k^2)), and pointwise
quadratic/linear/scalar phases.  Chains of factors realize displacement,
squeeze, and time-displacement operators on sampled states.

Spectral steps treat the grid as periodic, so states are expected to decay to
negligible values at the boundary; the default window [-12, 12) with n = 2048
comfortably holds every state this package constructs.
"""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence, Union

import numpy as np
from scipy.interpolate import make_interp_spline

from .algebra import (
    CausticError,
    FactorizationCoefficients,
    SqueezeParameter,
    squeeze_factorization,
    time_displacement_factorization,
)

__all__ = [
    "ChainError",
    "Dilation",
    "Grid",
    "LinearPhase",
    "OperatorFactor",
    "QuadraticPhase",
    "Scalar",
    "ShiftRangeError",
    "Shift",
    "SpectralD2",
    "SupportOverflowWarning",
    "WaveFunction",
    "apply_chain",
    "apply_dilation",
    "apply_factor",
    "apply_phase",
    "apply_shift",
    "apply_spectral_d2",
    "displacement_factors",
    "squeeze_factors",
    "time_displacement_factors",
]

DEFAULT_OVERFLOW_FRAC = 1e-6


class ShiftRangeError(ValueError):
    """Shift magnitude would wrap state content around the periodic boundary."""


class SupportOverflowWarning(UserWarning):
    """A dilation moved a non-negligible share of the state across the window edge."""


class ChainError(RuntimeError):
    """A factor inside a chain failed; the message carries the factor index."""


@dataclass(frozen=True)
class Grid:
    """Uniform sampling of [x_min, x_max) with n points, n a power of two."""

    x_min: float = -12.0
    x_max: float = 12.0
    n: int = 2048

    def __post_init__(self) -> None:
        if not self.x_max > self.x_min:
            raise ValueError(f"x_max must exceed x_min, got [{self.x_min}, {self.x_max}]")
        if self.n < 16 or (self.n & (self.n - 1)) != 0:
            raise ValueError(f"n must be a power of two >= 16, got {self.n!r}")

    @property
    def span(self) -> float:
        return self.x_max - self.x_min

    @property
    def dx(self) -> float:
        return self.span / self.n

    @cached_property
    def x(self) -> np.ndarray:
        return self.x_min + self.dx * np.arange(self.n)

    @cached_property
    def k(self) -> np.ndarray:
        """Angular wavenumbers in numpy's FFT layout."""
        return 2.0 * np.pi * np.fft.fftfreq(self.n, d=self.dx)


@dataclass(frozen=True)
class WaveFunction:
    """Complex samples of a state on a Grid.  Treated as an immutable value."""

    grid: Grid
    samples: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.samples, dtype=complex)
        if arr.shape != (self.grid.n,):
            raise ValueError(f"samples must have shape ({self.grid.n},), got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("samples must be finite")
        object.__setattr__(self, "samples", arr)

    @classmethod
    def from_callable(
        cls, grid: Grid, f: Callable[[np.ndarray], np.ndarray], normalize: bool = False
    ) -> "WaveFunction":
        psi = cls(grid, np.asarray(f(grid.x), dtype=complex))
        return psi.normalized() if normalize else psi

    def norm(self) -> float:
        """L2 norm by the rectangle rule (spectrally accurate for decaying states)."""
        return float(np.sqrt(np.sum(np.abs(self.samples) ** 2) * self.grid.dx))

    def density(self) -> np.ndarray:
        return np.abs(self.samples) ** 2

    def normalized(self) -> "WaveFunction":
        nrm = self.norm()
        if nrm == 0.0:
            raise ValueError("cannot normalize the zero state")
        return WaveFunction(self.grid, self.samples / nrm)

    def with_samples(self, samples: np.ndarray) -> "WaveFunction":
        return WaveFunction(self.grid, samples)


# --- elementary factors ------------------------------------------------------


@dataclass(frozen=True)
class Shift:
    """Resample to psi(x + c)."""

    c: float


@dataclass(frozen=True)
class Dilation:
    """Resample to psi(scale * x); scale = e^tau must be positive."""

    scale: float

    def __post_init__(self) -> None:
        if not self.scale > 0.0:
            raise ValueError(f"dilation scale must be > 0, got {self.scale!r}")


@dataclass(frozen=True)
class SpectralD2:
    """Apply exp[c d^2/dx^2], requiring Re(c) >= 0."""

    c: complex

    def __post_init__(self) -> None:
        if complex(self.c).real < 0.0:
            raise ValueError(f"Re(c) must be >= 0, got c = {self.c!r}")


@dataclass(frozen=True)
class QuadraticPhase:
    """Multiply by exp[i a x^2]."""

    a: float


@dataclass(frozen=True)
class LinearPhase:
    """Multiply by exp[i p x]."""

    p: float


@dataclass(frozen=True)
class Scalar:
    """Multiply by the constant s."""

    s: complex


OperatorFactor = Union[Shift, Dilation, SpectralD2, QuadraticPhase, LinearPhase, Scalar]


# --- elementary actions ------------------------------------------------------


def apply_shift(psi: WaveFunction, c: float) -> WaveFunction:
    """Return samples of psi(x + c) via the spectral shift theorem.

    Exact for band-limited content, so off-grid shifts do not smear.  Shifts
    of half the grid span or more are refused: content would wrap around the
    periodic boundary.
    """
    if abs(c) >= 0.5 * psi.grid.span:
        raise ShiftRangeError(
            f"|c| = {abs(c):.6g} is not below half the grid span {0.5 * psi.grid.span:.6g}"
        )
    if c == 0.0:
        return psi
    spectrum = np.fft.fft(psi.samples)
    return psi.with_samples(np.fft.ifft(spectrum * np.exp(1j * psi.grid.k * c)))


def apply_dilation(
    psi: WaveFunction,
    scale: float,
    overflow_frac: float = DEFAULT_OVERFLOW_FRAC,
) -> WaveFunction:
    """Return samples of psi(scale * x) by cubic-spline resampling.

    Points mapped outside the original grid read as zero, which is exact for
    states that decay inside the window.  The continuum identity
    ||psi(scale x)||^2 = ||psi||^2 / scale is used for norm accounting: if
    more than overflow_frac of the expected output norm is missing, the
    dilated support crossed the window edge and a SupportOverflowWarning is
    issued.
    """
    if not scale > 0.0:
        raise ValueError(f"dilation scale must be > 0, got {scale!r}")
    if scale == 1.0:
        return psi
    x = psi.grid.x
    xq = scale * x
    spline_re = make_interp_spline(x, psi.samples.real, k=3)
    spline_im = make_interp_spline(x, psi.samples.imag, k=3)
    inside = (xq >= x[0]) & (xq <= x[-1])
    values = np.zeros(psi.grid.n, dtype=complex)
    values[inside] = spline_re(xq[inside]) + 1j * spline_im(xq[inside])
    out = psi.with_samples(values)

    expected = psi.norm() ** 2 / scale
    if expected > 0.0:
        lost = expected - out.norm() ** 2
        if lost > overflow_frac * expected:
            warnings.warn(
                SupportOverflowWarning(
                    f"dilation by {scale:.6g} lost a fraction {lost / expected:.3e} "
                    f"of the expected norm to points outside the grid"
                )
            )
    return out


def apply_spectral_d2(psi: WaveFunction, c: complex) -> WaveFunction:
    """Apply exp[c d^2/dx^2] as the spectral multiplier exp(-c k^2).

    For real positive c this equals convolution with the heat kernel of
    variance 2c; for purely imaginary c it is unitary Fresnel propagation.
    Re(c) < 0 (backward diffusion) is refused as ill-posed.
    """
    c = complex(c)
    if c.real < 0.0:
        raise ValueError(f"Re(c) must be >= 0, got c = {c!r}")
    if c == 0.0:
        return psi
    spectrum = np.fft.fft(psi.samples)
    return psi.with_samples(np.fft.ifft(spectrum * np.exp(-c * psi.grid.k**2)))


def apply_phase(
    psi: WaveFunction, factor: QuadraticPhase | LinearPhase | Scalar
) -> WaveFunction:
    """Pointwise multiplication by a quadratic phase, linear phase, or scalar."""
    if isinstance(factor, QuadraticPhase):
        if factor.a == 0.0:
            return psi
        return psi.with_samples(psi.samples * np.exp(1j * factor.a * psi.grid.x**2))
    if isinstance(factor, LinearPhase):
        if factor.p == 0.0:
            return psi
        return psi.with_samples(psi.samples * np.exp(1j * factor.p * psi.grid.x))
    if isinstance(factor, Scalar):
        return psi.with_samples(psi.samples * complex(factor.s))
    raise TypeError(f"not a pointwise factor: {factor!r}")


def apply_factor(psi: WaveFunction, factor: OperatorFactor) -> WaveFunction:
    if isinstance(factor, Shift):
        return apply_shift(psi, factor.c)
    if isinstance(factor, Dilation):
        return apply_dilation(psi, factor.scale)
    if isinstance(factor, SpectralD2):
        return apply_spectral_d2(psi, factor.c)
    return apply_phase(psi, factor)


def apply_chain(psi: WaveFunction, factors: Sequence[OperatorFactor]) -> WaveFunction:
    """Apply factors in sequence; factors[0] acts first.

    A chain lists the factors of an operator product read right to left, so
    the product's rightmost factor sits at index 0.  Failures are re-raised
    as ChainError with the offending index in the message.
    """
    out = psi
    for index, factor in enumerate(factors):
        try:
            out = apply_factor(out, factor)
        except (ValueError, TypeError) as exc:
            raise ChainError(f"factor {index} ({type(factor).__name__}) failed: {exc}") from exc
    return out


# --- factor chains for the named operator families ----------------------------


def displacement_factors(x0: float, p0: float) -> list[OperatorFactor]:
    """Factor chain of the phase-space displacement by (x0, p0).

    Product form exp[-i x0 p0 / 2] exp[i p0 x] exp[-x0 d/dx]; the shift acts
    first and recenters the state at +x0.  Identity factors are dropped, so
    the zero displacement reduces to [Scalar(1)].
    """
    factors: list[OperatorFactor] = []
    if x0 != 0.0:
        factors.append(Shift(-x0))
    if p0 != 0.0:
        factors.append(LinearPhase(p0))
    factors.append(Scalar(cmath.exp(-0.5j * x0 * p0)))
    return factors


def _coefficient_factors(c: FactorizationCoefficients) -> list[OperatorFactor]:
    """[SpectralD2(i gamma), Dilation(e^beta), QuadraticPhase(alpha), Scalar(e^delta)].

    Listed in application order for the product
    exp[delta] exp[i alpha x^2] exp[beta x d/dx] exp[i gamma d^2/dx^2].
    Requires real coefficients, which both implemented families provide away
    from caustics; identity factors are dropped, the scalar is always kept.
    """
    worst_imag = max(abs(v.imag) for v in c.as_tuple())
    if worst_imag > 1e-12:
        raise ValueError(
            f"grid factors need real coefficients (worst imaginary part {worst_imag:.3e}); "
            "compose shorter steps instead"
        )
    alpha, beta, gamma, delta = (v.real for v in (c.alpha, c.beta, c.gamma, c.delta))
    factors: list[OperatorFactor] = []
    if gamma != 0.0:
        factors.append(SpectralD2(1j * gamma))
    if beta != 0.0:
        factors.append(Dilation(math.exp(beta)))
    if alpha != 0.0:
        factors.append(QuadraticPhase(alpha))
    factors.append(Scalar(cmath.exp(delta)))
    return factors


def squeeze_factors(z: SqueezeParameter) -> list[OperatorFactor]:
    """Factor chain of the squeeze operator with argument z."""
    return _coefficient_factors(squeeze_factorization(z, 1.0))


def time_displacement_factors(
    t: float, substeps: int = 1, caustic_eps: float = 1e-9
) -> list[OperatorFactor]:
    """Factor chain advancing oscillator time by t, split into equal substeps.

    Each substep must stay strictly inside (-pi/2, pi/2), where the dilation
    scale 1/cos stays positive; longer displacements are composed from
    shorter ones, which also carries states smoothly through the caustics of
    the individual factors.
    """
    if substeps < 1:
        raise ValueError(f"substeps must be >= 1, got {substeps!r}")
    tau = t / substeps
    if abs(tau) >= 0.5 * math.pi:
        needed = math.floor(abs(t) / (0.5 * math.pi)) + 1
        raise CausticError(
            f"substep {tau:.6g} reaches pi/2; use at least {needed} substeps for t = {t:.6g}"
        )
    step = _coefficient_factors(time_displacement_factorization(tau, caustic_eps))
    return step * substeps
