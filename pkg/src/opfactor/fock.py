"""Dense truncated number-basis matrices: an independent route to every operator.

Operators assembled from ladder matrices are exponentiated directly (scipy's
scaling-and-squaring Pade expm) and compared against factored products.
Truncation noise concentrates in the high-index rows, so comparisons restrict
to low-index blocks; see the README for a measured error-versus-dimension
table.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.linalg import expm

from .algebra import FactorizationCoefficients, GeneratorCoefficients, SqueezeParameter
from .grid import Grid, WaveFunction

__all__ = [
    "FockBasis",
    "displacement_generator",
    "factored_matrix",
    "fock_to_position",
    "generator_matrix",
    "hermite_functions",
    "ladder_matrices",
    "matrix_exponential",
    "position_to_fock",
    "squeeze_generator",
    "xp_matrices",
]

MIN_DIM = 8
MAX_HERMITE = 512
_EXPM_NORM_BOUND = 1e6


@dataclass(frozen=True)
class FockBasis:
    """Truncated number basis keeping states 0 .. dim-1."""

    dim: int = 128

    def __post_init__(self) -> None:
        if self.dim < MIN_DIM:
            raise ValueError(f"Fock dimension must be >= {MIN_DIM}, got {self.dim!r}")


def ladder_matrices(dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Lowering matrix a with a[n-1, n] = sqrt(n), and its conjugate transpose."""
    if dim < 2:
        raise ValueError(f"need dim >= 2, got {dim!r}")
    a = np.zeros((dim, dim), dtype=complex)
    ns = np.arange(1, dim)
    a[ns - 1, ns] = np.sqrt(ns)
    return a, a.conj().T


def xp_matrices(dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Position X = (a + a^dag)/sqrt(2) and derivative D = (a - a^dag)/sqrt(2).

    X is Hermitian and D anti-Hermitian by construction; [X, D] = -1 holds on
    the top-left (dim-1) block, truncation breaking only the last diagonal
    entry.
    """
    a, adag = ladder_matrices(dim)
    inv_rt2 = 1.0 / math.sqrt(2.0)
    return inv_rt2 * (a + adag), inv_rt2 * (a - adag)


def generator_matrix(
    b: GeneratorCoefficients | Sequence[complex], dim: int, t: float = 0.0
) -> np.ndarray:
    """b1 I + b2 X^2 + b3 X D + b4 D^2 on the truncated basis."""
    if isinstance(b, GeneratorCoefficients):
        b1, b2, b3, b4 = b.at(t)
    else:
        b1, b2, b3, b4 = (complex(v) for v in b)
    x, d = xp_matrices(dim)
    return (
        b1 * np.eye(dim, dtype=complex)
        + b2 * (x @ x)
        + b3 * (x @ d)
        + b4 * (d @ d)
    )


def matrix_exponential(m: np.ndarray) -> np.ndarray:
    """Dense matrix exponential via scaling and squaring with Pade approximants."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"need a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    norm1 = float(np.linalg.norm(m, 1))
    if norm1 > _EXPM_NORM_BOUND:
        raise OverflowError(f"matrix 1-norm {norm1:.3e} exceeds {_EXPM_NORM_BOUND:.0e}")
    return expm(m)


def factored_matrix(c: FactorizationCoefficients, dim: int) -> np.ndarray:
    """exp(delta) exp(i alpha X^2) exp(beta X D) exp(i gamma D^2) as one matrix."""
    x, d = xp_matrices(dim)
    quad = matrix_exponential(1j * c.alpha * (x @ x))
    mixed = matrix_exponential(c.beta * (x @ d))
    deriv = matrix_exponential(1j * c.gamma * (d @ d))
    return cmath.exp(c.delta) * (quad @ mixed @ deriv)


def squeeze_generator(z: SqueezeParameter, dim: int) -> np.ndarray:
    """(z a^dag a^dag - z* a a) / 2, the ladder form of the squeeze generator."""
    a, adag = ladder_matrices(dim)
    return 0.5 * (z.z * (adag @ adag) - np.conj(z.z) * (a @ a))


def displacement_generator(x0: float, p0: float, dim: int) -> np.ndarray:
    """alpha a^dag - alpha* a with alpha = (x0 + i p0) / sqrt(2)."""
    a, adag = ladder_matrices(dim)
    alpha = complex(x0, p0) / math.sqrt(2.0)
    return alpha * adag - np.conj(alpha) * a


def hermite_functions(count: int, x: np.ndarray) -> np.ndarray:
    """First `count` orthonormal oscillator eigenfunctions sampled on x.

    Normalized three-term recurrence with the Gaussian weight carried inside
    each function, which keeps values bounded for indices up to MAX_HERMITE.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count!r}")
    if count > MAX_HERMITE:
        raise ValueError(f"recurrence is validated only up to {MAX_HERMITE} functions")
    x = np.asarray(x, dtype=float)
    h = np.empty((count, x.size))
    h[0] = math.pi**-0.25 * np.exp(-0.5 * x * x)
    if count > 1:
        h[1] = math.sqrt(2.0) * x * h[0]
    for n in range(2, count):
        h[n] = math.sqrt(2.0 / n) * x * h[n - 1] - math.sqrt((n - 1) / n) * h[n - 2]
    if not np.all(np.isfinite(h)):
        raise ValueError("Hermite recurrence produced non-finite samples")
    return h


def fock_to_position(coefficients: Sequence[complex], grid: Grid) -> WaveFunction:
    """Superpose number-basis coefficients into a sampled position wavefunction."""
    coeffs = np.asarray(coefficients, dtype=complex)
    if coeffs.ndim != 1 or coeffs.size == 0:
        raise ValueError("coefficients must be a non-empty vector")
    basis = hermite_functions(coeffs.size, grid.x)
    return WaveFunction(grid, basis.T @ coeffs)


def position_to_fock(psi: WaveFunction, dim: int) -> np.ndarray:
    """Project a sampled state onto the first `dim` number-basis functions."""
    basis = hermite_functions(dim, psi.grid.x)
    return (basis @ psi.samples) * psi.grid.dx
