"""Verification suites: every oracle comparison behind `opfactor verify`.

Each check returns a CheckResult with the measured error and its tolerance.
The checks are grouped into the suites `fock`, `grid`, and `analytic`; the
acceptance-level comparisons live here so the command line and the test suite
report identical numbers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import fock, states
from .algebra import (
    GeneratorCoefficients,
    SqueezeParameter,
    integrate_wei_norman,
    squeeze_factorization,
    squeeze_scale,
    time_displacement_factorization,
)
from .grid import (
    Grid,
    WaveFunction,
    apply_chain,
    apply_dilation,
    apply_shift,
    apply_spectral_d2,
    displacement_factors,
    squeeze_factors,
    time_displacement_factors,
)

__all__ = ["CheckResult", "SUITES", "run_checks"]

DEFAULT_SEED = 20260810

EVEN_ODD_X0 = 2.0
EVEN_ODD_S = 1.5
EVEN_ODD_TIMES = (0.0, 0.6, math.pi / 2, 2.0)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    measured: float
    tol: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "measured", float(self.measured))
        object.__setattr__(self, "tol", float(self.tol))

    @property
    def passed(self) -> bool:
        return bool(math.isfinite(self.measured) and self.measured <= self.tol)


def _max_abs(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.abs(np.asarray(a) - np.asarray(b)).max())


def _coeff_distance(got, expected) -> float:
    return max(abs(g - e) for g, e in zip(got.as_tuple(), expected.as_tuple()))


def _phase_aligned(reference: np.ndarray, candidate: np.ndarray) -> np.ndarray:
    """Rotate candidate by the single global phase fixed at the density maximum."""
    i = int(np.argmax(np.abs(reference)))
    ratio = reference[i] / candidate[i]
    return candidate * (ratio / abs(ratio))


def _substeps_for(t: float) -> int:
    return max(1, math.floor(abs(t) / 1.2) + 1)


# --- analytic suite -----------------------------------------------------------


def check_ode_squeeze(ode_steps: int = 1000, samples: int = 20, seed: int = DEFAULT_SEED):
    """RK4 trajectories reproduce the squeeze closed forms at t = 1."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        z = SqueezeParameter(2.0 * rng.random(), 2.0 * math.pi * rng.random())
        closed = squeeze_factorization(z, 1.0)
        final = integrate_wei_norman(GeneratorCoefficients.squeeze(z), 1.0, ode_steps).final
        worst = max(worst, _coeff_distance(final, closed))
    return [CheckResult("analytic", "ode_vs_closed_form_squeeze", worst, 1e-7)]


def check_ode_oscillator(ode_steps: int = 1000):
    """RK4 trajectories reproduce the time-displacement closed forms."""
    worst = 0.0
    for t in (0.3, 0.7, 1.0, 1.4):
        closed = time_displacement_factorization(t)
        final = integrate_wei_norman(GeneratorCoefficients.oscillator(), t, ode_steps).final
        worst = max(worst, _coeff_distance(final, closed))
    return [CheckResult("analytic", "ode_vs_closed_form_oscillator", worst, 1e-7)]


def check_unitarity_residue(ode_steps: int = 400):
    """exp(2 delta - beta) stays 1 along both families, closed form and ODE."""
    worst = 0.0
    for t in (0.25, 0.7, 1.0):
        worst = max(worst, time_displacement_factorization(t).unitarity_residue())
        final = integrate_wei_norman(GeneratorCoefficients.oscillator(), t, ode_steps).final
        worst = max(worst, final.unitarity_residue())
    for r, phi in ((0.5, 0.0), (1.0, math.pi / 3), (2.0, 5.0)):
        z = SqueezeParameter(r, phi)
        worst = max(worst, squeeze_factorization(z, 1.0).unitarity_residue())
        final = integrate_wei_norman(GeneratorCoefficients.squeeze(z), 1.0, ode_steps).final
        worst = max(worst, final.unitarity_residue())
    return [CheckResult("analytic", "unitarity_residue", worst, 1e-10)]


def check_squeeze_scale_forms(samples: int = 200, seed: int = DEFAULT_SEED):
    """Both algebraic forms of the t = 1 squeeze scale agree."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        r = 2.0 * rng.random()
        phi = 2.0 * math.pi * rng.random()
        hyperbolic = squeeze_scale(SqueezeParameter(r, phi), 1.0)
        half_angle = math.exp(r) * math.cos(phi / 2) ** 2 + math.exp(-r) * math.sin(phi / 2) ** 2
        worst = max(worst, abs(hyperbolic - half_angle))
    return [CheckResult("analytic", "squeeze_scale_two_forms", worst, 1e-12)]


def check_state_reductions(grid: Grid):
    """Closed forms collapse onto each other in their special cases."""
    x = grid.x
    results = []

    z = SqueezeParameter(1.0, 0.0)
    spec = states.SqueezedStateSpec(x0=1.0, p0=0.0, z=z)
    s = math.exp(z.r)
    reduced = (math.sqrt(math.pi) * s) ** -0.5 * np.exp(-((x - 1.0) ** 2) / (2 * s * s))
    results.append(
        CheckResult("analytic", "psi_ss_real_z_reduction",
                    _max_abs(states.psi_ss(x, spec), reduced), 1e-12)
    )

    results.append(
        CheckResult("analytic", "coherent_evolved_t0_reduction",
                    _max_abs(states.coherent_evolved(x, 0.0, 2.0, -0.5),
                             states.coherent_state(x, 2.0, -0.5)), 1e-12)
    )

    worst = 0.0
    for sign in (+1, -1):
        spec_eo = states.EvenOddSpec(EVEN_ODD_X0, EVEN_ODD_S, sign)
        for t in (0.0, 0.6, 2.0):
            psi = states.psi_spm(x, t, spec_eo)
            mirrored = sign * states.psi_spm(-x, t, spec_eo)
            worst = max(worst, _max_abs(psi, mirrored))
    results.append(CheckResult("analytic", "psi_spm_parity", worst, 1e-12))
    return results


def check_evenodd_density_consistency(grid: Grid):
    """Renormalized |psi_spm|^2 matches renormalized rho_spm, finite at the caustic."""
    x, dx = grid.x, grid.dx
    results = []
    for sign in (+1, -1):
        spec = states.EvenOddSpec(EVEN_ODD_X0, EVEN_ODD_S, sign)
        for t in EVEN_ODD_TIMES:
            psi = states.psi_spm(x, t, spec)
            rho = states.rho_spm(x, t, spec)
            if not (np.all(np.isfinite(psi)) and np.all(np.isfinite(rho))):
                err = math.inf
            else:
                dens = np.abs(psi) ** 2
                dens /= np.sum(dens) * dx
                rho_n = rho / (np.sum(rho) * dx)
                err = _max_abs(dens, rho_n)
            results.append(
                CheckResult("analytic", f"evenodd_psi_vs_rho_sign{sign:+d}_t{t:.4g}", err, 1e-9)
            )
    return results


def check_evenodd_raw_integral(grid: Grid):
    """Quadrature of rho_spm matches (1 +- E) / (1 +- d E) with E = e^{-x0^2/s^2}."""
    x, dx = grid.x, grid.dx
    results = []
    for sign in (+1, -1):
        spec = states.EvenOddSpec(EVEN_ODD_X0, EVEN_ODD_S, sign)
        for t in EVEN_ODD_TIMES:
            measured = float(np.sum(states.rho_spm(x, t, spec)) * dx)
            damp = math.exp(-spec.x0**2 / spec.s**2)
            d = math.sqrt(spec.width_sq(t))
            expected = (1.0 + sign * damp) / (1.0 + sign * d * damp)
            results.append(
                CheckResult("analytic", f"evenodd_raw_integral_sign{sign:+d}_t{t:.4g}",
                            abs(measured - expected), 1e-9)
            )
    return results


def check_evenodd_grid_evolution(grid: Grid):
    """Grid propagation of the t = 0 pair tracks the renormalized analytic density."""
    x, dx = grid.x, grid.dx
    results = []
    for sign in (+1, -1):
        spec = states.EvenOddSpec(EVEN_ODD_X0, EVEN_ODD_S, sign)
        initial = WaveFunction.from_callable(
            grid, lambda xs: states.psi_spm(xs, 0.0, spec), normalize=True
        )
        for t in EVEN_ODD_TIMES:
            if t == 0.0:
                evolved = initial
            else:
                evolved = apply_chain(initial, time_displacement_factors(t, _substeps_for(t)))
            rho = states.rho_spm(x, t, spec)
            rho /= np.sum(rho) * dx
            results.append(
                CheckResult("analytic", f"evenodd_grid_density_sign{sign:+d}_t{t:.4g}",
                            _max_abs(evolved.density(), rho), 1e-5)
            )
    return results


def check_oracle_triangle(grid: Grid, fock_dim: int = 128):
    """Analytic, grid, and number-basis routes agree on the worked states.

    The number-basis route projects a state onto the truncated basis, applies
    the dense operator matrix, and synthesizes the result back onto the grid.
    """
    results = []
    x = grid.x

    # Evolved coherent state: factored matrix route vs closed form.
    x0, p0, t = 1.0, 0.5, 0.7
    psi_in = WaveFunction.from_callable(grid, lambda xs: states.coherent_state(xs, x0, p0))
    coeffs = fock.position_to_fock(psi_in, fock_dim)
    m = fock.factored_matrix(time_displacement_factorization(t), fock_dim)
    via_fock = fock.fock_to_position(m @ coeffs, grid)
    results.append(
        CheckResult("analytic", "triangle_fock_evolved_coherent",
                    _max_abs(via_fock.samples, states.coherent_evolved(x, t, x0, p0)), 1e-6)
    )

    # Displaced squeezed state: direct ladder exponentials on the vacuum.
    z = SqueezeParameter(0.8, math.pi / 3)
    d_mat = fock.matrix_exponential(fock.displacement_generator(x0, p0, fock_dim))
    s_mat = fock.matrix_exponential(fock.squeeze_generator(z, fock_dim))
    vacuum = np.zeros(fock_dim, dtype=complex)
    vacuum[0] = 1.0
    via_ladder = fock.fock_to_position(d_mat @ (s_mat @ vacuum), grid)
    results.append(
        CheckResult("analytic", "triangle_fock_displaced_squeezed",
                    _max_abs(via_ladder.samples,
                             states.psi_ss(x, states.SqueezedStateSpec(x0, p0, z))), 1e-6)
    )
    return results


def check_psi_ss_vs_grid(grid: Grid):
    """The displaced-squeezed closed form agrees with its factor-chain construction."""
    x = grid.x
    spec = states.SqueezedStateSpec(x0=1.0, p0=0.5, z=SqueezeParameter(0.8, math.pi / 3))
    chain = squeeze_factors(spec.z) + displacement_factors(spec.x0, spec.p0)
    built = apply_chain(WaveFunction.from_callable(grid, states.psi0), chain)
    analytic = states.psi_ss(x, spec)
    # Global phase fixed at the sample nearest x0.
    i = int(np.argmin(np.abs(x - spec.x0)))
    ratio = analytic[i] / built.samples[i]
    aligned = built.samples * (ratio / abs(ratio))
    return [CheckResult("analytic", "psi_ss_vs_grid_chain", _max_abs(analytic, aligned), 1e-7)]


# --- grid suite ---------------------------------------------------------------


def check_shift_gaussian(grid: Grid):
    """Spectral shift reproduces the analytically shifted Gaussian."""
    psi = WaveFunction.from_callable(grid, lambda x: np.exp(-0.5 * x * x))
    shifted = apply_shift(psi, -1.5)
    expected = np.exp(-0.5 * (grid.x - 1.5) ** 2)
    return [CheckResult("grid", "shift_gaussian", _max_abs(shifted.samples, expected), 1e-9)]


def check_dilation_gaussian(grid: Grid):
    """Cubic-spline dilation reproduces the analytic substitution."""
    psi = WaveFunction.from_callable(grid, lambda x: np.exp(-0.5 * x * x))
    out = apply_dilation(psi, 2.0)
    expected = np.exp(-2.0 * grid.x**2)
    return [CheckResult("grid", "dilation_gaussian", _max_abs(out.samples, expected), 1e-8)]


def check_spectral_quadrature(grid: Grid, probes: int = 32):
    """Spectral exp[c d^2/dx^2] with real c matches direct kernel quadrature."""
    c = 0.25
    psi = WaveFunction.from_callable(grid, lambda x: np.exp(-0.5 * x * x))
    out = apply_spectral_d2(psi, c)
    x, dx = grid.x, grid.dx
    idx = np.linspace(0, grid.n - 1, probes).astype(int)
    # Restrict probes to the central half so the kernel support is sampled fully.
    idx = idx[(np.abs(x[idx]) < 0.25 * grid.span)]
    prefactor = 1.0 / math.sqrt(4.0 * math.pi * c)
    worst = 0.0
    for i in idx:
        integral = prefactor * np.sum(np.exp(-((x - x[i]) ** 2) / (4.0 * c)) * psi.samples) * dx
        worst = max(worst, abs(out.samples[i] - integral))
    return [CheckResult("grid", "spectral_d2_vs_quadrature", worst, 1e-7)]


def check_fresnel_gaussian(grid: Grid):
    """Purely imaginary c reproduces free Gaussian spreading."""
    psi = WaveFunction.from_callable(grid, states.psi0)
    out = apply_spectral_d2(psi, 0.5j)
    w = 1.0 + 1j  # 1 + 2c
    expected = math.pi**-0.25 / np.sqrt(w) * np.exp(-grid.x**2 / (2.0 * w))
    return [CheckResult("grid", "fresnel_free_gaussian", _max_abs(out.samples, expected), 1e-7)]


def check_grid_squeeze_cs(grid: Grid):
    """Real-z squeeze chains on the ground state land on the scaled Gaussian."""
    results = []
    psi = WaveFunction.from_callable(grid, states.psi0)
    for r in (0.5, 1.0):
        out = apply_chain(psi, squeeze_factors(SqueezeParameter(r, 0.0)))
        s = math.exp(r)
        expected = (math.sqrt(math.pi) * s) ** -0.5 * np.exp(-grid.x**2 / (2.0 * s * s))
        results.append(
            CheckResult("grid", f"squeeze_chain_vs_cs_r{r:g}", _max_abs(out.samples, expected), 1e-8)
        )
    return results


def check_grid_time_coherent(grid: Grid):
    """One-substep time chain reproduces the evolved-coherent closed form."""
    x0, p0, t = 1.0, 0.5, 0.7
    psi = WaveFunction.from_callable(grid, lambda x: states.coherent_state(x, x0, p0))
    out = apply_chain(psi, time_displacement_factors(t, 1))
    expected = states.coherent_evolved(grid.x, t, x0, p0)
    aligned = _phase_aligned(expected, out.samples)
    return [CheckResult("grid", "time_chain_vs_coherent_evolved", _max_abs(expected, aligned), 1e-6)]


def _unitary_suite(grid: Grid):
    """(state, chain) pairs covering every unitary family at suite parameters."""
    ground = WaveFunction.from_callable(grid, states.psi0)
    coherent = WaveFunction.from_callable(grid, lambda x: states.coherent_state(x, 1.0, 0.5))
    squeezed = WaveFunction.from_callable(
        grid,
        lambda x: states.psi_ss(x, states.SqueezedStateSpec(1.0, 0.0, SqueezeParameter(0.5, 0.0))),
    )
    even = WaveFunction.from_callable(
        grid,
        lambda x: states.psi_spm(x, 0.0, states.EvenOddSpec(EVEN_ODD_X0, EVEN_ODD_S, +1)),
        normalize=True,
    )
    odd = WaveFunction.from_callable(
        grid,
        lambda x: states.psi_spm(x, 0.0, states.EvenOddSpec(EVEN_ODD_X0, EVEN_ODD_S, -1)),
        normalize=True,
    )
    return [
        ("displace_ground", ground, displacement_factors(1.0, 0.5)),
        ("squeeze_r0.5_ground", ground, squeeze_factors(SqueezeParameter(0.5, 0.0))),
        ("squeeze_r1_ground", ground, squeeze_factors(SqueezeParameter(1.0, 0.0))),
        ("squeeze_complex_coherent", coherent, squeeze_factors(SqueezeParameter(0.8, math.pi / 3))),
        ("time_0.7_coherent", coherent, time_displacement_factors(0.7, 1)),
        ("time_0.8_squeezed", squeezed, time_displacement_factors(0.8, 1)),
        ("time_2.0_even", even, time_displacement_factors(2.0, 2)),
        ("time_halfpi_odd", odd, time_displacement_factors(math.pi / 2, 2)),
    ]


def check_grid_unitarity(grid: Grid):
    """Norm drift stays below 1e-9 per unitary chain across the suite states."""
    worst = 0.0
    for _, psi, chain in _unitary_suite(grid):
        out = apply_chain(psi, chain)
        worst = max(worst, abs(out.norm() - psi.norm()))
    return [CheckResult("grid", "unitary_norm_drift", worst, 1e-9)]


def check_grid_group_property(grid: Grid):
    """T(0.8) equals T(0.5) after T(0.3) on a squeezed state."""
    psi = WaveFunction.from_callable(
        grid,
        lambda x: states.psi_ss(x, states.SqueezedStateSpec(1.0, 0.0, SqueezeParameter(0.5, 0.0))),
    )
    direct = apply_chain(psi, time_displacement_factors(0.8, 1))
    composed = apply_chain(
        apply_chain(psi, time_displacement_factors(0.3, 1)), time_displacement_factors(0.5, 1)
    )
    return [CheckResult("grid", "time_group_property", _max_abs(direct.samples, composed.samples), 1e-7)]


def check_grid_box_phase(grid: Grid):
    """Free spectral evolution multiplies period-aligned sine modes by the exact phase."""
    results = []
    for n in (1, 2, 3):
        psi = WaveFunction.from_callable(grid, lambda x, n=n: np.sin(math.pi * n * x))
        out = apply_spectral_d2(psi, 0.5j)
        mask = np.abs(psi.samples) > 0.1
        ratio = out.samples[mask] / psi.samples[mask]
        expected = states.box_mode_phase(n, 1.0)
        results.append(
            CheckResult("grid", f"box_mode_phase_n{n}", float(np.abs(ratio - expected).max()), 1e-9)
        )
    return results


def check_grid_linearity(grid: Grid, seed: int = DEFAULT_SEED):
    """Chains act linearly on superpositions."""
    rng = np.random.default_rng(seed)
    psi1 = WaveFunction.from_callable(grid, lambda x: states.coherent_state(x, 1.0, 0.0))
    psi2 = WaveFunction.from_callable(grid, lambda x: states.coherent_state(x, -1.5, 0.5))
    a = complex(rng.standard_normal(), rng.standard_normal())
    b = complex(rng.standard_normal(), rng.standard_normal())
    chain = time_displacement_factors(0.6, 1)
    combined = apply_chain(psi1.with_samples(a * psi1.samples + b * psi2.samples), chain)
    separate = a * apply_chain(psi1, chain).samples + b * apply_chain(psi2, chain).samples
    return [CheckResult("grid", "chain_linearity", _max_abs(combined.samples, separate), 1e-10)]


# --- fock suite ---------------------------------------------------------------


def check_fock_commutators(fock_dim: int = 128):
    """Ladder and x/d matrices satisfy their commutators on the retained block."""
    a, adag = fock.ladder_matrices(fock_dim)
    comm = a @ adag - adag @ a
    block = slice(0, fock_dim - 1)
    err_ladder = _max_abs(comm[block, block], np.eye(fock_dim - 1))
    x, d = fock.xp_matrices(fock_dim)
    xd = x @ d - d @ x
    err_xd = _max_abs(xd[block, block], -np.eye(fock_dim - 1))
    err_herm = float(np.abs(x - x.conj().T).max() + np.abs(d + d.conj().T).max())
    return [
        CheckResult("fock", "ladder_commutator_block", err_ladder, 1e-12),
        CheckResult("fock", "xd_commutator_block", err_xd, 1e-12),
        CheckResult("fock", "x_hermitian_d_antihermitian", err_herm, 1e-14),
    ]


def check_fock_oscillator_generator(fock_dim: int = 128):
    """The oscillator generator matrix is -i diag(n + 1/2) away from the edge."""
    g = fock.generator_matrix(GeneratorCoefficients.oscillator(), fock_dim)
    block = slice(0, fock_dim - 2)
    expected = -1j * np.diag(np.arange(fock_dim) + 0.5)
    return [
        CheckResult("fock", "oscillator_generator_diagonal",
                    _max_abs(g[block, block], expected[block, block]), 1e-12)
    ]


def check_expm_unitarity(dim: int = 8, seed: int = DEFAULT_SEED):
    """The exponential of a random anti-Hermitian matrix is unitary."""
    rng = np.random.default_rng(seed)
    raw = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    anti = 0.5 * (raw - raw.conj().T)
    u = fock.matrix_exponential(anti)
    return [
        CheckResult("fock", "expm_antihermitian_unitary",
                    _max_abs(u @ u.conj().T, np.eye(dim)), 1e-11)
    ]


def check_fock_time_diagonal():
    """Factored time-displacement matrices against the exact diagonal phases.

    Pinned at dim = 64 and a 32-state block; at t = 1.0 the factor spread
    needs intermediate states beyond n = 63, so that case measures the
    truncation wall rather than roundoff (see README).
    """
    results = []
    dim, block = 64, 32
    expected_full = np.arange(dim) + 0.5
    for t in (0.3, 1.0):
        m = fock.factored_matrix(time_displacement_factorization(t), dim)
        expected = np.diag(np.exp(-1j * expected_full * t))
        err = _max_abs(m[:block, :block], expected[:block, :block])
        results.append(CheckResult("fock", f"time_diagonal_dim64_t{t:g}", err, 1e-8))
    return results


def check_fock_squeeze_oracle():
    """Factored squeeze matrices against the direct ladder-generator exponential."""
    results = []
    dim, block = 128, 32
    for r in (0.25, 0.5, 1.0):
        for phi in (0.0, math.pi / 3, math.pi / 2):
            z = SqueezeParameter(r, phi)
            m = fock.factored_matrix(squeeze_factorization(z, 1.0), dim)
            direct = fock.matrix_exponential(fock.squeeze_generator(z, dim))
            err = _max_abs(m[:block, :block], direct[:block, :block])
            results.append(
                CheckResult("fock", f"squeeze_oracle_r{r:g}_phi{phi:.4g}", err, 1e-6)
            )
    return results


def check_fock_truncation_monotonicity():
    """Fixed-block oracle error does not grow when the basis is enlarged.

    Once both errors reach the roundoff floor the ordering is noise, so a
    floor-level excess of 1e-14 is allowed.
    """
    results = []
    block = 16
    for r in (0.5, 1.0):
        z = SqueezeParameter(r, math.pi / 2)
        errs = {}
        for dim in (64, 128):
            m = fock.factored_matrix(squeeze_factorization(z, 1.0), dim)
            direct = fock.matrix_exponential(fock.squeeze_generator(z, dim))
            errs[dim] = _max_abs(m[:block, :block], direct[:block, :block])
        excess = max(0.0, errs[128] - errs[64])
        results.append(CheckResult("fock", f"truncation_monotonic_r{r:g}", excess, 1e-14))
    return results


def check_fock_roundtrip(grid: Grid, fock_dim: int = 128):
    """Grid -> number-basis -> grid round trip of a squeezed state."""
    psi = WaveFunction.from_callable(
        grid,
        lambda x: states.psi_ss(x, states.SqueezedStateSpec(0.5, 0.0, SqueezeParameter(0.5, 0.0))),
    )
    coeffs = fock.position_to_fock(psi, fock_dim)
    rebuilt = fock.fock_to_position(coeffs, grid)
    return [CheckResult("fock", "position_roundtrip", _max_abs(rebuilt.samples, psi.samples), 1e-6)]


def check_hermite_parseval(grid: Grid, seed: int = DEFAULT_SEED):
    """Coefficient-vector norm equals grid norm for a random superposition."""
    rng = np.random.default_rng(seed)
    coeffs = rng.standard_normal(16) + 1j * rng.standard_normal(16)
    psi = fock.fock_to_position(coeffs, grid)
    return [
        CheckResult("fock", "hermite_parseval",
                    abs(psi.norm() - float(np.linalg.norm(coeffs))), 1e-8)
    ]


# --- runner -------------------------------------------------------------------

SUITES = ("fock", "grid", "analytic", "all")


def run_checks(
    suite: str = "all",
    grid: Grid | None = None,
    fock_dim: int = 128,
    ode_steps: int = 1000,
    seed: int = DEFAULT_SEED,
) -> list[CheckResult]:
    """Run one suite (or all) and return every CheckResult."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    fock.FockBasis(fock_dim)  # validates the configured dimension
    grid = grid or Grid()

    results: list[CheckResult] = []
    if suite in ("fock", "all"):
        results += check_fock_commutators(fock_dim)
        results += check_fock_oscillator_generator(fock_dim)
        results += check_expm_unitarity(seed=seed)
        results += check_fock_time_diagonal()
        results += check_fock_squeeze_oracle()
        results += check_fock_truncation_monotonicity()
        results += check_fock_roundtrip(grid, fock_dim)
        results += check_hermite_parseval(grid, seed=seed)
    if suite in ("grid", "all"):
        results += check_shift_gaussian(grid)
        results += check_dilation_gaussian(grid)
        results += check_spectral_quadrature(grid)
        results += check_fresnel_gaussian(grid)
        results += check_grid_squeeze_cs(grid)
        results += check_grid_time_coherent(grid)
        results += check_grid_unitarity(grid)
        results += check_grid_group_property(grid)
        results += check_grid_box_phase(grid)
        results += check_grid_linearity(grid, seed=seed)
    if suite in ("analytic", "all"):
        results += check_ode_squeeze(ode_steps, seed=seed)
        results += check_ode_oscillator(ode_steps)
        results += check_unitarity_residue()
        results += check_squeeze_scale_forms(seed=seed)
        results += check_state_reductions(grid)
        results += check_evenodd_density_consistency(grid)
        results += check_evenodd_raw_integral(grid)
        results += check_evenodd_grid_evolution(grid)
        results += check_psi_ss_vs_grid(grid)
        results += check_oracle_triangle(grid, fock_dim)
    return results
