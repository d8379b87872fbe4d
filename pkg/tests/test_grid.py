"""Tests for grid states, the elementary factor actions, and factor chains."""
import cmath
import math

import numpy as np
import pytest

from opfactor.algebra import CausticError, SqueezeParameter
from opfactor.grid import (
    ChainError,
    Dilation,
    Grid,
    LinearPhase,
    QuadraticPhase,
    Scalar,
    Shift,
    ShiftRangeError,
    SpectralD2,
    SupportOverflowWarning,
    WaveFunction,
    apply_chain,
    apply_dilation,
    apply_phase,
    apply_shift,
    apply_spectral_d2,
    displacement_factors,
    squeeze_factors,
    time_displacement_factors,
)
from opfactor.states import coherent_state, psi0


@pytest.fixture(scope="module")
def grid():
    return Grid()


@pytest.fixture(scope="module")
def ground(grid):
    return WaveFunction.from_callable(grid, psi0)


class TestGrid:
    def test_geometry(self, grid):
        assert grid.dx == pytest.approx(24.0 / 2048)
        assert grid.x[0] == -12.0
        assert grid.x[-1] == pytest.approx(12.0 - grid.dx)
        assert 0.0 in grid.x

    def test_rejects_bad_sizes(self):
        with pytest.raises(ValueError):
            Grid(n=100)  # not a power of two
        with pytest.raises(ValueError):
            Grid(n=8)  # too small
        with pytest.raises(ValueError):
            Grid(x_min=3.0, x_max=-3.0)


class TestWaveFunction:
    def test_norm_of_ground_state(self, ground):
        assert ground.norm() == pytest.approx(1.0, abs=1e-10)

    def test_rejects_nonfinite(self, grid):
        samples = np.zeros(grid.n, dtype=complex)
        samples[0] = np.nan
        with pytest.raises(ValueError):
            WaveFunction(grid, samples)

    def test_normalized(self, grid):
        psi = WaveFunction.from_callable(grid, lambda x: 3.0 * np.exp(-0.5 * x * x))
        assert psi.normalized().norm() == pytest.approx(1.0, abs=1e-12)


class TestShift:
    def test_zero_shift_identity(self, ground):
        out = apply_shift(ground, 0.0)
        assert np.abs(out.samples - ground.samples).max() < 1e-14

    def test_grid_multiple_is_circular_roll(self, grid):
        rng = np.random.default_rng(5)
        samples = rng.standard_normal(grid.n) + 1j * rng.standard_normal(grid.n)
        psi = WaveFunction(grid, samples)
        m = 37
        out = apply_shift(psi, m * grid.dx)
        assert np.abs(out.samples - np.roll(samples, -m)).max() < 1e-11

    def test_gaussian_off_grid_shift(self, grid):
        psi = WaveFunction.from_callable(grid, lambda x: np.exp(-0.5 * x * x))
        out = apply_shift(psi, -1.5)
        expected = np.exp(-0.5 * (grid.x - 1.5) ** 2)
        assert np.abs(out.samples - expected).max() < 1e-9

    def test_norm_preserved(self, ground):
        out = apply_shift(ground, 0.7321)
        assert abs(out.norm() - ground.norm()) < 1e-10

    def test_too_large_shift_refused(self, ground):
        with pytest.raises(ShiftRangeError):
            apply_shift(ground, 12.0)


class TestDilation:
    def test_unit_scale_identity(self, ground):
        out = apply_dilation(ground, 1.0)
        assert np.abs(out.samples - ground.samples).max() < 1e-14

    def test_gaussian_scaling(self, grid):
        psi = WaveFunction.from_callable(grid, lambda x: np.exp(-0.5 * x * x))
        out = apply_dilation(psi, 2.0)
        assert np.abs(out.samples - np.exp(-2.0 * grid.x**2)).max() < 1e-8

    def test_group_inverse(self, grid, ground):
        out = apply_dilation(apply_dilation(ground, 2.0), 0.5)
        interior = np.abs(grid.x) <= 10.0
        assert np.abs(out.samples - ground.samples)[interior].max() < 1e-7

    def test_support_overflow_warns(self, grid):
        # scale 1/2 maps the packet at x = 8 out to x = 16, past the window edge
        psi = WaveFunction.from_callable(grid, lambda x: np.exp(-0.5 * (x - 8.0) ** 2))
        with pytest.warns(SupportOverflowWarning):
            apply_dilation(psi, 0.5)

    def test_rejects_nonpositive_scale(self, ground):
        with pytest.raises(ValueError):
            apply_dilation(ground, 0.0)
        with pytest.raises(ValueError):
            Dilation(-1.0)


class TestSpectralD2:
    def test_zero_identity(self, ground):
        out = apply_spectral_d2(ground, 0.0)
        assert np.abs(out.samples - ground.samples).max() < 1e-14

    def test_real_c_matches_kernel_quadrature(self, grid):
        c = 0.25
        psi = WaveFunction.from_callable(grid, lambda x: np.exp(-0.5 * x * x))
        out = apply_spectral_d2(psi, c)
        x, dx = grid.x, grid.dx
        prefactor = 1.0 / math.sqrt(4.0 * math.pi * c)
        probes = np.linspace(-4.0, 4.0, 32)
        for xp_ in probes:
            j = int(np.argmin(np.abs(x - xp_)))
            integral = prefactor * np.sum(np.exp(-((x - x[j]) ** 2) / (4 * c)) * psi.samples) * dx
            assert abs(out.samples[j] - integral) < 1e-7

    def test_fresnel_matches_free_gaussian(self, grid, ground):
        out = apply_spectral_d2(ground, 0.5j)
        w = 1.0 + 1j
        expected = math.pi**-0.25 / np.sqrt(w) * np.exp(-grid.x**2 / (2.0 * w))
        assert np.abs(out.samples - expected).max() < 1e-7

    def test_unitary_for_imaginary_c(self, ground):
        out = apply_spectral_d2(ground, 0.37j)
        assert abs(out.norm() - ground.norm()) < 1e-10

    def test_negative_real_part_refused(self, ground):
        with pytest.raises(ValueError):
            apply_spectral_d2(ground, -0.1)
        with pytest.raises(ValueError):
            SpectralD2(-0.1 + 1j)


class TestPhases:
    def test_zero_quadratic_identity(self, ground):
        out = apply_phase(ground, QuadraticPhase(0.0))
        assert np.abs(out.samples - ground.samples).max() < 1e-14

    def test_linear_phase_preserves_density(self, ground):
        out = apply_phase(ground, LinearPhase(0.8))
        assert np.abs(out.density() - ground.density()).max() < 1e-14

    def test_scalar_scales_norm(self, ground):
        out = apply_phase(ground, Scalar(cmath.exp(-0.5)))
        assert out.norm() == pytest.approx(math.exp(-0.5) * ground.norm(), abs=1e-12)


class TestFactorSequences:
    def test_zero_displacement_is_scalar_one(self):
        assert displacement_factors(0.0, 0.0) == [Scalar(1.0 + 0j)]

    def test_displacement_structure(self):
        factors = displacement_factors(1.0, 0.5)
        assert factors == [Shift(-1.0), LinearPhase(0.5), Scalar(cmath.exp(-0.25j))]

    def test_real_squeeze_structure(self):
        factors = squeeze_factors(SqueezeParameter(1.0, 0.0))
        assert len(factors) == 2
        assert isinstance(factors[0], Dilation)
        assert factors[0].scale == pytest.approx(math.exp(-1.0), abs=1e-15)
        assert factors[1].s == pytest.approx(math.exp(-0.5), abs=1e-15)

    def test_time_quarter_period_structure(self):
        factors = time_displacement_factors(math.pi / 4, 1)
        assert [type(f) for f in factors] == [SpectralD2, Dilation, QuadraticPhase, Scalar]
        assert factors[0].c == pytest.approx(0.5j, abs=1e-14)
        assert factors[1].scale == pytest.approx(math.sqrt(2.0), abs=1e-14)
        assert factors[2].a == pytest.approx(-0.5, abs=1e-14)
        assert factors[3].s == pytest.approx(2.0**0.25, abs=1e-14)

    def test_substep_guard(self):
        with pytest.raises(CausticError):
            time_displacement_factors(2.0, 1)
        time_displacement_factors(2.0, 2)  # fine once split

    def test_zero_time_is_identity_chain(self, ground):
        out = apply_chain(ground, time_displacement_factors(0.0, 3))
        assert np.abs(out.samples - ground.samples).max() < 1e-14


class TestChains:
    def test_empty_chain_identity(self, ground):
        out = apply_chain(ground, [])
        assert out.samples is ground.samples

    def test_real_squeeze_on_ground(self, grid, ground):
        out = apply_chain(ground, squeeze_factors(SqueezeParameter(1.0, 0.0)))
        s = math.e
        expected = (math.sqrt(math.pi) * s) ** -0.5 * np.exp(-grid.x**2 / (2 * s * s))
        assert np.abs(out.samples - expected).max() < 1e-8

    def test_displacement_on_ground_density(self, grid, ground):
        out = apply_chain(ground, displacement_factors(1.0, 0.5))
        expected = np.abs(coherent_state(grid.x, 1.0, 0.5)) ** 2
        assert np.abs(out.density() - expected).max() < 1e-9

    def test_associativity_of_splitting(self, ground):
        chain = time_displacement_factors(0.9, 1) + displacement_factors(0.3, -0.2)
        whole = apply_chain(ground, chain)
        split = apply_chain(apply_chain(ground, chain[:3]), chain[3:])
        assert np.abs(whole.samples - split.samples).max() < 1e-12

    def test_linearity(self, grid):
        rng = np.random.default_rng(21)
        psi1 = WaveFunction.from_callable(grid, lambda x: coherent_state(x, 1.0, 0.0))
        psi2 = WaveFunction.from_callable(grid, lambda x: coherent_state(x, -1.0, 0.4))
        a = complex(rng.standard_normal(), rng.standard_normal())
        b = complex(rng.standard_normal(), rng.standard_normal())
        chain = time_displacement_factors(0.6, 1)
        combined = apply_chain(psi1.with_samples(a * psi1.samples + b * psi2.samples), chain)
        separate = a * apply_chain(psi1, chain).samples + b * apply_chain(psi2, chain).samples
        assert np.abs(combined.samples - separate).max() < 1e-10

    def test_unitarity_of_named_chains(self, grid, ground):
        coherent = WaveFunction.from_callable(grid, lambda x: coherent_state(x, 1.0, 0.5))
        for psi, chain in [
            (ground, displacement_factors(1.0, 0.5)),
            (ground, squeeze_factors(SqueezeParameter(1.0, 0.0))),
            (coherent, time_displacement_factors(0.7, 1)),
            (coherent, squeeze_factors(SqueezeParameter(0.8, math.pi / 3))),
        ]:
            out = apply_chain(psi, chain)
            assert abs(out.norm() - psi.norm()) < 1e-9

    def test_error_carries_index_context(self, ground):
        with pytest.raises(ChainError, match="factor 1"):
            apply_chain(ground, [Scalar(1.0), Shift(20.0)])
