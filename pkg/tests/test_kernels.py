import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monosamp import kernels
from monosamp._validation import DomainError, kappa

a_values = st.floats(min_value=-0.95, max_value=0.95, allow_nan=False)
t_values = st.floats(min_value=-200.0, max_value=200.0, allow_nan=False)


@pytest.mark.parametrize("a", [0.0, 0.3, 0.5, -0.6])
def test_sinc_a_peak_and_zeros(a):
    n = np.arange(-50, 51)
    vals = kernels.sinc_a(a, n * np.pi)
    assert vals[50] == pytest.approx(kappa(a), abs=1e-14)
    assert np.max(np.abs(np.delete(vals, 50))) < 1e-13


@given(a_values, t_values)
def test_blaschke_phase_matches_theta(a, t):
    z = kernels.blaschke(a, np.exp(1j * t))
    assert abs(z) == pytest.approx(1.0, abs=1e-12)
    th = kernels.phase_theta(a, t)
    assert np.exp(1j * th) == pytest.approx(z, abs=1e-10)
    assert kernels.cos_theta(a, t) == pytest.approx(z.real, abs=1e-10)
    assert kernels.sin_theta(a, t) == pytest.approx(z.imag, abs=1e-10)


@given(a_values)
def test_phase_is_increasing_and_advances_2pi(a):
    t = np.linspace(-10, 10, 2001)
    th = kernels.phase_theta(a, t)
    assert np.all(np.diff(th) > 0)
    assert kernels.phase_theta(a, np.pi) - kernels.phase_theta(a, -np.pi) == pytest.approx(2 * np.pi)


def test_poisson_kernel_is_phase_derivative():
    a = 0.7
    t = np.linspace(-7, 7, 301)
    h = 1e-5
    fd = (kernels.phase_theta(a, t + h) - kernels.phase_theta(a, t - h)) / (2 * h)
    np.testing.assert_allclose(fd, kernels.poisson_kernel(a, t), rtol=1e-7)
    # mean value over a period is 1
    u = np.linspace(-np.pi, np.pi, 4096, endpoint=False)
    assert np.mean(kernels.poisson_kernel(a, u)) == pytest.approx(1.0, abs=1e-12)


def test_cosinc_a_against_direct_formula():
    a = 0.5
    t = np.linspace(0.5, 100, 1000)
    t = np.concatenate([-t, t])
    p = kernels.poisson_kernel(a, t)
    direct = kappa(a) * p * (1 - np.cos(t)) / t
    np.testing.assert_allclose(kernels.cosinc_a(a, t), direct, rtol=1e-12, atol=1e-15)


def test_small_argument_values_are_smooth():
    a = 0.5
    t = np.array([-1e-9, 0.0, 1e-9])
    s = kernels.sinc_a(a, t)
    assert np.all(np.abs(s - 3.0) < 1e-12)
    c = kernels.cosinc_a(a, t)
    assert c[1] == 0.0
    assert c[0] == pytest.approx(-c[2])
    assert abs(c[2]) < 1e-8


@given(a_values, t_values)
@settings(max_examples=50)
def test_parity(a, t):
    assert kernels.sinc_a(a, -t) == pytest.approx(kernels.sinc_a(a, t), abs=1e-12)
    assert kernels.cosinc_a(a, -t) == pytest.approx(-kernels.cosinc_a(a, t), abs=1e-12)


def test_a_zero_gives_classic_kernels():
    t = np.linspace(-60, 60, 5001)
    np.testing.assert_array_equal(kernels.poisson_kernel(0.0, t), 1.0)
    np.testing.assert_allclose(kernels.sinc_a(0.0, t), np.sinc(t / np.pi), atol=1e-15)
    ref = np.where(t == 0, 0.0, (1 - np.cos(t)) / np.where(t == 0, 1, t))
    np.testing.assert_allclose(kernels.cosinc_a(0.0, t), ref, atol=1e-12)
    np.testing.assert_allclose(kernels.phase_theta(0.0, t), t, atol=1e-15)


def test_fourier_coefficients_match_power_series():
    # B_a(z) = -a + (1 - a^2) sum_{k>=1} a^(k-1) z^k
    a = -0.4
    k = np.arange(-3, 30)
    c = kernels.fourier_coeff_exp_phase(a, k)
    assert np.all(c[k < 0] == 0)
    assert c[k == 0][0] == pytest.approx(-a)
    z = 0.3 + 0.2j
    series = np.sum(c[k >= 0] * z ** k[k >= 0])
    assert series == pytest.approx(kernels.blaschke(a, z), abs=1e-14)


def test_scalar_in_scalar_out():
    assert isinstance(kernels.sinc_a(0.5, 1.0), float)
    assert kernels.sinc_a(0.5, [1.0, 2.0]).shape == (2,)


@pytest.mark.parametrize("bad", [1.0, -1.0, 1.5, np.nan, True, 0.5 + 0j, "0.5"])
def test_invalid_a_rejected(bad):
    with pytest.raises(DomainError):
        kernels.sinc_a(bad, 0.0)


def test_pole_rejected():
    with pytest.raises(DomainError):
        kernels.blaschke(0.5, 2.0)


def test_nonfinite_points_rejected():
    with pytest.raises(ValueError):
        kernels.cosinc_a(0.5, [0.0, np.inf])
