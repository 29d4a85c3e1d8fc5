import io

import numpy as np
import pytest

from monosamp import spectrum
from monosamp._io import DataError
from monosamp._validation import GridError
from monosamp.spectrum import Spectrum


def test_cascade_filter_bands():
    a = 0.5
    xi = np.array([0.0, 0.5, 0.999, 1.0, 1.5, 2.0, 3.25, -0.5, -1.0, -2.5])
    expect = np.array([1, 1, 1, 0.5, 0.5, 0.25, 0.125, 1, 0.5, 0.25])
    np.testing.assert_array_equal(spectrum.cascade_filter(a, xi), expect)


def test_cascade_filter_even():
    xi = np.linspace(-7, 7, 1401)
    h = spectrum.cascade_filter(-0.3, xi)
    np.testing.assert_array_equal(h, h[::-1])


def test_one_sided_parts_sum_to_filter_off_zero():
    a = 0.4
    xi = np.linspace(-5, 5, 1000)
    plus = spectrum.one_sided_filter(a, xi, "plus")
    minus = spectrum.one_sided_filter(a, xi, "minus")
    np.testing.assert_array_equal(plus + minus, spectrum.cascade_filter(a, xi))
    assert spectrum.one_sided_filter(a, 0.0, "plus") == 0.0
    with pytest.raises(ValueError):
        spectrum.one_sided_filter(a, xi, "both")


def test_ft_plus_at_zero_and_minus_symmetry():
    a = 0.5
    assert spectrum.ft_one_sided_plus(a, 0.0) == pytest.approx(1 / (np.sqrt(2 * np.pi) * (1 - a)))
    xi = np.linspace(-8, 8, 321)
    plus = spectrum.ft_one_sided_plus(a, xi)
    minus = spectrum.ft_one_sided_minus(a, xi)
    np.testing.assert_allclose(minus, spectrum.ft_one_sided_plus(a, -xi), atol=1e-15)
    np.testing.assert_allclose(minus, np.conj(plus), atol=1e-15)


def test_ft_plus_matches_geometric_sum():
    # H_a^+ = sum a^k 1_[k,k+1): transform of each indicator is elementary
    a, xi = -0.6, np.array([-3.0, -0.2, 0.7, 4.4])
    total = 0
    for k in range(200):
        total = total + a ** k * (np.exp(-1j * xi * k) - np.exp(-1j * xi * (k + 1))) / (1j * xi)
    np.testing.assert_allclose(spectrum.ft_one_sided_plus(a, xi), total / np.sqrt(2 * np.pi),
                               atol=1e-14)


def test_exact_spectrum_has_zero_shift_residual():
    a = 0.5
    spec = spectrum.sample_spectrum(lambda x: spectrum.sinc_a_spectrum(a, x), -10, 1 / 64, 1280)
    assert spectrum.spectral_shift_residual(spec, a, 4) < 1e-15
    # a spectrum with the wrong decay violates the shift relation
    wrong = spectrum.sample_spectrum(lambda x: spectrum.cascade_filter(0.3, x), -10, 1 / 64, 1280)
    assert spectrum.spectral_shift_residual(wrong, a, 1) > 0.1


def test_guard_excludes_points_near_integers():
    a = 0.5
    spec = spectrum.sample_spectrum(lambda x: np.exp(-x ** 2), -4, 0.125, 64)
    assert spectrum.spectral_shift_residual(spec, a, 1, guard=0.6) == 0.0


def test_shift_requires_compatible_step():
    spec = spectrum.sample_spectrum(lambda x: 0 * x, -1, 0.3, 10)
    with pytest.raises(GridError):
        spectrum.spectral_shift_residual(spec, 0.5, 1)


def test_bound_is_zero_without_jumps():
    spec = spectrum.sample_spectrum(lambda x: 0 * x, -4, 1 / 8, 64)
    assert spectrum.shift_residual_bound(spec, 0.5, 2) == 0.0


def test_spectrum_csv_round_trip_bit_exact():
    rng = np.random.default_rng(3)
    spec = Spectrum(-2.0, 0.125, rng.standard_normal(32) + 1j * rng.standard_normal(32))
    buf = io.StringIO()
    spec.to_csv(buf)
    back = Spectrum.from_csv(io.StringIO(buf.getvalue()))
    np.testing.assert_array_equal(back.values, spec.values)
    np.testing.assert_array_equal(back.xi, spec.xi)


def test_spectrum_csv_errors():
    with pytest.raises(DataError) as exc:
        Spectrum.from_csv(io.StringIO("xi,re,im\n0,1,0\n1,oops,0\n"))
    assert exc.value.line == 3
    with pytest.raises(GridError):
        Spectrum.from_csv(io.StringIO("xi,re,im\n0,1,0\n1,1,0\n3,1,0\n"))
    with pytest.raises(DataError):
        Spectrum.from_csv(io.StringIO("f,re,im\n0,1,0\n"))


def test_spectrum_values_read_only():
    spec = Spectrum(0.0, 1.0, [1, 2, 3])
    with pytest.raises(ValueError):
        spec.values[0] = 5
