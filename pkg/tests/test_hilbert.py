import numpy as np
import pytest

from monosamp import kernels
from monosamp._validation import GridError
from monosamp.hilbert import (Grid, SampledSignal, analytic_signal, canonical_modulation,
                              hilbert_transform, inverse_ft, unitary_ft)


def gaussian_grid(n=4096, half=40.0):
    return Grid.over(-half, half, n)


def test_grid_half_open():
    g = Grid.over(-10 * np.pi, 10 * np.pi, 4096)
    assert g.t[2048] == 0.0
    assert g.t[-1] < 10 * np.pi
    with pytest.raises(GridError):
        Grid.over(1.0, 1.0, 10)
    with pytest.raises(GridError):
        Grid(0.0, 1.0, 1)


def test_gaussian_is_self_dual():
    g = gaussian_grid()
    sig = SampledSignal.sample(lambda t: np.exp(-t ** 2 / 2), g)
    spec = unitary_ft(sig)
    np.testing.assert_allclose(spec.values, np.exp(-spec.xi ** 2 / 2), atol=1e-12)


def test_shifted_gaussian_phase():
    g = Grid.over(-37.0, 43.0, 4096)
    sig = SampledSignal.sample(lambda t: np.exp(-(t - 3) ** 2 / 2), g)
    spec = unitary_ft(sig)
    expect = np.exp(-spec.xi ** 2 / 2) * np.exp(-3j * spec.xi)
    np.testing.assert_allclose(spec.values, expect, atol=1e-12)


def test_ft_round_trip():
    rng = np.random.default_rng(0)
    sig = SampledSignal(-123.4, 0.37, rng.standard_normal(1000))
    back = inverse_ft(unitary_ft(sig), real=True)
    assert back.origin == sig.origin and back.step == pytest.approx(sig.step)
    np.testing.assert_allclose(back.values, sig.values, atol=1e-12)


def test_parseval():
    rng = np.random.default_rng(1)
    sig = SampledSignal(0.0, 0.1, rng.standard_normal(512))
    spec = unitary_ft(sig)
    assert np.sum(np.abs(spec.values) ** 2) * spec.step == pytest.approx(
        np.sum(sig.values ** 2) * sig.step)


def test_hilbert_of_modulated_gaussian():
    g = gaussian_grid(8192, 60.0)
    t = g.t
    env = np.exp(-t ** 2 / 8)
    sig = SampledSignal.on(g, env * np.cos(6 * t))
    for pad in (1, 4):
        h = hilbert_transform(sig, pad).values
        np.testing.assert_allclose(h, env * np.sin(6 * t), atol=1e-10)


def test_hilbert_twice_is_minus_identity_for_zero_mean():
    rng = np.random.default_rng(2)
    x = rng.standard_normal(1024)
    x -= x.mean()
    sig = SampledSignal(0.0, 1.0, x)
    hh = hilbert_transform(hilbert_transform(sig, 1), 1).values
    # Nyquist bin is annihilated, so compare after removing it
    nyq = np.fft.rfft(x)[-1].real / x.size * (-1.0) ** np.arange(x.size)
    np.testing.assert_allclose(hh, -(x - nyq), atol=1e-12)


def test_hilbert_is_antisymmetric_operator():
    rng = np.random.default_rng(5)
    x, y = rng.standard_normal((2, 256))
    hx = hilbert_transform(SampledSignal(0.0, 1.0, x), 1).values
    hy = hilbert_transform(SampledSignal(0.0, 1.0, y), 1).values
    assert np.dot(hx, y) == pytest.approx(-np.dot(x, hy))


def test_hilbert_of_sinc_matches_closed_form():
    g = Grid.over(-200 * np.pi, 200 * np.pi, 2 ** 17)
    sig = SampledSignal.on(g, kernels.sinc(g.t))
    h = hilbert_transform(sig).values
    sl = sig.interior()
    assert np.max(np.abs(h - kernels.hilbert_sinc(g.t))[sl]) < 5e-3


def test_analytic_signal_has_no_negative_frequencies():
    rng = np.random.default_rng(7)
    sig = SampledSignal(0.0, 1.0, rng.standard_normal(2048))
    z = analytic_signal(sig, pad=1)
    spec = np.fft.fft(z.values)
    neg = spec[1025:]
    assert np.sum(np.abs(neg) ** 2) < 1e-20 * np.sum(np.abs(spec) ** 2)


def test_canonical_modulation_recovers_envelope_and_frequency():
    g = gaussian_grid(8192, 80.0)
    t = g.t
    env = 1 + 0.3 * np.exp(-t ** 2 / 50)
    w = 2 * np.pi * 127 / 160.0  # whole number of periods in the window
    sig = SampledSignal.on(g, env * np.cos(w * t + 0.2))
    pair = canonical_modulation(sig, pad=1)
    sl = sig.interior(0.2)
    np.testing.assert_allclose(pair.amplitude.values[sl], env[sl], atol=1e-3)
    freq = pair.instantaneous_frequency().values[sl]
    np.testing.assert_allclose(freq, w, atol=1e-3)


def test_canonical_modulation_holds_phase_on_zero_signal():
    sig = SampledSignal(0.0, 1.0, np.zeros(64))
    pair = canonical_modulation(sig)
    assert np.all(pair.amplitude.values == 0)
    assert np.all(pair.phase.values == 0)


def test_complex_input_rejected():
    sig = SampledSignal(0.0, 1.0, np.ones(8) + 1j)
    with pytest.raises(TypeError):
        hilbert_transform(sig)
    with pytest.raises(ValueError):
        hilbert_transform(SampledSignal(0.0, 1.0, np.ones(8)), pad=0)


def test_signal_csv_round_trip(tmp_path):
    rng = np.random.default_rng(4)
    sig = SampledSignal(-3.0, 0.25, rng.standard_normal(40))
    path = tmp_path / "s.csv"
    sig.to_csv(str(path))
    back = SampledSignal.from_csv(str(path))
    np.testing.assert_array_equal(back.values, sig.values)
    zsig = sig.with_values(sig.values + 1j * sig.values[::-1])
    zsig.to_csv(str(path))
    np.testing.assert_array_equal(SampledSignal.from_csv(str(path)).values, zsig.values)


def test_signal_validation():
    with pytest.raises(ValueError):
        SampledSignal(0.0, 1.0, [0.0, np.nan])
    with pytest.raises(GridError):
        SampledSignal(0.0, -1.0, [0.0, 1.0])
    with pytest.raises(GridError):
        SampledSignal(0.0, 1.0, np.zeros((2, 2)))
