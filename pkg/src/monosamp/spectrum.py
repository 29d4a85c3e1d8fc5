"""Frequency-domain objects: the symmetric cascade filter and its relatives.

All Fourier transforms use the unitary convention

    F g(xi) = (2 pi)^(-1/2) * integral g(t) exp(-i xi t) dt.

The cascade filter is ``H_a(xi) = a^n`` on ``I_n = (-(n+1), -n] U [n, n+1)``,
which amounts to ``a ** floor(|xi|)``: the half-open convention places
``xi = n`` and ``xi = -n`` in the same band, so ``H_a`` is exactly even.
"""
from dataclasses import dataclass, field

import numpy as np
from scipy.signal import fftconvolve

from ._io import read_columns, write_columns
from ._validation import GridError, check_a, check_points

_SQRT_2PI = np.sqrt(2.0 * np.pi)


@dataclass(frozen=True)
class Spectrum:
    """Complex samples on the uniform frequency grid ``origin + step * j``.

    ``time_origin`` records the first sample time of the signal the
    spectrum came from, so :func:`monosamp.hilbert.inverse_ft` can restore
    it; ``None`` means a grid centred on ``t = 0``.
    """

    origin: float
    step: float
    values: np.ndarray = field(repr=False)
    time_origin: float | None = None

    def __post_init__(self):
        values = np.array(self.values, dtype=complex)
        if values.ndim != 1 or values.size < 2:
            raise GridError("a spectrum needs a 1-D array of at least 2 values")
        if not (np.isfinite(self.step) and self.step > 0):
            raise GridError(f"frequency step must be positive, got {self.step!r}")
        if not np.isfinite(self.origin):
            raise GridError("frequency origin must be finite")
        if not np.all(np.isfinite(values)):
            raise ValueError("spectrum values must be finite")
        values.setflags(write=False)
        object.__setattr__(self, "origin", float(self.origin))
        object.__setattr__(self, "step", float(self.step))
        object.__setattr__(self, "values", values)

    @property
    def count(self):
        return self.values.size

    @property
    def xi(self):
        return self.origin + self.step * np.arange(self.count)

    def to_csv(self, target):
        """Write ``xi,re,im`` rows."""
        write_columns(target, ("xi", "re", "im"),
                      (self.xi, self.values.real, self.values.imag))

    @classmethod
    def from_csv(cls, source):
        xi, re, im = read_columns(source, ("xi", "re", "im"))
        if xi.size < 2:
            raise GridError("a spectrum file needs at least 2 rows")
        step = (xi[-1] - xi[0]) / (xi.size - 1)
        if not np.allclose(np.diff(xi), step, rtol=1e-9, atol=0):
            raise GridError("spectrum file is not on a uniform grid")
        return cls(xi[0], step, re + 1j * im)


def cascade_filter(a, xi):
    """Symmetric cascade filter ``H_a(xi) = a ** floor(|xi|)``."""
    a = check_a(a)
    xi = check_points(xi, "xi")
    n = np.floor(np.abs(xi))
    return np.power(a, n)[()]


def one_sided_filter(a, xi, side):
    """``H_a`` restricted to the open half-line ``xi > 0`` (``"plus"``) or ``xi < 0``."""
    a = check_a(a)
    xi = check_points(xi, "xi")
    if side == "plus":
        mask = xi > 0
    elif side == "minus":
        mask = xi < 0
    else:
        raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")
    return np.where(mask, np.power(a, np.floor(np.abs(xi))), 0.0)[()]


def _ft_plus(a, xi):
    # (1 - e^{-i xi})/(i xi) = e^{-i xi/2} sinc(xi/2): no cancellation at 0
    half = np.exp(-0.5j * xi) * np.sinc(xi / (2.0 * np.pi))
    return half / (1.0 - a * np.exp(-1j * xi)) / _SQRT_2PI


def ft_one_sided_plus(a, xi):
    """Closed-form unitary Fourier transform of the one-sided filter ``H_a^+``.

    ``(2 pi)^(-1/2) (1 - a e^{-i xi})^(-1) (1 - e^{-i xi})/(i xi)``, equal to
    ``(2 pi)^(-1/2)/(1 - a)`` at ``xi = 0``.
    """
    a = check_a(a)
    xi = check_points(xi, "xi")
    return _ft_plus(a, xi)[()]


def ft_one_sided_minus(a, xi):
    """Fourier transform of ``H_a^-``; ``H_a^-(t) = H_a^+(-t)`` gives ``FT^+(-xi)``."""
    a = check_a(a)
    xi = check_points(xi, "xi")
    return _ft_plus(a, -xi)[()]


def sinc_a_spectrum(a, xi):
    """Unitary Fourier transform of ``sinc_a``: ``sqrt(pi/2) (1 + a) H_a(xi)``."""
    a = check_a(a)
    return (np.sqrt(np.pi / 2.0) * (1.0 + a) * cascade_filter(a, xi))[()]


def sample_spectrum(func, origin, step, count, time_origin=None):
    """Evaluate ``func(xi)`` on a uniform frequency grid and wrap it as a :class:`Spectrum`."""
    xi = origin + step * np.arange(count)
    return Spectrum(origin, step, func(xi), time_origin)


def _integer_shift(spec):
    m = int(round(1.0 / spec.step))
    if m < 1 or abs(m * spec.step - 1.0) > 1e-9:
        raise GridError(f"frequency step {spec.step!r} does not divide 1; "
                        "integer shifts would fall off the grid")
    return m


def _shift_pairs(spec, nmax, guard):
    """Yield ``(n, j, j_shifted)`` index arrays for every admissible shift."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    m = _integer_shift(spec)
    xi = spec.xi
    j = np.arange(spec.count)
    nonzero = np.abs(xi) > 0.5 * spec.step
    if guard > 0:
        dist = np.abs(xi - np.round(xi))
        nonzero &= dist >= guard
    pos = j[nonzero & (xi > 0)]
    neg = j[nonzero & (xi < 0)]
    for n in range(1, nmax + 1):
        p = pos[pos + n * m < spec.count]
        q = neg[neg - n * m >= 0]
        yield n, np.concatenate([p, q]), np.concatenate([p + n * m, q - n * m])


def spectral_shift_residual(spec, a, nmax, guard=0.0):
    """Largest violation of ``F(xi + sgn(xi) n) = a^n F(xi)`` on the grid.

    Parameters
    ----------
    spec : Spectrum
        Frequency step must divide 1 so integer shifts land on grid points.
    a : float
    nmax : int
        Shifts ``1 <= n <= nmax`` are tested; pairs leaving the grid are skipped.
    guard : float, optional
        Points closer than ``guard`` to an integer are skipped. The
        characterisation is an almost-everywhere statement and the jumps of
        ``H_a`` sit at the integers, where sampled transforms ring.

    Returns
    -------
    float
        ``max |F(xi + sgn(xi) n) - a^n F(xi)|``; 0 when no pair qualifies.
    """
    a = check_a(a)
    v = spec.values
    worst = 0.0
    for n, j, k in _shift_pairs(spec, nmax, guard):
        if j.size:
            worst = max(worst, float(np.max(np.abs(v[k] - a ** n * v[j]))))
    return worst


def shift_residual_bound(spec, a, nmax, guard=0.05):
    """Predicted truncation error of :func:`spectral_shift_residual` for a sampled transform.

    A transform computed from a signal observed on a window of half-width
    ``T = pi / step`` is the true transform convolved with
    ``sin(T x)/(pi x)``. Away from a jump ``J`` at ``xi_j`` this rings with
    amplitude at most ``|J| / (pi T |xi - xi_j|)``. Jumps are estimated
    from the spectrum itself at the integers, just outside the guard band,
    and the bound combines the two ends of every tested pair.
    """
    a = check_a(a)
    _integer_shift(spec)
    v = spec.values
    xi = spec.xi
    T = np.pi / spec.step
    off = max(1, int(np.ceil(guard / spec.step)))
    ints = np.arange(np.ceil(xi[0]), np.floor(xi[-1]) + 1)
    idx = np.round((ints - spec.origin) / spec.step).astype(int)
    ok = (idx - off >= 0) & (idx + off < spec.count)
    ints, idx = ints[ok], idx[ok]
    jumps = np.abs(v[idx + off] - v[idx - off])
    if jumps.size == 0 or jumps.max() == 0:
        return 0.0
    train = np.zeros(spec.count)
    train[idx] = jumps
    lag = spec.step * np.arange(-(spec.count - 1), spec.count)
    kernel = 1.0 / (np.pi * T * np.maximum(np.abs(lag), spec.step))
    ringing = fftconvolve(train, kernel)[spec.count - 1:2 * spec.count - 1]
    worst = 0.0
    for n, j, k in _shift_pairs(spec, nmax, guard):
        if j.size:
            worst = max(worst, float(np.max(ringing[k] + abs(a) ** n * ringing[j])))
    return worst
