"""Discrete unitary Fourier transform, Hilbert transform and analytic signals.

Signals live on uniform grids ``t_n = origin + n * step``. The discrete
transforms approximate the continuous unitary transform by a Riemann sum
evaluated on the dual grid with spacing ``2 pi / (count * step)``; the pair
:func:`unitary_ft` / :func:`inverse_ft` is exactly invertible.

The Hilbert transform applies the multiplier ``-i sgn(xi)`` with
``sgn(0) = 0``. Signals in this package decay slowly (like ``1/t``), so by
default the input is zero-padded to ``pad`` times its length before the
multiplier is applied. This keeps the cotangent kernel of the periodic
transform close to the ``1/(pi t)`` kernel of the continuous one over the
observed window; ``pad=1`` gives the plain circular transform.
"""
import io
from dataclasses import dataclass, field

import numpy as np
import scipy.fft as sfft

from ._io import read_columns, write_columns
from ._validation import GridError, check_grid
from .spectrum import Spectrum

_SQRT_2PI = np.sqrt(2.0 * np.pi)

DEFAULT_PAD = 4
#: Fraction of the grid excluded at each end by interior error measures.
GUARD_FRACTION = 0.05
#: Amplitude below which the canonical phase is held from the previous sample.
AMPLITUDE_FLOOR = 1e-8


@dataclass(frozen=True)
class Grid:
    """Uniform grid ``origin + step * arange(count)`` (right end excluded)."""

    origin: float
    step: float
    count: int

    def __post_init__(self):
        check_grid(self.origin, self.step, self.count)
        object.__setattr__(self, "origin", float(self.origin))
        object.__setattr__(self, "step", float(self.step))
        object.__setattr__(self, "count", int(self.count))

    @classmethod
    def over(cls, tmin, tmax, points):
        """Grid of ``points`` samples covering ``[tmin, tmax)``."""
        if not tmin < tmax:
            raise GridError(f"need tmin < tmax, got [{tmin!r}, {tmax!r}]")
        return cls(tmin, (tmax - tmin) / points, points)

    @property
    def t(self):
        return self.origin + self.step * np.arange(self.count)

    @property
    def half_width(self):
        return 0.5 * self.count * self.step


@dataclass(frozen=True)
class SampledSignal:
    """Real or complex samples on a uniform time grid."""

    origin: float
    step: float
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = np.array(self.values)
        if values.dtype.kind not in "fc":
            values = values.astype(float)
        if values.ndim != 1:
            raise GridError("signal values must be one-dimensional")
        check_grid(self.origin, self.step, values.size)
        if not np.all(np.isfinite(values)):
            raise ValueError("signal values must be finite")
        values.setflags(write=False)
        object.__setattr__(self, "origin", float(self.origin))
        object.__setattr__(self, "step", float(self.step))
        object.__setattr__(self, "values", values)

    @classmethod
    def on(cls, grid, values):
        return cls(grid.origin, grid.step, values)

    @classmethod
    def sample(cls, func, grid):
        """Evaluate ``func(t)`` on ``grid``."""
        return cls(grid.origin, grid.step, func(grid.t))

    @property
    def count(self):
        return self.values.size

    @property
    def grid(self):
        return Grid(self.origin, self.step, self.count)

    @property
    def t(self):
        return self.origin + self.step * np.arange(self.count)

    @property
    def is_complex(self):
        return np.iscomplexobj(self.values)

    def interior(self, guard=GUARD_FRACTION):
        """Slice dropping ``guard * count`` samples at each end."""
        g = int(guard * self.count)
        return slice(g, self.count - g)

    def with_values(self, values):
        return SampledSignal(self.origin, self.step, values)

    def to_csv(self, target):
        """Write ``t,value`` rows, or ``t,re,im`` for complex signals."""
        if self.is_complex:
            write_columns(target, ("t", "re", "im"),
                          (self.t, self.values.real, self.values.imag))
        else:
            write_columns(target, ("t", "value"), (self.t, self.values))

    @classmethod
    def from_csv(cls, path):
        with open(path) as fh:
            text = fh.read()
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        if first.replace(" ", "") == "t,re,im":
            t, re, im = read_columns(io.StringIO(text), ("t", "re", "im"))
            values = re + 1j * im
        else:
            t, values = read_columns(io.StringIO(text), ("t", "value"))
        if t.size < 2:
            raise GridError("a signal file needs at least 2 rows")
        step = (t[-1] - t[0]) / (t.size - 1)
        if not np.allclose(np.diff(t), step, rtol=1e-9, atol=0):
            raise GridError("signal file is not on a uniform grid")
        return cls(t[0], step, values)


@dataclass(frozen=True)
class CanonicalPair:
    """Instantaneous amplitude and unwrapped phase of a real signal."""

    amplitude: SampledSignal
    phase: SampledSignal

    def instantaneous_frequency(self):
        """Phase derivative by central differences (one-sided at the ends)."""
        return self.phase.with_values(np.gradient(self.phase.values, self.phase.step))


def _dual_step(count, step):
    return 2.0 * np.pi / (count * step)


def _phase_factors(n, dt, dxi, t0, xi0):
    # forward and inverse share these exactly, so the round trip is exact to
    # FFT round-off even when xi * t0 is large
    j = np.arange(n)
    return np.exp(-1j * xi0 * t0), np.exp(-1j * dxi * t0 * j), np.exp(-1j * xi0 * dt * j)


def unitary_ft(sig):
    """Riemann-sum approximation of the unitary Fourier transform.

    The result lives on ``xi_m = (m - count // 2) * dxi`` with
    ``dxi = 2 pi / (count * step)``, i.e. centred with zero on the grid.
    """
    n = sig.count
    if n < 2:
        raise GridError("need at least 2 samples")
    dxi = _dual_step(n, sig.step)
    xi0 = -(n // 2) * dxi
    c, a_m, b_n = _phase_factors(n, sig.step, dxi, sig.origin, xi0)
    values = sig.step / _SQRT_2PI * c * a_m * sfft.fft(sig.values * b_n)
    return Spectrum(xi0, dxi, values, time_origin=sig.origin)


def inverse_ft(spec, origin=None, real=False):
    """Inverse of :func:`unitary_ft` on the dual time grid.

    ``origin`` sets the first sample time; it defaults to the spectrum's
    ``time_origin`` and otherwise to a grid centred on ``t = 0``. With
    ``real=True`` the (round-off level) imaginary part is dropped.
    """
    n = spec.count
    if n < 2:
        raise GridError("need at least 2 frequency samples")
    dt = _dual_step(n, spec.step)
    if origin is None:
        origin = spec.time_origin if spec.time_origin is not None else -(n // 2) * dt
    c, a_m, b_n = _phase_factors(n, dt, spec.step, origin, spec.origin)
    values = (spec.step * n / _SQRT_2PI * np.conj(c) * np.conj(b_n)
              * sfft.ifft(spec.values * np.conj(a_m)))
    if real:
        values = values.real
    return SampledSignal(origin, dt, values)


def _require_real(sig):
    if sig.is_complex:
        raise TypeError("the Hilbert transform here takes real signals; "
                        "use analytic_signal for the complex path")


def hilbert_transform(sig, pad=DEFAULT_PAD):
    """Hilbert transform through the frequency multiplier ``-i sgn(xi)``.

    The DC and Nyquist bins are annihilated, which keeps the operator real
    and exactly anti-symmetric. Zero-mean input is needed for ``H^2 = -I``.

    Parameters
    ----------
    sig : SampledSignal
        Real-valued input.
    pad : int, optional
        Zero-padding factor applied before the transform.
    """
    _require_real(sig)
    if pad < 1:
        raise ValueError("pad must be >= 1")
    n = sig.count
    size = n * int(pad)
    spec = sfft.rfft(sig.values, size)
    spec[0] = 0.0
    spec[1:] *= -1j
    if size % 2 == 0:
        spec[-1] = 0.0
    return sig.with_values(sfft.irfft(spec, size)[:n])


def analytic_signal(sig, pad=DEFAULT_PAD):
    """``f + i H f`` for real ``f``; its transform vanishes on negative frequencies."""
    _require_real(sig)
    return sig.with_values(sig.values + 1j * hilbert_transform(sig, pad).values)


def canonical_modulation(sig, pad=DEFAULT_PAD, floor=AMPLITUDE_FLOOR):
    """Amplitude and unwrapped phase of the analytic signal.

    Where the amplitude drops below ``floor`` the argument is undefined and
    the phase of the previous sample is carried forward.
    """
    z = analytic_signal(sig, pad).values
    amp = np.abs(z)
    angle = np.angle(z)
    valid = amp >= floor
    if not np.all(valid):
        if np.any(valid):
            idx = np.where(valid, np.arange(amp.size), 0)
            np.maximum.accumulate(idx, out=idx)
            first = np.argmax(valid)
            idx[:first] = first
            angle = angle[idx]
        else:
            angle = np.zeros_like(angle)
    phase = np.unwrap(angle)
    return CanonicalPair(sig.with_values(amp), sig.with_values(phase))
