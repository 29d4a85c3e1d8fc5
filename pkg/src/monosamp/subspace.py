"""The Bedrosian subspace ``S_a`` and sampling at ``t = 2 k pi``.

``S_a`` holds the finite-energy real ``rho`` with
``H(rho cos theta_a) = rho sin theta_a``. Its elements are exactly the
expansions

    rho(t) = sum_k r_k sinc_a(t - 2k pi) + sum_k s_k cosinc_a(t - 2k pi)

and every element is recovered from the samples ``rho(2k pi)`` and
``H rho(2k pi)`` through

    rho(t) = (1-a)/(1+a) sum_k [rho(2k pi) sinc_a(t - 2k pi)
                                - H rho(2k pi) cosinc_a(t - 2k pi)].

Since ``H sinc_a = cosinc_a`` and ``H^2 = -I``, the Hilbert transform acts
on coefficients as ``(r, s) -> (-s, r)``.
"""
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import trapezoid

from . import kernels
from ._io import DataError, read_columns, write_columns
from ._validation import check_a, check_points, check_real_values, kappa, kappa_max
from .hilbert import DEFAULT_PAD, GUARD_FRACTION, SampledSignal, hilbert_transform, unitary_ft
from .spectrum import shift_residual_bound, spectral_shift_residual

TWO_PI = 2.0 * np.pi
#: Extra shifts added on both sides of a sample support when truncating.
DEFAULT_TRUNCATION = 16


def _contiguous(k, columns, what):
    """Place rows keyed by integer ``k`` into contiguous arrays (gaps are zero)."""
    if k.size == 0:
        return 0, [np.zeros(0) for _ in columns]
    if np.unique(k).size != k.size:
        raise DataError(f"duplicate k values in {what}")
    kmin = int(k.min())
    n = int(k.max()) - kmin + 1
    out = []
    for col in columns:
        arr = np.zeros(n)
        arr[k - kmin] = col
        out.append(arr)
    return kmin, out


@dataclass(frozen=True)
class CoefficientPair:
    """Expansion coefficients ``r_k``, ``s_k`` for ``k = kmin, ..., kmin + len - 1``."""

    kmin: int
    r: np.ndarray = field(repr=False)
    s: np.ndarray = field(repr=False)

    def __post_init__(self):
        r = np.array(self.r, dtype=float).ravel()
        s = np.array(self.s, dtype=float).ravel()
        if r.shape != s.shape:
            raise ValueError("r and s must have the same length")
        if not (np.all(np.isfinite(r)) and np.all(np.isfinite(s))):
            raise ValueError("coefficients must be finite")
        r.setflags(write=False)
        s.setflags(write=False)
        object.__setattr__(self, "kmin", int(self.kmin))
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)

    @classmethod
    def random(cls, rng, kmin, kmax, scale=1.0):
        """Independent normal coefficients on ``kmin..kmax``."""
        n = kmax - kmin + 1
        return cls(kmin, scale * rng.standard_normal(n), scale * rng.standard_normal(n))

    @property
    def k(self):
        return np.arange(self.kmin, self.kmin + self.r.size)

    def __len__(self):
        return self.r.size

    def shifted(self, m):
        """Coefficients of the expansion translated by ``2 m pi``."""
        return CoefficientPair(self.kmin + m, self.r, self.s)

    def hilbert(self):
        """Coefficients of the Hilbert transform of the expansion."""
        return CoefficientPair(self.kmin, -self.s, self.r)

    def to_csv(self, target):
        write_columns(target, ("k", "r", "s"), (self.k, self.r, self.s))

    @classmethod
    def from_csv(cls, source):
        k, r, s = read_columns(source, ("k", "r", "s"), integer_columns=(0,))
        kmin, (r, s) = _contiguous(k, (r, s), "coefficient file")
        return cls(kmin, r, s)


@dataclass(frozen=True)
class SampleSet:
    """Samples ``rho(2k pi)`` and ``H rho(2k pi)`` for consecutive ``k``."""

    kmin: int
    rho: np.ndarray = field(repr=False)
    hrho: np.ndarray = field(repr=False)

    def __post_init__(self):
        rho = np.array(self.rho, dtype=float).ravel()
        hrho = np.array(self.hrho, dtype=float).ravel()
        if rho.shape != hrho.shape:
            raise ValueError("rho and hrho must have the same length")
        if not (np.all(np.isfinite(rho)) and np.all(np.isfinite(hrho))):
            raise ValueError("samples must be finite")
        rho.setflags(write=False)
        hrho.setflags(write=False)
        object.__setattr__(self, "kmin", int(self.kmin))
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "hrho", hrho)

    @property
    def k(self):
        return np.arange(self.kmin, self.kmin + self.rho.size)

    def __len__(self):
        return self.rho.size

    def truncated(self, kmax_abs):
        """Keep only ``|k| <= kmax_abs``."""
        keep = np.abs(self.k) <= kmax_abs
        if not np.any(keep):
            return SampleSet(0, [], [])
        first = int(self.k[keep][0])
        return SampleSet(first, self.rho[keep], self.hrho[keep])

    def to_csv(self, target):
        write_columns(target, ("k", "rho", "hrho"), (self.k, self.rho, self.hrho))

    @classmethod
    def from_csv(cls, source):
        k, rho, hrho = read_columns(source, ("k", "rho", "hrho"), integer_columns=(0,))
        kmin, (rho, hrho) = _contiguous(k, (rho, hrho), "sample file")
        return cls(kmin, rho, hrho)


def evaluate_expansion(a, coeffs, t):
    """Pointwise value of ``sum r_k sinc_a(t - 2k pi) + s_k cosinc_a(t - 2k pi)``.

    ``p_a``, ``sin`` and ``cos`` are 2*pi-periodic, so away from the nodes
    the sum factors as ``p_a(t) [sin t A(t) + kappa (1 - cos t) B(t)]`` with
    ``A = sum r_k/(t - 2k pi)`` and ``B = sum s_k/(t - 2k pi)``. Within unit
    distance of a node the kernels are evaluated directly.
    """
    a = check_a(a)
    t = check_points(t)
    shape = t.shape
    t = t.ravel()
    A = np.zeros(t.shape)
    B = np.zeros(t.shape)
    near = np.zeros(t.shape)
    for k, r, s in zip(coeffs.k, coeffs.r, coeffs.s):
        if r == 0 and s == 0:
            continue
        u = t - TWO_PI * k
        close = np.abs(u) < 1.0
        inv = 1.0 / np.where(close, 1.0, u)
        inv[close] = 0.0
        if r:
            A += r * inv
        if s:
            B += s * inv
        if np.any(close):
            uc = u[close]
            near[close] += r * kernels.sinc_a(a, uc) + s * kernels.cosinc_a(a, uc)
    p = kernels.poisson_kernel(a, t)
    one_minus_cos = 2.0 * np.sin(0.5 * t) ** 2
    out = p * (np.sin(t) * A + kappa(a) * one_minus_cos * B) + near
    return out.reshape(shape)[()]


def synthesize(a, coeffs, grid):
    """Evaluate the expansion with ``coeffs`` on ``grid``; returns a :class:`SampledSignal`."""
    return SampledSignal.on(grid, np.atleast_1d(evaluate_expansion(a, coeffs, grid.t)))


def sample_expansion(a, coeffs, kmin=None, kmax=None):
    """Exact samples ``rho(2n pi)`` and ``H rho(2n pi)`` of an expansion.

    ``H rho`` is evaluated through the coefficient map ``(r, s) -> (-s, r)``,
    so no numerical Hilbert transform is involved.
    """
    if kmin is None:
        kmin = coeffs.kmin
    if kmax is None:
        kmax = coeffs.kmin + len(coeffs) - 1
    n = np.arange(kmin, kmax + 1)
    tk = TWO_PI * n
    rho = np.atleast_1d(evaluate_expansion(a, coeffs, tk))
    hrho = np.atleast_1d(evaluate_expansion(a, coeffs.hilbert(), tk))
    return SampleSet(kmin, rho, hrho)


def coefficients_from_samples(a, samples):
    """Invert the cardinal relations ``rho(2k pi) = kappa r_k``, ``H rho(2k pi) = -kappa s_k``."""
    a = check_a(a)
    c = 1.0 / kappa(a)
    return CoefficientPair(samples.kmin, c * samples.rho, -c * samples.hrho)


def reconstruct_from_samples(a, samples, grid):
    """Sampling-series reconstruction of ``rho`` on ``grid`` from ``rho(2k pi)``, ``H rho(2k pi)``.

    Evaluates ``(1-a)/(1+a) sum [rho(2k pi) sinc_a(t - 2k pi) - H rho(2k pi) cosinc_a(t - 2k pi)]``.
    """
    a = check_a(a)
    c = (1.0 - a) / (1.0 + a)
    series = CoefficientPair(samples.kmin, c * samples.rho, -c * samples.hrho)
    return synthesize(a, series, grid)


def shannon_series(samples, kmin, t):
    """Classic cardinal series ``sum_k f(k pi) sinc(t - k pi)`` for samples at ``t = k pi``.

    This is the ``a = 0`` special case of :func:`reconstruct_from_samples`
    at twice the sampling rate and without Hilbert samples.
    """
    t = check_points(t)
    samples = np.asarray(samples, dtype=float)
    k = np.arange(kmin, kmin + samples.size)
    # sinc(t - k pi) = (-1)^k sin t / (t - k pi) off the nodes
    out = np.zeros(t.shape)
    acc = np.zeros(t.shape)
    for kk, f in zip(k, samples):
        if f == 0:
            continue
        u = t - np.pi * kk
        close = np.abs(u) < 1.0
        inv = 1.0 / np.where(close, 1.0, u)
        inv[close] = 0.0
        acc += (-1.0) ** kk * f * inv
        if np.any(close):
            out[close] += f * kernels.sinc(u[close])
    return (out + np.sin(t) * acc)[()]


@dataclass(frozen=True)
class InnerProducts:
    """Quadrature inner products of a signal with the shifted kernels.

    ``tail_bound`` bounds the neglected part of each integral outside the
    window; ``adequate`` is false when it exceeds ``tolerance``.
    """

    k: np.ndarray
    with_sinc: np.ndarray
    with_cosinc: np.ndarray
    tail_bound: float
    tolerance: float

    @property
    def adequate(self):
        return self.tail_bound <= self.tolerance


def inner_product_tail_bound(a, sig, kmin, kmax):
    """Tail bound ``4 K^2 (2/T)`` with ``K = sup p_a`` and ``T`` the smallest edge distance."""
    a = check_a(a)
    tmin = sig.origin
    tmax = sig.origin + sig.step * (sig.count - 1)
    centres = TWO_PI * np.array([kmin, kmax], dtype=float)
    T = min(np.min(centres - tmin), np.min(tmax - centres))
    if T <= 0:
        return np.inf
    return 4.0 * kappa_max(a) ** 2 * 2.0 / T


def sample_inner_products(a, f, kmin, kmax, tolerance=None):
    """``<f, sinc_a(. - 2k pi)>`` and ``<f, cosinc_a(. - 2k pi)>`` by the trapezoidal rule.

    For ``f`` in ``S_a`` these equal ``pi f(2k pi)`` and ``-pi Hf(2k pi)``.
    A warning is issued when the window is too small for ``tolerance``
    (default: 2% of the Gram constant ``pi (1+a)/(1-a)``).
    """
    a = check_a(a)
    values = check_real_values(f.values, "f")
    t = f.t
    ks = np.arange(kmin, kmax + 1)
    ws = np.empty(ks.size)
    wc = np.empty(ks.size)
    for i, k in enumerate(ks):
        u = t - TWO_PI * k
        ws[i] = trapezoid(values * kernels.sinc_a(a, u), dx=f.step)
        wc[i] = trapezoid(values * kernels.cosinc_a(a, u), dx=f.step)
    if tolerance is None:
        tolerance = 0.02 * np.pi * kappa(a)
    bound = inner_product_tail_bound(a, f, kmin, kmax)
    result = InnerProducts(ks, ws, wc, float(bound), float(tolerance))
    if not result.adequate:
        warnings.warn(f"window too small: tail bound {bound:.3g} exceeds {tolerance:.3g}",
                      RuntimeWarning, stacklevel=2)
    return result


def coefficients_from_inner_products(a, products):
    """Expansion coefficients from inner products (the Gram constant is ``pi (1+a)/(1-a)``)."""
    a = check_a(a)
    c = 1.0 / (np.pi * kappa(a))
    return CoefficientPair(int(products.k[0]), c * products.with_sinc, c * products.with_cosinc)


def _relative_residual(residual, reference, guard):
    n = residual.size
    g = int(guard * n)
    sl = slice(g, n - g)
    num = np.linalg.norm(residual[sl])
    den = np.linalg.norm(reference[sl])
    if num == 0:
        return 0.0
    return float(num / max(den, np.finfo(float).tiny))


def membership_residual(a, f, guard=GUARD_FRACTION, pad=DEFAULT_PAD):
    """Relative defect ``||H(f cos theta_a) - f sin theta_a|| / ||f||`` over the interior.

    Near zero exactly when ``f`` belongs to ``S_a`` at the grid's resolution.
    """
    a = check_a(a)
    values = check_real_values(f.values, "f")
    t = f.t
    carrier = f.with_values(values * kernels.cos_theta(a, t))
    residual = hilbert_transform(carrier, pad).values - values * kernels.sin_theta(a, t)
    return _relative_residual(residual, values, guard)


def membership_spectral(a, f, nmax=4, guard=0.05):
    """Spectral form of the membership test: shift residual of the transform of ``f``.

    The grid must make the frequency step divide 1, i.e.
    ``count * step`` must be an integer multiple of ``2 pi``.
    """
    a = check_a(a)
    check_real_values(f.values, "f")
    return spectral_shift_residual(unitary_ft(f), a, nmax, guard)


def spectral_membership_test(a, f, nmax=4, guard=0.05, factor=10.0):
    """Return ``(residual, bound, passed)`` with ``passed = residual <= factor * bound``.

    ``bound`` is :func:`monosamp.spectrum.shift_residual_bound` for the
    transform of ``f``, a prediction of the truncation ringing alone.
    """
    a = check_a(a)
    check_real_values(f.values, "f")
    spec = unitary_ft(f)
    residual = spectral_shift_residual(spec, a, nmax, guard)
    bound = shift_residual_bound(spec, a, nmax, guard)
    return residual, bound, residual <= factor * bound


def linear_phase_residual(f, gamma, guard=GUARD_FRACTION, pad=DEFAULT_PAD):
    """Relative defect ``||H(f cos(gamma t)) - f sin(gamma t)|| / ||f||`` over the interior.

    Small exactly when ``f`` is bandlimited to ``[-gamma, gamma]``.
    """
    if not gamma > 0:
        raise ValueError(f"gamma must be positive, got {gamma!r}")
    values = check_real_values(f.values, "f")
    t = f.t
    carrier = f.with_values(values * np.cos(gamma * t))
    residual = hilbert_transform(carrier, pad).values - values * np.sin(gamma * t)
    return _relative_residual(residual, values, guard)


def hilbert_in_subspace_check(a, f, guard=GUARD_FRACTION, pad=DEFAULT_PAD):
    """Membership residuals of ``f`` and of its numerical Hilbert transform."""
    hf = hilbert_transform(f, pad)
    return (membership_residual(a, f, guard, pad), membership_residual(a, hf, guard, pad))
