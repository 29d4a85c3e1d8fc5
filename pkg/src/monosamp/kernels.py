"""Closed-form special functions attached to the Blaschke factor with a real zero.

Every function is vectorised over ``t`` (any array shape) and returns a NumPy
scalar for scalar input. The parameter ``a`` is the zero of the Blaschke
factor ``B_a(z) = (z - a) / (1 - a z)`` and must lie in (-1, 1).

The phase ``theta_a`` is the continuous argument of ``B_a(exp(it))``, so
``exp(i theta_a(t)) = B_a(exp(it))`` and ``theta_a' = p_a`` (the Poisson
kernel). The generalized sampling function is ``sinc_a(t) = sin(theta_a(t))/t``
and its Hilbert transform is ``cosinc_a(t) = (1 - cos(theta_a(t)))/t``.
"""
import numpy as np

from ._validation import DomainError, check_a, check_points, kappa


def _denominator(a, t):
    # 1 - 2a cos t + a^2 >= (1 - |a|)^2 > 0
    return 1.0 - 2.0 * a * np.cos(t) + a * a


def poisson_kernel(a, t):
    """Periodic Poisson kernel ``(1 - a^2) / (1 - 2a cos t + a^2)``."""
    a = check_a(a)
    t = check_points(t)
    return ((1.0 - a * a) / _denominator(a, t))[()]


def phase_theta(a, t):
    """Unwrapped phase of ``B_a(exp(it))`` with ``theta_a(0) = 0``.

    Uses ``theta_a(t) = t + 2 arctan2(a sin t, 1 - a cos t)``; the second
    argument of ``arctan2`` stays positive, so the result is continuous.
    """
    a = check_a(a)
    t = check_points(t)
    return (t + 2.0 * np.arctan2(a * np.sin(t), 1.0 - a * np.cos(t)))[()]


def sin_theta(a, t):
    """``sin(theta_a(t))`` in closed form, ``p_a(t) sin t``."""
    a = check_a(a)
    t = check_points(t)
    return ((1.0 - a * a) * np.sin(t) / _denominator(a, t))[()]


def cos_theta(a, t):
    """``cos(theta_a(t))`` in closed form."""
    a = check_a(a)
    t = check_points(t)
    return (((1.0 + a * a) * np.cos(t) - 2.0 * a) / _denominator(a, t))[()]


def sinc(t):
    """Classic unnormalised sinc, ``sin(t)/t`` with value 1 at 0."""
    t = check_points(t)
    return np.sinc(t / np.pi)[()]


def hilbert_sinc(t):
    """``(1 - cos t)/t``, the Hilbert transform of the classic sinc.

    Evaluated as ``(t/2) sinc(t/2)^2`` which has no cancellation near 0.
    """
    t = check_points(t)
    return (0.5 * t * np.sinc(t / (2.0 * np.pi)) ** 2)[()]


def sinc_a(a, t):
    """Generalized sampling function ``sin(theta_a(t))/t = p_a(t) sinc(t)``.

    The product form is free of cancellation, so the removable singularity
    at 0 is filled exactly with ``(1 + a)/(1 - a)``.
    """
    a = check_a(a)
    t = check_points(t)
    return ((1.0 - a * a) / _denominator(a, t) * np.sinc(t / np.pi))[()]


def cosinc_a(a, t):
    """``(1 - cos(theta_a(t)))/t``, equal to the Hilbert transform of ``sinc_a``.

    Evaluated as ``(1 + a)/(1 - a) p_a(t) (1 - cos t)/t``; odd, zero at 0.
    """
    a = check_a(a)
    t = check_points(t)
    p = (1.0 - a * a) / _denominator(a, t)
    return (kappa(a) * p * 0.5 * t * np.sinc(t / (2.0 * np.pi)) ** 2)[()]


def blaschke(a, z):
    """Blaschke factor ``(z - a)/(1 - a z)`` for complex ``z``.

    Raises
    ------
    DomainError
        If any ``z`` sits on the pole ``1/a``.
    """
    a = check_a(a)
    z = np.asarray(z, dtype=complex)
    den = 1.0 - a * z
    if np.any(den == 0):
        raise DomainError(f"z = 1/a = {1.0 / a!r} is the pole of B_a")
    return ((z - a) / den)[()]


def fourier_coeff_exp_phase(a, k):
    """Fourier coefficient ``c_k`` of the 2*pi-periodic ``exp(i theta_a(t))``.

    ``c_0 = -a``, ``c_k = (1 - a^2) a^(k-1)`` for ``k >= 1`` and ``c_k = 0``
    for negative ``k`` (the expansion is one-sided).
    """
    a = check_a(a)
    k = np.asarray(k)
    if not np.issubdtype(k.dtype, np.integer):
        if not np.all(np.equal(np.mod(k, 1), 0)):
            raise ValueError("k must be integer")
        k = k.astype(np.int64)
    kk = np.maximum(k - 1, 0).astype(float)
    out = np.where(k >= 1, (1.0 - a * a) * np.power(a, kk), 0.0)
    out = np.where(k == 0, -a, out)
    return out.astype(float)[()]
