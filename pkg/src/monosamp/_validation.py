"""Input validation helpers shared by every module."""
import numbers

import numpy as np


class DomainError(ValueError):
    """An argument lies outside the domain of a function (e.g. a pole)."""


class GridError(ValueError):
    """A grid is degenerate or incompatible with the requested operation."""


class ConditioningError(ValueError):
    """A parameter is valid but too ill-conditioned for the verification harness."""


def check_a(a):
    """Validate the Blaschke zero ``a`` and return it as a float.

    Raises
    ------
    DomainError
        If ``a`` is not a finite real number in the open interval (-1, 1).
    """
    if isinstance(a, bool) or not isinstance(a, numbers.Real):
        raise DomainError(f"a must be a real number, got {a!r}")
    a = float(a)
    if not -1.0 < a < 1.0:
        raise DomainError(f"a must satisfy -1 < a < 1, got {a!r}")
    return a


def check_points(t, name="t"):
    """Return ``t`` as a float array, rejecting NaN and infinities."""
    t = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t)):
        raise ValueError(f"{name} must be finite")
    return t


def check_real_values(values, name="values"):
    values = np.asarray(values)
    if np.iscomplexobj(values):
        raise TypeError(f"{name} must be real-valued; use the analytic-signal path "
                        "for complex data")
    return values.astype(float, copy=False)


def check_grid(origin, step, count):
    if not np.isfinite(origin):
        raise GridError("grid origin must be finite")
    if not (np.isfinite(step) and step > 0):
        raise GridError(f"grid step must be positive and finite, got {step!r}")
    if count < 2:
        raise GridError(f"grid needs at least 2 points, got {count}")


def kappa(a):
    """Return (1 + a) / (1 - a), the peak value of ``sinc_a``."""
    return (1.0 + a) / (1.0 - a)


def kappa_max(a):
    """Return the supremum of the Poisson kernel, (1 + |a|) / (1 - |a|)."""
    return (1.0 + abs(a)) / (1.0 - abs(a))
