"""scikit-learn style wrappers.

Rows of ``X`` are signals sampled on one shared uniform grid, so the
transformers slot into a :class:`sklearn.pipeline.Pipeline` after any
resampling step.
"""
import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from . import kernels
from ._validation import check_a, check_grid, kappa
from .hilbert import DEFAULT_PAD, SampledSignal, canonical_modulation, hilbert_transform


class SincABasis(TransformerMixin, BaseEstimator):
    """Project signals onto ``sinc_a(t - 2k pi)``, ``cosinc_a(t - 2k pi)``, ``kmin <= k <= kmax``.

    ``transform`` returns the coefficients ``[r_kmin..r_kmax, s_kmin..s_kmax]``
    from trapezoidal inner products divided by the Gram constant
    ``pi (1+a)/(1-a)``; ``inverse_transform`` synthesizes signals from them.
    For an element of the span both maps are inverse up to quadrature and
    window truncation error.

    Parameters
    ----------
    a : float
        Blaschke parameter in (-1, 1).
    origin, step : float
        Time grid ``origin + step * arange(n_features)``.
    kmin, kmax : int
        Shift range.
    """

    def __init__(self, a=0.5, origin=0.0, step=1.0, kmin=-8, kmax=8):
        self.a = a
        self.origin = origin
        self.step = step
        self.kmin = kmin
        self.kmax = kmax

    def _basis(self, n):
        t = self.origin + self.step * np.arange(n)
        rows = []
        for fn in (kernels.sinc_a, kernels.cosinc_a):
            for k in range(self.kmin, self.kmax + 1):
                rows.append(fn(self.a, t - 2.0 * np.pi * k))
        return np.array(rows)

    def fit(self, X, y=None):
        check_a(self.a)
        if self.kmax < self.kmin:
            raise ValueError("kmax must be >= kmin")
        X = check_array(X, dtype=np.float64)
        check_grid(self.origin, self.step, X.shape[1])
        self.n_features_in_ = X.shape[1]
        self.basis_ = self._basis(X.shape[1])
        w = np.full(X.shape[1], float(self.step))
        w[0] = w[-1] = 0.5 * self.step
        self.weights_ = w
        return self

    def transform(self, X):
        check_is_fitted(self, "basis_")
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"expected {self.n_features_in_} samples per row, got {X.shape[1]}")
        return (X * self.weights_) @ self.basis_.T / (np.pi * kappa(self.a))

    def inverse_transform(self, C):
        check_is_fitted(self, "basis_")
        C = check_array(C, dtype=np.float64)
        if C.shape[1] != self.basis_.shape[0]:
            raise ValueError(f"expected {self.basis_.shape[0]} coefficients per row, "
                             f"got {C.shape[1]}")
        return C @ self.basis_


class HilbertTransformer(TransformerMixin, BaseEstimator):
    """Row-wise Hilbert transform, instantaneous amplitude or unwrapped phase.

    Parameters
    ----------
    output : {"hilbert", "amplitude", "phase"}
    pad : int
        Zero-padding factor of the FFT.
    """

    def __init__(self, output="hilbert", pad=DEFAULT_PAD):
        self.output = output
        self.pad = pad

    def fit(self, X, y=None):
        if self.output not in ("hilbert", "amplitude", "phase"):
            raise ValueError(f"unknown output {self.output!r}")
        X = check_array(X, dtype=np.float64)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        X = check_array(X, dtype=np.float64)
        out = np.empty_like(X)
        for i, row in enumerate(X):
            sig = SampledSignal(0.0, 1.0, row)
            if self.output == "hilbert":
                out[i] = hilbert_transform(sig, self.pad).values
            else:
                pair = canonical_modulation(sig, self.pad)
                out[i] = (pair.amplitude if self.output == "amplitude" else pair.phase).values
        return out
