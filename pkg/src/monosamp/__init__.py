"""Sampling and Hilbert-transform tools for the Blaschke-phase sinc family.

Modules
-------
kernels     closed-form kernels: Poisson kernel, Blaschke phase, sinc_a, cosinc_a
spectrum    cascade filter, one-sided transforms, spectral shift tests
hilbert     discrete unitary FT, Hilbert transform, analytic signal
subspace    expansions, sampling at 2k pi, membership tests
verify      named checks and figure data
estimators  scikit-learn style wrappers
"""
from ._io import DataError
from ._validation import ConditioningError, DomainError, GridError
from .hilbert import Grid, SampledSignal
from .spectrum import Spectrum
from .subspace import CoefficientPair, SampleSet

__version__ = "0.1.0"

__all__ = [
    "CoefficientPair",
    "ConditioningError",
    "DataError",
    "DomainError",
    "Grid",
    "GridError",
    "SampleSet",
    "SampledSignal",
    "Spectrum",
]
