"""Executable verification harness.

:func:`run_suite` evaluates a fixed list of named checks for one value of
``a`` and gathers them into a :class:`VerificationReport`. Each check
compares a measured quantity with its expected value under a tolerance
stored in :class:`SuiteConfig`; nothing random escapes the configured seed,
so identical configurations give byte-identical reports.
"""
import json
from dataclasses import asdict, dataclass, field

import numpy as np

from . import kernels, spectrum, subspace
from ._io import write_columns
from ._validation import ConditioningError, check_a, kappa, kappa_max
from .hilbert import Grid, SampledSignal, hilbert_transform, unitary_ft

#: Largest |a| accepted by the harness; (1+a)/(1-a) blows up beyond it.
MAX_ABS_A = 0.9

DEFAULT_TOLERANCES = {
    "cardinality": 1e-12,
    "decay": 1e-15,
    "gram_time_rel": 2e-2,
    "gram_freq": 1e-9,
    "gram_offdiag_rel": 1e-2,
    "hilbert_pair": 1e-2,
    "exp_phase_coeffs": 1e-10,
    "spectrum_pair": 2e-2,
    "ft_onesided": 1e-6,
    "sinc_hsinc_complex": 1e-10,
    "membership": 1e-2,
    "nonmember_min": 0.1,
    "roundtrip": 1e-12,
    "spectral_factor": 10.0,
    "linear_phase": 1e-3,
    "shannon": 1e-3,
    "degeneration": 1e-12,
}


@dataclass
class SuiteConfig:
    """Grids, sizes and tolerances for :func:`run_suite`.

    Windows are given in half-turns: ``window_turns=320`` means the time
    window ``[-320 pi, 320 pi)``. The transform grid follows the defaults
    for FFT-based checks; the membership grid is wider because the
    Hilbert transform of a truncated ``1/t``-decaying signal misses the
    tails and that error shrinks like ``1/sqrt(window)``.
    """

    seed: int = 20240611
    window_turns: int = 320
    points: int = 2 ** 20
    pad: int = 4
    membership_turns: int = 5120
    membership_points: int = 2 ** 20
    membership_pad: int = 2
    gram_points: int = 2 ** 18
    gram_k: int = 4
    random_elements: int = 5
    support: int = 8
    nmax: int = 4
    spectral_guard: float = 0.05
    trunc: int = subspace.DEFAULT_TRUNCATION
    tolerances: dict = field(default_factory=dict)

    def tol(self, name):
        return self.tolerances.get(name, DEFAULT_TOLERANCES[name])

    def transform_grid(self):
        half = self.window_turns * np.pi
        return Grid.over(-half, half, self.points)

    def membership_grid(self):
        half = self.membership_turns * np.pi
        return Grid.over(-half, half, self.membership_points)


@dataclass
class CheckResult:
    """One named check; ``passed`` iff ``|measured - expected| <= tolerance``."""

    name: str
    paper_anchor: str
    measured: float
    expected: float
    tolerance: float
    passed: bool
    notes: str = ""


def _check(name, anchor, measured, expected, tolerance, notes=""):
    measured = float(measured)
    expected = float(expected)
    tolerance = float(tolerance)
    passed = bool(abs(measured - expected) <= tolerance)
    return CheckResult(name, anchor, measured, expected, tolerance, passed, notes)


def _upper(name, anchor, value, limit, notes=""):
    """Pass when a nonnegative ``value`` is at most ``limit``."""
    return _check(name, anchor, value, 0.0, limit, notes)


def _lower(name, anchor, value, threshold, notes=""):
    """Pass when ``value`` reaches ``threshold``; measured is the shortfall."""
    shortfall = max(0.0, threshold - float(value))
    extra = f"shortfall below {threshold:g}; raw value {float(value):.6g}"
    return _check(name, anchor, shortfall, 0.0, 0.0, f"{extra}. {notes}".strip(". ") if notes
                  else extra)


@dataclass
class VerificationReport:
    a: float
    seed: int
    grid: dict
    checks: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_dict(self):
        return {
            "a": self.a,
            "seed": self.seed,
            "grid": self.grid,
            "passed": self.passed,
            "checks": [asdict(c) for c in self.checks],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self, target):
        cols = list(zip(*[(c.name, c.paper_anchor, c.measured, c.expected, c.tolerance,
                           c.passed, c.notes) for c in self.checks]))
        header = ("name", "paper_anchor", "measured", "expected", "tolerance", "passed", "notes")
        with _text_target(target) as fh:
            fh.write(",".join(header) + "\n")
            for row in zip(*cols):
                name, anchor, m, e, tol, ok, notes = row
                fields = [name, anchor, f"{m:.17g}", f"{e:.17g}", f"{tol:.17g}",
                          "true" if ok else "false", notes]
                fh.write(",".join(_csv_field(x) for x in fields) + "\n")

    def to_table(self):
        width = max(len(c.name) for c in self.checks)
        lines = [f"a = {self.a:g}, seed = {self.seed}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"{status}  {c.name:<{width}}  measured={c.measured:.3e}  "
                         f"expected={c.expected:.3e}  tol={c.tolerance:.1e}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'} "
                     f"({sum(c.passed for c in self.checks)}/{len(self.checks)})")
        return "\n".join(lines) + "\n"


def _csv_field(x):
    x = str(x)
    if any(ch in x for ch in ',"\n'):
        return '"' + x.replace('"', '""') + '"'
    return x


class _text_target:
    def __init__(self, target):
        self.target = target
        self.fh = None

    def __enter__(self):
        if isinstance(self.target, str):
            self.fh = open(self.target, "w", newline="")
            return self.fh
        return self.target

    def __exit__(self, *exc):
        if self.fh is not None:
            self.fh.close()


# -- quadrature oracles ------------------------------------------------------

def _one_sided_ft_quadrature(a, xi, side="plus", cells=None, nodes=32):
    """Unitary FT of ``H_a^+`` (or ``H_a^-``) by Gauss-Legendre on each unit cell.

    The neglected tail beyond ``cells`` has magnitude below ``|a|^cells / (1 - |a|)``;
    by default enough cells are taken to push it under 1e-16.
    """
    if cells is None:
        cells = 1 if a == 0 else int(np.ceil(np.log(1e-16 * (1 - abs(a))) / np.log(abs(a))))
    x, w = np.polynomial.legendre.leggauss(nodes)
    u = 0.5 * (x + 1.0)
    xi = np.atleast_1d(np.asarray(xi, dtype=float))
    sign = 1.0 if side == "plus" else -1.0
    total = np.zeros(xi.shape, dtype=complex)
    for k in range(cells):
        t = sign * (k + u)
        cell = 0.5 * (np.exp(-1j * np.outer(xi, t)) @ w)
        total += a ** k * cell
    return total / np.sqrt(2.0 * np.pi)


def exp_phase_coeffs_quadrature(a, ks, points=10_000):
    """Fourier coefficients of ``B_a(exp(it))`` by the periodic trapezoidal rule."""
    t = -np.pi + 2.0 * np.pi * np.arange(points) / points
    g = kernels.blaschke(a, np.exp(1j * t))
    ks = np.asarray(ks)
    return np.array([np.mean(g * np.exp(-1j * k * t)) for k in ks])


def gram_freq_route(a, n_shift=0):
    """``<sinc_a, sinc_a(. - n pi)>`` via Parseval and the band structure of ``H_a``.

    Each band ``I_k`` contributes ``a^(2k) * 2 * int_k^(k+1) cos(n pi x) dx``;
    the geometric series is summed until its terms drop below 1e-18.
    """
    total = 0.0
    k = 0
    while True:
        weight = a ** (2 * k)
        if n_shift == 0:
            band = 2.0
        else:
            w = n_shift * np.pi
            band = 2.0 * (np.sin(w * (k + 1)) - np.sin(w * k)) / w
        total += weight * band
        if weight < 1e-18 or k > 10_000:
            break
        k += 1
    return 0.5 * np.pi * (1.0 + a) ** 2 * total


# -- the suite ---------------------------------------------------------------

def _interior_max(diff, count, guard=0.05):
    g = int(guard * count)
    return float(np.max(np.abs(diff[g:count - g])))


def _kernel_checks(a, cfg):
    out = []
    n = np.arange(-50, 51)
    card = kernels.sinc_a(a, n * np.pi) - kappa(a) * (n == 0)
    out.append(_upper("cardinality", "prop:sinc/3", np.max(np.abs(card)), cfg.tol("cardinality"),
                      "max_n |sinc_a(n pi) - kappa delta_n0|, |n| <= 50"))
    t = cfg.transform_grid().t
    km = kappa_max(a)
    excess = np.abs(kernels.sinc_a(a, t)) - km * 2.0 / (1.0 + np.abs(t))
    out.append(_upper("decay_sinc", "prop:sinc/5", max(0.0, excess.max()), cfg.tol("decay"),
                      "excess of |sinc_a| over K*2/(1+|t|), K = sup p_a = (1+|a|)/(1-|a|)"))
    excess = np.abs(kernels.cosinc_a(a, t)) - kappa(a) * km * 3.0 / (1.0 + np.abs(t))
    out.append(_upper("decay_cosinc", "coro:cosinc", max(0.0, excess.max()), cfg.tol("decay"),
                      "excess of |cosinc_a| over (1+a)/(1-a)*K*3/(1+|t|)"))
    ks = np.arange(-20, 21)
    err = np.abs(exp_phase_coeffs_quadrature(a, ks) - kernels.fourier_coeff_exp_phase(a, ks))
    out.append(_upper("exp_phase_coeffs", "lem:fouriere", err.max(), cfg.tol("exp_phase_coeffs"),
                      "10^4-point periodic trapezoid vs closed form, |k| <= 20"))
    return out


def _gram_checks(a, cfg):
    out = []
    gconst = np.pi * kappa(a)
    freq = [gram_freq_route(a, n) for n in range(0, 6)]
    err = max(abs(freq[0] - gconst), max(abs(v) for v in freq[1:]))
    out.append(_upper("gram_freq", "prop:sinc/6", err, cfg.tol("gram_freq"),
                      "Parseval/geometric-series route, shifts n pi with 0 <= n <= 5"))

    half = cfg.window_turns * np.pi
    grid = Grid.over(-half, half, cfg.gram_points)
    t = grid.t
    base = kernels.sinc_a(a, t)
    shifts = np.arange(-10, 11)
    vals = np.array([np.trapezoid(base * kernels.sinc_a(a, t - n * np.pi), dx=grid.step)
                     for n in shifts])
    rel = np.abs(vals - gconst * (shifts == 0)) / gconst
    out.append(_upper("gram_pi_shift", "prop:sinc/6", rel.max(), cfg.tol("gram_time_rel"),
                      "time-domain trapezoid on the default window, |n| <= 10, relative "
                      "to pi(1+a)/(1-a)"))

    K = cfg.gram_k
    basis = []
    for k in range(-K, K + 1):
        u = t - 2.0 * np.pi * k
        basis.append(kernels.sinc_a(a, u))
        basis.append(kernels.cosinc_a(a, u))
    basis = np.array(basis)
    w = np.full(t.size, grid.step)
    w[0] = w[-1] = 0.5 * grid.step
    gram = (basis * w) @ basis.T
    diag = np.diag(gram)
    off = gram - np.diag(diag)
    out.append(_upper("gram_phi_diagonal", "prop:ortho", np.max(np.abs(diag - gconst)) / gconst,
                      cfg.tol("gram_time_rel"),
                      f"diagonal of the Gram matrix of sinc_a, H sinc_a shifted by 2k pi, |k| <= {K}"))
    out.append(_upper("gram_phi_system", "prop:ortho", np.max(np.abs(off)) / gconst,
                      cfg.tol("gram_offdiag_rel"), "largest off-diagonal entry relative to the diagonal"))
    return out


def _transform_checks(a, cfg):
    out = []
    grid = cfg.transform_grid()
    t = grid.t
    sig = SampledSignal.sample(lambda x: kernels.sinc_a(a, x), grid)
    h = hilbert_transform(sig, cfg.pad).values
    out.append(_upper("hilbert_sinc", "coro:cosinc",
                      _interior_max(h - kernels.cosinc_a(a, t), t.size), cfg.tol("hilbert_pair"),
                      "FFT Hilbert of sinc_a vs cosinc_a, 5% guard bands"))

    p = kernels.poisson_kernel(a, t)
    lhs = hilbert_transform(sig.with_values(p * kernels.sinc(t)), cfg.pad).values
    rhs = kappa(a) * p * kernels.hilbert_sinc(t)
    out.append(_upper("quasi_bedrosian", "lem:eqn:lem:be", _interior_max(lhs - rhs, t.size),
                      cfg.tol("hilbert_pair"), "H(p_a sinc) vs (1+a)/(1-a) p_a H sinc"))

    spec = unitary_ft(sig)
    xi = spec.xi
    away = (np.abs(xi - np.round(xi)) >= 0.05)
    err = np.abs(spec.values - spectrum.sinc_a_spectrum(a, xi))[away]
    out.append(_upper("spectrum_pair", "eq:general-sinc-function-f", err.max(),
                      cfg.tol("spectrum_pair"),
                      "unitary FT of sinc_a vs sqrt(pi/2)(1+a)H_a, 0.05 bands at integers excluded"))

    xs = np.linspace(-10.0, 10.0, 201)
    plus = _one_sided_ft_quadrature(a, xs, "plus")
    minus = _one_sided_ft_quadrature(a, xs, "minus")
    err = max(np.max(np.abs(spectrum.ft_one_sided_plus(a, xs) - plus)),
              np.max(np.abs(spectrum.ft_one_sided_minus(a, xs) - minus)),
              np.max(np.abs(spectrum.ft_one_sided_plus(a, xs) + spectrum.ft_one_sided_minus(a, xs)
                            - (plus + minus))))
    out.append(_upper("ft_onesided", "lem:fourierHa", err, cfg.tol("ft_onesided"),
                      "closed forms vs cellwise Gauss-Legendre quadrature, |xi| <= 10"))

    ts = np.linspace(-60.0, 60.0, 4001)
    lhs = np.sqrt(2.0 * np.pi) * (1.0 + a) * spectrum.ft_one_sided_plus(a, -ts)
    rhs = kernels.sinc_a(a, ts) + 1j * kernels.cosinc_a(a, ts)
    out.append(_upper("sinc_Hsinc_complex", "eqn:sincHsinc", np.max(np.abs(lhs - rhs)),
                      cfg.tol("sinc_hsinc_complex"),
                      "sqrt(2pi)(1+a) FT[H_a^+](-t) vs sinc_a + i cosinc_a"))

    out.extend(_linear_phase_checks(grid, cfg))
    return out


def _linear_phase_checks(grid, cfg):
    out = []
    t = grid.t
    s1 = SampledSignal.on(grid, kernels.sinc(t))
    s_half = SampledSignal.on(grid, kernels.sinc(t / 2.0))
    out.append(_upper("linear_phase_band1", "th-linearcase",
                      subspace.linear_phase_residual(s1, 1.0, pad=cfg.pad), cfg.tol("linear_phase"),
                      "sinc with gamma = 1"))
    out.append(_lower("linear_phase_too_narrow", "th-linearcase",
                      subspace.linear_phase_residual(s1, 0.5, pad=cfg.pad), cfg.tol("nonmember_min"),
                      "sinc with gamma = 0.5"))
    out.append(_upper("linear_phase_half_band", "th-linearcase",
                      subspace.linear_phase_residual(s_half, 1.0, pad=cfg.pad),
                      cfg.tol("linear_phase"), "sinc(t/2) with gamma = 1"))
    return out


def _subspace_checks(a, cfg, rng):
    out = []
    elements = [subspace.CoefficientPair.random(rng, -cfg.support, cfg.support)
                for _ in range(cfg.random_elements)]

    # exact sampling round trip
    grid = Grid.over(-40.0 * np.pi, 40.0 * np.pi, 8192)
    worst_grid = worst_coef = 0.0
    for c in elements:
        rho = subspace.synthesize(a, c, grid)
        samples = subspace.sample_expansion(a, c)
        back = subspace.reconstruct_from_samples(a, samples, grid)
        worst_grid = max(worst_grid, np.max(np.abs(back.values - rho.values)))
        rec = subspace.coefficients_from_samples(a, samples)
        worst_coef = max(worst_coef, np.max(np.abs(rec.r - c.r)), np.max(np.abs(rec.s - c.s)))
    out.append(_upper("sampling_roundtrip", "thm:sampling", worst_grid, cfg.tol("roundtrip"),
                      "synthesize -> sample at 2k pi -> reconstruct, grid-pointwise"))
    out.append(_upper("coefficient_recovery", "th:characterization", worst_coef,
                      cfg.tol("roundtrip"), "r_k, s_k recovered from rho(2k pi), H rho(2k pi)"))

    # membership on the wide grid
    mgrid = cfg.membership_grid()
    mt = mgrid.t
    pad = cfg.membership_pad
    s_a = SampledSignal.on(mgrid, kernels.sinc_a(a, mt))
    c_a = SampledSignal.on(mgrid, kernels.cosinc_a(a, mt))
    gauss = SampledSignal.on(mgrid, np.exp(-0.5 * mt ** 2))
    r_sinc = subspace.membership_residual(a, s_a, pad=pad)
    r_cos = subspace.membership_residual(a, c_a, pad=pad)
    out.append(_upper("membership_sinca", "lem:Sinc_bedrosian", max(r_sinc, r_cos),
                      cfg.tol("membership"),
                      f"sinc_a {r_sinc:.3e}, cosinc_a {r_cos:.3e}; relative L2 over the interior"))
    r_gauss = subspace.membership_residual(a, gauss, pad=pad)
    out.append(_lower("membership_nonmember", "eqn:subspace-S", r_gauss, cfg.tol("nonmember_min"),
                      "Gaussian exp(-t^2/2)"))

    worst = 0.0
    synthesized = []
    for c in elements:
        f = subspace.synthesize(a, c, mgrid)
        synthesized.append(f)
        worst = max(worst, *subspace.hilbert_in_subspace_check(a, f, pad=pad))
    out.append(_upper("hilbert_invariance", "prop:Hf", worst, cfg.tol("membership"),
                      f"{len(elements)} random elements and their numerical Hilbert transforms"))

    # spectral characterisation and agreement of the two membership tests
    factor = cfg.tol("spectral_factor")
    ratios = []
    disagreements = 0
    corpus = [(s_a, True), (c_a, True), (gauss, False)] + [(f, True) for f in synthesized]
    for f, member in corpus:
        res, bound, ok = subspace.spectral_membership_test(a, f, cfg.nmax, cfg.spectral_guard,
                                                           factor)
        if member:
            ratios.append(res / bound if bound > 0 else (0.0 if res == 0 else np.inf))
        else:
            gauss_res = res
        by_time = subspace.membership_residual(a, f, pad=pad) <= cfg.tol("membership")
        disagreements += int(bool(ok) != bool(by_time))
    out.append(_upper("spectral_characterization", "lemma:characterization-1", max(ratios), factor,
                      "shift residual / predicted truncation bound for S_a members"))
    out.append(_lower("spectral_nonmember", "lemma:characterization-1", gauss_res,
                      cfg.tol("nonmember_min"), "Gaussian shift residual"))
    out.append(_check("membership_agreement", "lemma:characterization-1", disagreements, 0, 0,
                      "time-domain and spectral membership tests classify the corpus alike"))
    return out


def shannon_test_signal(t):
    """``sinc(t/2)^2 = 2(1 - cos t)/t^2``, bandlimited to [-1, 1]."""
    return np.sinc(np.asarray(t) / (2.0 * np.pi)) ** 2


def shannon_test_hilbert(t):
    """Closed-form Hilbert transform ``2(t - sin t)/t^2`` of :func:`shannon_test_signal`."""
    t = np.asarray(t, dtype=float)
    small = np.abs(t) < 1e-3
    safe = np.where(small, 1.0, t)
    out = 2.0 * (safe - np.sin(safe)) / safe ** 2
    return np.where(small, t / 3.0 - t ** 3 / 60.0, out)


def _shannon_checks(cfg):
    """The five equivalent statements for a = 0 on the test signal."""
    out = []
    tol = cfg.tol("shannon")
    grid = cfg.transform_grid()
    rho = SampledSignal.on(grid, shannon_test_signal(grid.t))
    spec = unitary_ft(rho)
    energy = np.abs(spec.values) ** 2
    outside = energy[np.abs(spec.xi) > 1.0].sum() / energy.sum()
    out.append(_upper("shannon_a0_bandlimited", "final corollary/1", outside, tol,
                      "spectral energy fraction outside [-1, 1]"))
    out.append(_upper("shannon_a0_bedrosian", "final corollary/2",
                      subspace.linear_phase_residual(rho, 1.0, pad=cfg.pad), tol,
                      "H(rho cos) = rho sin"))
    t = grid.t
    c, s = np.cos(t), np.sin(t)
    hc = hilbert_transform(rho.with_values(rho.values * c), cfg.pad).values
    hs = hilbert_transform(rho.with_values(rho.values * s), cfg.pad).values
    lhs = hc + 1j * hs
    rhs = -1j * rho.values * (c + 1j * s)
    g = int(0.05 * t.size)
    sl = slice(g, t.size - g)
    out.append(_upper("shannon_a0_analytic", "final corollary/3",
                      np.linalg.norm((lhs - rhs)[sl]) / np.linalg.norm(rho.values[sl]), tol,
                      "H(rho e^{it}) = -i rho e^{it}, relative L2"))
    tt = np.linspace(-20.0, 20.0, 2001)
    exact = shannon_test_signal(tt)
    K = 4000
    k = np.arange(-K, K + 1)
    samples = subspace.SampleSet(-K, shannon_test_signal(2 * np.pi * k),
                                 shannon_test_hilbert(2 * np.pi * k))
    st4 = subspace.reconstruct_from_samples(0.0, samples, Grid(tt[0], tt[1] - tt[0], tt.size)).values
    st5 = subspace.shannon_series(shannon_test_signal(np.pi * k), -K, tt)
    out.append(_upper("shannon_a0_sampling", "final corollary/4", np.max(np.abs(st4 - exact)), tol,
                      f"2k pi sampling series with Hilbert samples, |k| <= {K}"))
    out.append(_upper("shannon_a0_shannon", "final corollary/5",
                      max(np.max(np.abs(st5 - exact)), np.max(np.abs(st5 - st4))), tol,
                      f"classic k pi Shannon series, |k| <= {K}, against the signal and statement 4"))
    t = cfg.transform_grid().t[::64]
    deg = max(np.max(np.abs(kernels.sinc_a(0.0, t) - kernels.sinc(t))),
              np.max(np.abs(kernels.cosinc_a(0.0, t) - kernels.hilbert_sinc(t))),
              np.max(np.abs(kernels.sin_theta(0.0, t) - np.sin(t))),
              np.max(np.abs(kernels.cos_theta(0.0, t) - np.cos(t))),
              np.max(np.abs(kernels.poisson_kernel(0.0, t) - 1.0)))
    out.append(_upper("degeneration_a0", "final corollary", deg, cfg.tol("degeneration"),
                      "a = 0 kernels against sinc, (1 - cos t)/t, sin, cos, 1"))
    return out


def check_conditioning(a):
    a = check_a(a)
    if abs(a) > MAX_ABS_A:
        raise ConditioningError(
            f"|a| = {abs(a):g} exceeds {MAX_ABS_A}: (1+a)/(1-a) = {kappa(a):.3g} makes the "
            "kernels too peaked for the default grids and tolerances")
    return a


def run_suite(a, config=None):
    """Run every check for ``a`` and return a :class:`VerificationReport`.

    Raises
    ------
    ConditioningError
        If ``|a| > 0.9``.
    """
    a = check_conditioning(a)
    cfg = config or SuiteConfig()
    rng = np.random.default_rng(cfg.seed)
    checks = []
    checks += _kernel_checks(a, cfg)
    checks += _gram_checks(a, cfg)
    checks += _transform_checks(a, cfg)
    checks += _subspace_checks(a, cfg, rng)
    if a == 0.0:
        checks += _shannon_checks(cfg)
    grid = {
        "transform_window": [-cfg.window_turns, cfg.window_turns],
        "transform_points": cfg.points,
        "membership_window": [-cfg.membership_turns, cfg.membership_turns],
        "membership_points": cfg.membership_points,
        "window_unit": "pi",
        "pad": cfg.pad,
        "membership_pad": cfg.membership_pad,
    }
    return VerificationReport(a, cfg.seed, grid, checks)


# -- figures -----------------------------------------------------------------

@dataclass
class FigureData:
    """Plot-ready columns over a shared abscissa."""

    x_name: str
    x: np.ndarray
    columns: dict

    def to_csv(self, target):
        write_columns(target, (self.x_name, *self.columns), (self.x, *self.columns.values()))


FIGURES = ("fig1_left", "fig1_right", "fig2")


def figure_data(which, a, grid):
    """Columns reproducing the reference figures.

    ``fig1_left``: ``sqrt(pi/2)(1+a)H_a`` over ``grid`` read as frequencies;
    ``fig1_right``: ``sinc_a`` with the classic sinc;
    ``fig2``: ``cosinc_a`` with ``(1 - cos t)/t``.
    """
    a = check_a(a)
    x = grid.t
    if which == "fig1_left":
        return FigureData("xi", x, {"scaled_filter": spectrum.sinc_a_spectrum(a, x)})
    if which == "fig1_right":
        return FigureData("t", x, {"sinc_a": kernels.sinc_a(a, x), "sinc": kernels.sinc(x)})
    if which == "fig2":
        return FigureData("t", x, {"cosinc_a": kernels.cosinc_a(a, x),
                                   "hilbert_sinc": kernels.hilbert_sinc(x)})
    raise ValueError(f"unknown figure {which!r}; choose from {', '.join(FIGURES)}")
