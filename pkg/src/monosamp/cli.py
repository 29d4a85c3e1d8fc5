"""Command-line front end.

Subcommands::

    monosamp eval FUNCTION      kernels or spectra over a grid
    monosamp reconstruct FILE   sampling-series reconstruction from k,rho,hrho
    monosamp verify             run the verification suite
    monosamp figure WHICH       plot data for the reference figures

Settings come from flags, then from the key=value file named by
``MONOSAMP_CONFIG``, then from built-in defaults. Exit codes: 0 success,
1 usage error, 2 input-data error, 3 precondition or guard failure.
"""
import argparse
import json
import math
import os
import re
import sys
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import kernels, spectrum, subspace, verify
from ._io import DataError, write_columns
from ._validation import ConditioningError, DomainError, GridError, check_a
from .hilbert import Grid

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_GUARD = 0, 1, 2, 3
CONFIG_ENV = "MONOSAMP_CONFIG"

EVAL_FUNCTIONS = ("poisson", "theta", "sinc_a", "cosinc_a", "H_a", "spectrum_sinca")
_FREQUENCY_FUNCTIONS = ("H_a", "spectrum_sinca")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    a: float = 0.5
    tmin: float = -10.0 * math.pi
    tmax: float = 10.0 * math.pi
    points: int = 4096
    trunc: int = subspace.DEFAULT_TRUNCATION
    seed: int = verify.SuiteConfig.seed
    out: str | None = None
    format: str | None = None
    tol: dict = field(default_factory=dict)

    def grid(self):
        if not self.tmin < self.tmax:
            raise GridError(f"tmin < tmax is required, got tmin={self.tmin!r}, tmax={self.tmax!r}")
        if self.points < 2:
            raise GridError(f"points >= 2 is required, got {self.points}")
        return Grid.over(self.tmin, self.tmax, self.points)


_REAL = re.compile(r"^\s*([+-]?)\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*(pi|π)?\s*$")


def parse_real(text):
    """Parse a float, allowing a trailing ``pi`` factor: ``-10pi``, ``2*pi``, ``pi``."""
    m = _REAL.match(str(text))
    if not m:
        raise ValueError(f"not a number: {text!r}")
    sign, body, pi = m.groups()
    if not body and not pi:
        raise ValueError(f"not a number: {text!r}")
    value = float(body) if body else 1.0
    if pi:
        value *= math.pi
    if not math.isfinite(value):
        raise ValueError(f"not a finite number: {text!r}")
    return -value if sign == "-" else value


def _parse_tol(item):
    name, sep, value = item.partition("=")
    name = name.strip()
    if not sep or not name:
        raise UsageError(f"--tol expects name=value, got {item!r}")
    if name not in verify.DEFAULT_TOLERANCES:
        known = ", ".join(sorted(verify.DEFAULT_TOLERANCES))
        raise UsageError(f"unknown tolerance {name!r}; known names: {known}")
    try:
        tol = parse_real(value)
    except ValueError as exc:
        raise UsageError(f"--tol {name}: {exc}") from None
    if tol < 0:
        raise UsageError(f"--tol {name}: tolerance must be nonnegative")
    return name, tol


_CONVERTERS = {
    "a": parse_real,
    "tmin": parse_real,
    "tmax": parse_real,
    "points": int,
    "trunc": int,
    "seed": int,
    "out": str,
    "format": str,
}


def read_config_file(path):
    """Flat ``key=value`` settings; ``#`` starts a comment, ``tol.NAME=value`` sets a tolerance."""
    settings, tols = {}, {}
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc.strerror}") from None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
        try:
            if key.startswith("tol."):
                name, tol = _parse_tol(f"{key[4:]}={value}")
                tols[name] = tol
            elif key in _CONVERTERS:
                settings[key] = _CONVERTERS[key](value)
            else:
                raise UsageError(f"unknown key {key!r}")
        except (ValueError, UsageError) as exc:
            raise UsageError(f"{path}:{lineno}: {exc}") from None
    return settings, tols


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common(parser):
    g = parser.add_argument_group("settings")
    g.add_argument("--a", type=parse_real, help="Blaschke parameter in (-1, 1)")
    g.add_argument("--tmin", type=parse_real, help="grid start (accepts e.g. -10pi)")
    g.add_argument("--tmax", type=parse_real, help="grid end, excluded")
    g.add_argument("--points", type=int, help="number of grid points")
    g.add_argument("--trunc", type=int, help="extra shifts kept beyond the output window")
    g.add_argument("--seed", type=int, help="seed for randomized checks")
    g.add_argument("--out", help="output path (default: standard output)")
    g.add_argument("--format", choices=("csv", "json"))
    g.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE",
                   help="tolerance override, repeatable")


def build_parser():
    parser = _Parser(prog="monosamp", description="Kernels, sampling and verification tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("eval", help="evaluate a kernel or spectrum over a grid")
    p.add_argument("function", choices=EVAL_FUNCTIONS)
    _common(p)
    p = sub.add_parser("reconstruct", help="reconstruct a signal from k,rho,hrho samples")
    p.add_argument("samples")
    _common(p)
    p = sub.add_parser("verify", help="run the verification suite")
    _common(p)
    p = sub.add_parser("figure", help="emit plot data for a figure")
    p.add_argument("which", choices=verify.FIGURES)
    _common(p)
    return parser


def resolve_config(args, environ=None):
    """Merge flags over the config file over defaults."""
    environ = os.environ if environ is None else environ
    cfg = CliConfig()
    path = environ.get(CONFIG_ENV)
    if path:
        settings, tols = read_config_file(path)
        for key, value in settings.items():
            setattr(cfg, key, value)
        cfg.tol.update(tols)
    for key in _CONVERTERS:
        value = getattr(args, key, None)
        if value is not None:
            setattr(cfg, key, value)
    for item in args.tol:
        name, tol = _parse_tol(item)
        cfg.tol[name] = tol
    if cfg.format not in (None, "csv", "json"):
        raise UsageError(f"format must be csv or json, got {cfg.format!r}")
    if cfg.trunc < 0:
        raise UsageError("trunc must be nonnegative")
    return cfg


def _emit(cfg, header, columns):
    if (cfg.format or "csv") == "json":
        doc = {name: [float(x) for x in np.asarray(col, dtype=float)]
               for name, col in zip(header, columns)}
        text = json.dumps(doc) + "\n"
        if cfg.out in (None, "-"):
            sys.stdout.write(text)
        else:
            with open(cfg.out, "w") as fh:
                fh.write(text)
    else:
        write_columns(cfg.out, header, columns)


def cmd_eval(function, cfg):
    a = check_a(cfg.a)
    grid = cfg.grid()
    x = grid.t
    funcs = {
        "poisson": kernels.poisson_kernel,
        "theta": kernels.phase_theta,
        "sinc_a": kernels.sinc_a,
        "cosinc_a": kernels.cosinc_a,
        "H_a": spectrum.cascade_filter,
        "spectrum_sinca": spectrum.sinc_a_spectrum,
    }
    values = np.atleast_1d(funcs[function](a, x))
    xname = "xi" if function in _FREQUENCY_FUNCTIONS else "t"
    _emit(cfg, (xname, "value"), (x, values))
    return EXIT_OK


def cmd_reconstruct(path, cfg):
    a = check_a(cfg.a)
    grid = cfg.grid()
    try:
        samples = subspace.SampleSet.from_csv(path)
    except OSError as exc:
        raise DataError(f"cannot read samples: {exc.strerror}", path=path) from None
    if len(samples) == 0:
        warnings.warn(f"{path}: no samples; writing a zero signal", stacklevel=2)
        values = np.zeros(grid.count)
    else:
        # drop terms whose centre lies more than trunc shifts outside the window
        lo = math.floor(cfg.tmin / (2 * math.pi)) - cfg.trunc
        hi = math.ceil(cfg.tmax / (2 * math.pi)) + cfg.trunc
        keep = (samples.k >= lo) & (samples.k <= hi)
        if np.any(keep):
            k = samples.k[keep]
            samples = subspace.SampleSet(int(k[0]), samples.rho[keep], samples.hrho[keep])
            values = subspace.reconstruct_from_samples(a, samples, grid).values
        else:
            values = np.zeros(grid.count)
    _emit(cfg, ("t", "value"), (grid.t, values))
    return EXIT_OK


def cmd_verify(cfg):
    a = verify.check_conditioning(cfg.a)
    suite = verify.SuiteConfig(seed=cfg.seed, trunc=cfg.trunc, tolerances=dict(cfg.tol))
    report = verify.run_suite(a, suite)
    sys.stdout.write(report.to_table())
    if cfg.out not in (None, "-"):
        if (cfg.format or "json") == "json":
            with open(cfg.out, "w") as fh:
                fh.write(report.to_json())
        else:
            report.to_csv(cfg.out)
    return EXIT_OK if report.passed else EXIT_GUARD


def cmd_figure(which, cfg):
    fig = verify.figure_data(which, cfg.a, cfg.grid())
    header = (fig.x_name, *fig.columns)
    _emit(cfg, header, (fig.x, *fig.columns.values()))
    return EXIT_OK


def _fail(code, message):
    sys.stderr.write(f"monosamp: {message}\n")
    return code


_VALUE_FLAGS = ("--a", "--tmin", "--tmax", "--tol")


def _glue_negative_values(argv):
    # argparse reads "-10pi" as an option; bind it to its flag instead
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_glue_negative_values(argv))
        cfg = resolve_config(args)
    except UsageError as exc:
        sys.stderr.write(parser.format_usage())
        return _fail(EXIT_USAGE, exc)
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    with warnings.catch_warnings():
        warnings.simplefilter("always")
        warnings.showwarning = _show_warning
        try:
            if args.command == "eval":
                return cmd_eval(args.function, cfg)
            if args.command == "reconstruct":
                return cmd_reconstruct(args.samples, cfg)
            if args.command == "verify":
                return cmd_verify(cfg)
            return cmd_figure(args.which, cfg)
        except DataError as exc:
            return _fail(EXIT_DATA, f"input data error: {exc}")
        except (ConditioningError, DomainError, GridError) as exc:
            return _fail(EXIT_GUARD, f"precondition violated: {exc}")
        except OSError as exc:
            return _fail(EXIT_DATA, f"{exc.filename}: {exc.strerror}")


def _show_warning(message, category, filename, lineno, file=None, line=None):
    sys.stderr.write(f"monosamp: warning: {message}\n")


if __name__ == "__main__":
    sys.exit(main())
