"""Plain CSV readers/writers with 17-significant-digit round trips."""
import contextlib
import os
import sys

import numpy as np

FLOAT_FORMAT = "{:.17g}"


class DataError(ValueError):
    """A data file is malformed; ``line`` is the 1-based offending line."""

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}: "
        elif where:
            where += " "
        super().__init__(where + message)


def format_value(x):
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return FLOAT_FORMAT.format(float(x))


@contextlib.contextmanager
def _open_out(target):
    if target is None or target == "-":
        yield sys.stdout
    elif isinstance(target, (str, os.PathLike)):
        with open(target, "w", newline="") as fh:
            yield fh
    else:
        yield target


def write_columns(target, header, columns):
    """Write equal-length ``columns`` under ``header`` to a path, file or stdout."""
    columns = [np.asarray(c) for c in columns]
    n = len(columns[0]) if columns else 0
    if any(len(c) != n for c in columns):
        raise ValueError("columns must have equal length")
    with _open_out(target) as fh:
        fh.write(",".join(header) + "\n")
        for i in range(n):
            fh.write(",".join(format_value(c[i]) for c in columns) + "\n")


def read_columns(source, header, integer_columns=()):
    """Read a CSV whose first line must equal ``header``.

    Returns a list of column arrays. Blank lines are skipped. Raises
    :class:`DataError` naming the 1-based line of the first bad row.
    """
    path = None
    if isinstance(source, (str, os.PathLike)):
        path = os.fspath(source)
        with open(source) as fh:
            text = fh.read()
    elif hasattr(source, "read"):
        text = source.read()
    else:
        text = str(source)
    lines = text.splitlines()
    rows = []
    seen_header = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(",")]
        if not seen_header:
            if fields != list(header):
                raise DataError(f"expected header {','.join(header)!r}, got {line!r}",
                                line=lineno, path=path)
            seen_header = True
            continue
        if len(fields) != len(header):
            raise DataError(f"expected {len(header)} fields, got {len(fields)}: {line!r}",
                            line=lineno, path=path)
        row = []
        for j, field in enumerate(fields):
            try:
                if j in integer_columns:
                    value = int(field)
                else:
                    value = float(field)
            except ValueError:
                raise DataError(f"cannot parse {header[j]} value {field!r}",
                                line=lineno, path=path) from None
            if not np.isfinite(value):
                raise DataError(f"non-finite {header[j]} value {field!r}",
                                line=lineno, path=path)
            row.append(value)
        rows.append(row)
    cols = []
    for j in range(len(header)):
        dtype = np.int64 if j in integer_columns else float
        cols.append(np.array([r[j] for r in rows], dtype=dtype))
    return cols
