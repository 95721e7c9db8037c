"""Exact beta-deformed torus knot invariants."""

import csv
import io
import json

from ._core import (
    CalibrationError,
    IntegrityError,
    IoError,
    NonPolynomialError,
    PropertyFlags,
    Superpolynomial,
    UsageError,
    __version__,
    compute,
    specialize,
    verify_fixture,
    verify_oracle,
)

__all__ = [
    "CalibrationError",
    "IntegrityError",
    "IoError",
    "NonPolynomialError",
    "PropertyFlags",
    "Superpolynomial",
    "UsageError",
    "__version__",
    "compute",
    "generating_function",
    "scan",
    "specialize",
    "verify_fixture",
    "verify_oracle",
]


def generating_function(n, r, k_check=3):
    """F_{n,r}(z) as a dict with "numerator" and "denominator" entries."""
    from ._core import generating_function_json

    return json.loads(generating_function_json(n, r, k_check))


def scan(n_max, m_max, threads=1):
    """One dict per (n, m) with 2 <= n <= n_max, n < m <= m_max."""
    from ._core import scan_csv

    rows = list(csv.DictReader(io.StringIO(scan_csv(n_max, m_max, threads))))
    ints = ("n", "m", "gcd", "a_max", "q_max", "t_max", "term_count")
    for row in rows:
        for key in ints:
            row[key] = int(row[key])
        row["millis"] = float(row["millis"])
    return rows
