"""Toeplitz and Hankel coefficient determinants, bound chains and parameter
searches for the class U.

Numeric helpers return Python complex/float values. The report functions return
the same documents as the ``coefflab`` command-line tool, as dictionaries.
"""

import json

from ._core import (
    BudgetExceeded,
    CoefficientMapMismatch,
    CoefflabError,
    EvaluationFailure,
    InfeasibleStart,
    InvalidWindow,
    UnknownConstant,
    UnknownName,
    UnknownTheorem,
    UnsupportedId,
    WindowTooShort,
    ZeroConstantTerm,
    __version__,
    catalog_evaluate,
    catalog_names,
    catalog_window,
    closed_form,
    closed_form_ids,
    constant,
    determinant,
    membership_max_defect,
    project_feasible,
    schwarz_feasible,
    theorem_ids,
    u_coefficients,
)
from . import _core


def eval_report(det, function=None, coeffs=None):
    """Determinant report for a catalog function or a coefficient list."""
    if (function is None) == (coeffs is None):
        raise ValueError("give exactly one of function or coeffs")
    if coeffs is not None and not isinstance(coeffs, str):
        coeffs = ",".join(_format_complex(complex(c)) for c in coeffs)
    return json.loads(_core.eval_json(function or "", coeffs or "", det))


def bounds_report(theorems=(), use_stated=False):
    return json.loads(_core.bounds_json(list(theorems), use_stated))


def search(det="T2,2", a2zero=False, region="ledger", seed=42, restarts=200, budget=20000,
           step_init=0.25, step_min=1e-7, threads=1):
    return json.loads(
        _core.search_json(det, a2zero, region, seed, restarts, budget, step_init, step_min, threads))


def membership_report(function, radii=(0.9, 0.99), samples=256):
    return json.loads(_core.membership_json(function, list(radii), samples))


def full_report(include_campaigns=True, restarts=200):
    return json.loads(_core.report_json(include_campaigns, restarts))


def _format_complex(z):
    return f"{z.real!r}{z.imag:+.17g}i"


__all__ = [
    "BudgetExceeded",
    "CoefficientMapMismatch",
    "CoefflabError",
    "EvaluationFailure",
    "InfeasibleStart",
    "InvalidWindow",
    "UnknownConstant",
    "UnknownName",
    "UnknownTheorem",
    "UnsupportedId",
    "WindowTooShort",
    "ZeroConstantTerm",
    "__version__",
    "bounds_report",
    "catalog_evaluate",
    "catalog_names",
    "catalog_window",
    "closed_form",
    "closed_form_ids",
    "constant",
    "determinant",
    "eval_report",
    "full_report",
    "membership_max_defect",
    "membership_report",
    "project_feasible",
    "schwarz_feasible",
    "search",
    "theorem_ids",
    "u_coefficients",
]
