"""Density of cyclic matrices in maximal reducible matrix algebras over F_q."""

import json

from . import _redcyc
from ._redcyc import BudgetExceeded, table_series

__all__ = [
    "BudgetExceeded",
    "bounds",
    "char_poly",
    "coprime_count",
    "enumerate_exact",
    "estimate",
    "is_cyclic",
    "min_poly",
    "probe",
    "table_series",
]


def bounds(n, r, q):
    return json.loads(_redcyc.bounds_json(n, r, str(q)))


def enumerate_exact(n, r, q, mode="algebra", budget=1 << 26, workers=1):
    return json.loads(_redcyc.enumerate_json(n, r, str(q), mode, budget, workers))


def estimate(n, r, q, trials, seed=1, mode="algebra", ci_level=0.99, workers=1):
    return json.loads(_redcyc.estimate_json(n, r, str(q), trials, seed, mode, ci_level, workers))


def probe(generators, max_tries=1000, seed=1):
    """`generators` uses the text format of the CLI's --file option."""
    return json.loads(_redcyc.probe_json(generators, max_tries, seed))


def coprime_count(r, s, q):
    return int(_redcyc.coprime_count(r, s, q))


def is_cyclic(matrix, q):
    return _redcyc.is_cyclic(matrix, str(q))


def char_poly(matrix, q):
    """Coefficients, constant term first, as packed field elements."""
    return _redcyc.char_poly(matrix, str(q))


def min_poly(matrix, q):
    return _redcyc.min_poly(matrix, str(q))
