"""Exact counts and checks for twenty-vertex, mixed six-vertex and GT pattern models."""

import json

from . import _icegt
from ._icegt import CapExceeded, LatticeError, suite_names, verify_ybe

__all__ = [
    "CapExceeded",
    "LatticeError",
    "count_20v",
    "count_triangles",
    "eval_df_formula",
    "eval_free_boundary_formula",
    "fiber_sum",
    "list_m6v",
    "omega_fsa",
    "run_cli",
    "run_suite",
    "sample",
    "suite_names",
    "verify_ybe",
    "weighted_count_m6v",
    "weighted_count_triangles",
]


def count_20v(k, method="dp", threads=1):
    return int(_icegt.count_20v(list(k), method, threads))


def weighted_count_m6v(k):
    return int(_icegt.weighted_count_m6v(list(k)))


def weighted_count_triangles(k):
    return int(_icegt.weighted_count_triangles(list(k)))


def count_triangles(k):
    return int(_icegt.count_triangles(list(k)))


def eval_df_formula(n):
    return int(_icegt.eval_df_formula(n))


def eval_free_boundary_formula(n, m):
    return int(_icegt.eval_free_boundary_formula(n, m))


def omega_fsa(rows):
    return int(_icegt.omega_fsa([list(r) for r in rows]))


def fiber_sum(rows):
    return int(_icegt.fiber_sum([list(r) for r in rows]))


def run_suite(name, quick=False, threads=1):
    return json.loads(_icegt.run_suite(name, quick, threads))


def list_m6v(k, limit=None):
    return [json.loads(s) for s in _icegt.list_m6v(list(k), limit)]


def sample(rows, count=1, seed=0):
    return [json.loads(s) for s in _icegt.sample([list(r) for r in rows], count, seed)]


def run_cli(args):
    """Returns (exit code, stdout, stderr)."""
    return _icegt.run_cli([str(a) for a in args])
