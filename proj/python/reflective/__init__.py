"""Exact local Euler obstructions and Chern-Mather classes of stratified
projective varieties, computed from CSM classes with the duality involution."""

import json

from ._core import (
    ReflectiveError,
    chern_B,
    csm_quadric,
    csm_stratum,
    duality_check,
    eu_values,
    integrate,
    involute,
    lr_multiply,
    milnor_class,
    milnor_number,
    q_poly,
)
from . import _core

__all__ = [
    "ReflectiveError",
    "chern_B",
    "csm_quadric",
    "csm_stratum",
    "det_strata",
    "detvar_report",
    "duality_check",
    "eu_values",
    "integrate",
    "involute",
    "lr_multiply",
    "milnor_class",
    "milnor_number",
    "q_poly",
    "quadric_report",
    "quadric_strata",
    "solve",
]


def solve(stratification):
    """Euler table report for a stratification given as a dict or JSON text."""
    if not isinstance(stratification, str):
        stratification = json.dumps(stratification)
    return json.loads(_core.solve_json(stratification))


def det_strata(n):
    return json.loads(_core.det_strata_json(n))


def detvar_report(n):
    return json.loads(_core.detvar_report_json(n))


def quadric_strata(n, rank):
    return json.loads(_core.quadric_strata_json(n, rank))


def quadric_report(n, rank):
    return json.loads(_core.quadric_report_json(n, rank))
