"""Exact slope filtrations and Harder-Narasimhan polygons.

Types are lists of ``fractions.Fraction`` (non-increasing). Matrices, modules and
isocrystals are passed as documents in the line-oriented text format used by the
``hnslope`` command line tool, e.g.::

    ring=padic p=2
    matrix=
    4; 2
    0; 1/2
"""

from ._hnslope import (
    HnslopeError,
    check_suite_names,
    convex_sum,
    dominance,
    entrywise_sum,
    evaluate,
    ext_type,
    fargues_type,
    hn_filtration,
    hodge_type,
    ht_fargues_bound,
    involution,
    lattice_distance,
    mazur_check,
    newton_type,
    plot,
    run_check,
    snf_valuations,
    sym_type,
    tensor_type,
    torsion_inv,
    twist_shift,
)

__all__ = [
    "HnslopeError",
    "check_suite_names",
    "convex_sum",
    "dominance",
    "entrywise_sum",
    "evaluate",
    "ext_type",
    "fargues_type",
    "hn_filtration",
    "hodge_type",
    "ht_fargues_bound",
    "involution",
    "lattice_distance",
    "mazur_check",
    "newton_type",
    "plot",
    "run_check",
    "snf_valuations",
    "sym_type",
    "tensor_type",
    "torsion_inv",
    "twist_shift",
]
