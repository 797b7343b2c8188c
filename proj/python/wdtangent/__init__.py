"""Exact deformation diagnostics for G-valued Weil-Deligne representations.

Thin pythonic wrapper over the compiled ``_wdtangent`` module: documents are
plain dicts here and JSON strings at the binding boundary.
"""

import json
import os
import sys

try:
    from . import _wdtangent as _core
except ImportError:  # running from a build tree: point WDT_MODULE_DIR at it
    _module_dir = os.environ.get("WDT_MODULE_DIR")
    if not _module_dir:
        raise
    sys.path.insert(0, _module_dir)
    import _wdtangent as _core

__all__ = [
    "catalog",
    "validate",
    "cohomology",
    "is_smooth",
    "is_very_smooth",
    "smooth_point",
    "local_dim",
    "global_ledger",
    "to_phi_module",
    "from_phi_module",
]


def catalog():
    """Built-in group models with their basic invariants."""
    return json.loads(_core.catalog())


def validate(point):
    """Constraint violations of a WD point document; an empty list means valid."""
    return _core.validate(json.dumps(point))


def cohomology(point):
    """Tangent-obstruction dimensions h0, h1, h2 with the duality check."""
    return json.loads(_core.cohomology(json.dumps(point)))


def is_smooth(point):
    return _core.is_smooth(json.dumps(point))


def is_very_smooth(point):
    return _core.is_very_smooth(json.dumps(point))


def smooth_point(group, partition=(), p=2, fK=1):
    """Certified smooth point for the given group spec and Jordan partition."""
    return json.loads(_core.smooth_point(json.dumps(group), list(partition), p, fK))


def local_dim(group, degree=1, regular_hodge=True, fixed_det=False):
    return _core.local_dim(json.dumps(group), degree, regular_hodge, fixed_det)


def global_ledger(input_doc):
    return json.loads(_core.global_ledger(json.dumps(input_doc)))


def to_phi_module(point, fL=0):
    return json.loads(_core.to_phi_module(json.dumps(point), fL))


def from_phi_module(module):
    return json.loads(_core.from_phi_module(json.dumps(module)))
