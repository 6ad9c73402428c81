"""Weak bialgebras, universal r-forms and their rings of fractions."""

import json

from ._core import (
    InvalidArgument,
    Scalar,
    StructureError,
    __version__,
    examples,
    quantum_integer,
    run_cli,
    suite_names,
)
from . import _core


def _params(params):
    return {str(k): str(v) for k, v in (params or {}).items()}


def check(name, suites=None, params=None, seed=1):
    """Run check suites on a catalog example; defaults to its manifest."""
    return json.loads(_core._check(name, list(suites or []), _params(params), seed))


def localize(name, at=None, params=None):
    """Localize a catalog example at its default monoid or at named elements."""
    return json.loads(_core._localize(name, list(at or []), _params(params)))


def quantum_determinant(r):
    """Terms of det_q in the level-r graph WBA, keyed by basis label."""
    return json.loads(_core._quantum_determinant(r))


def emit(name, params=None):
    """Serialized structure tables of a catalog example."""
    return json.loads(_core._emit(name, _params(params)))


__all__ = [
    "InvalidArgument",
    "Scalar",
    "StructureError",
    "__version__",
    "check",
    "emit",
    "examples",
    "localize",
    "quantum_determinant",
    "quantum_integer",
    "run_cli",
    "suite_names",
]
