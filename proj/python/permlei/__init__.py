"""Exact-arithmetic workbench for dual pre-Poisson algebras.

Thin convenience layer over the pybind11 core: every function takes and
returns plain dicts, serialized through the same canonical JSON the CLI
and fixture files use.
"""

import json as _json

from ._core import (  # noqa: F401
    ConfigurationError,
    InputError,
    kinds,
)
from . import _core


def _dumps(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def verify(fixture, kind):
    """Run a checker on a fixture (dict or JSON text); returns the report."""
    return _json.loads(_core.verify(_dumps(fixture), kind))


def construct(subcommand, *inputs):
    """Run a construction; returns the new fixture as a dict."""
    return _json.loads(_core.construct(subcommand, [_dumps(i) for i in inputs]))


def ybe_residual(algebra, r):
    return _json.loads(_core.ybe_residual(_dumps(algebra), _dumps(r)))


def ybe_canonical(predpp):
    return _json.loads(_core.ybe_canonical(_dumps(predpp)))


def ybe_bialgebra(algebra, r):
    return _json.loads(_core.ybe_bialgebra(_dumps(algebra), _dumps(r)))


def ybe_dual_products(algebra, r):
    return _json.loads(_core.ybe_dual_products(_dumps(algebra), _dumps(r)))


def series(order):
    return _json.loads(_core.series(order))
