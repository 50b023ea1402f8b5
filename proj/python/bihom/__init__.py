"""Exact-arithmetic BiHom-Lie colour algebras.

Rationals are returned as fractions.Fraction; reports are plain dicts.
"""

import json
from fractions import Fraction

from . import _bihom
from ._bihom import (
    Algebra,
    Error,
    NotFoundError,
    ParseError,
    ValidationError,
    build_osp12 as _build_osp12,
    commutator_algebra,
    corpus,
    corpus_names,
    parse_algebra,
    run_cli,
)

__all__ = [
    "Algebra",
    "Error",
    "NotFoundError",
    "ParseError",
    "ValidationError",
    "build_osp12",
    "check_axioms",
    "cohomology",
    "commutator_algebra",
    "corpus",
    "corpus_names",
    "derivations",
    "g_associative",
    "matrix",
    "parse_algebra",
    "run_cli",
    "structure",
    "yau_twist",
]


def _q(x):
    return str(Fraction(x))


def _matrix_arg(m):
    return [[_q(x) for x in row] for row in m]


def matrix(rows):
    """Converts a nested list of "p/q" strings to Fractions."""
    return [[Fraction(x) for x in row] for row in rows]


def structure(algebra, i, j):
    """Coordinates of the product of basis vectors i and j."""
    return [Fraction(x) for x in algebra.structure(i, j)]


def build_osp12(lam, kappa):
    return _build_osp12(_q(lam), _q(kappa))


def yau_twist(algebra, a2, b2):
    return _bihom.yau_twist(algebra, _matrix_arg(a2), _matrix_arg(b2))


def check_axioms(algebra):
    return json.loads(_bihom.check_axioms(algebra))


def g_associative(algebra, subgroup):
    return json.loads(_bihom.g_associative(algebra, subgroup))


def cohomology(algebra, n, r=0, s=0, l=0, gamma=None):
    """One result dict per degree (or only the given degree)."""
    return json.loads(_bihom.cohomology(algebra, n, r, s, l, gamma))


def derivations(algebra, kind="der", k=0, l=0, gamma=None, strict=False):
    return json.loads(_bihom.derivations(algebra, kind, k, l, gamma, strict))
