"""Parabolic Jacobi polynomials, Steinberg bases and matrix-valued orthogonal polynomials.

Rationals are passed and returned as "p/q" strings (ints and fractions.Fraction
are accepted on input). Weights are fundamental-weight coordinates and I is a
list of 1-based simple reflection indices.
"""

import json
from fractions import Fraction

from . import _pjp
from ._pjp import PjpError

__all__ = ["PjpError", "steinberg", "epoly", "jacobi", "vec", "mvop", "normalize", "verify", "rational"]


def _k(k):
    if isinstance(k, (list, tuple)):
        return [str(x) for x in k]
    return [str(k)]


def rational(text):
    """Parse a "p/q" string as a Fraction."""
    return Fraction(text)


def steinberg(rs, I, scale="1"):
    return json.loads(_pjp.steinberg(rs, list(I), str(scale)))


def epoly(rs, lam, k, method="sym", scale="1"):
    return json.loads(_pjp.epoly(rs, list(lam), _k(k), method, str(scale)))


def jacobi(rs, I, lam, k, method="sym", scale="1"):
    return json.loads(_pjp.jacobi(rs, list(I), list(lam), _k(k), method, str(scale)))


def vec(rs, I, lam, k, scale="1"):
    return json.loads(_pjp.vec(rs, list(I), list(lam), _k(k), str(scale)))


def mvop(rs, I, sigma, k, scale="1"):
    return json.loads(_pjp.mvop(rs, list(I), list(sigma), _k(k), str(scale)))


def normalize(kind, doc):
    """Decode and re-encode a JSON document of the given kind (epoly, jacobi, vector)."""
    return json.loads(_pjp.normalize(kind, json.dumps(doc)))


def verify(criterion, kset=(), box=6, jobs=1):
    """Run one acceptance criterion; returns a list of (case, passed, detail)."""
    return _pjp.verify(criterion, [str(x) for x in kset], box, jobs)
