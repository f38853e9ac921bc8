"""Exact Kauffman bracket skein computations and positivity checks.

Laurent polynomials are returned as dicts mapping exponents to integers.
Skein vectors are lists of (basis descriptor, Laurent polynomial) pairs.
Sequences are selected by name ("chebyshev", "power"), by a path to a JSON
sequence file, or given directly as a list of coefficient lists.
"""

import json

from . import _skeinpos
from ._skeinpos import CrossingCapExceeded, StructureError

__all__ = [
    "CrossingCapExceeded",
    "StructureError",
    "sequence_entry",
    "to_basis",
    "theta_bullet",
    "resolve",
    "zkn_target",
    "minimality",
    "arc_constraints",
    "d1_constraints",
    "audit",
]

DEFAULT_CAP = 24


def _laurent(obj):
    if isinstance(obj, int):
        return {0: obj} if obj else {}
    return {int(e): int(c) for e, c in obj.items()}


def _vector(text):
    return [(t["basis"], _laurent(t["coeff"])) for t in json.loads(text)]


def _seq(seq):
    if isinstance(seq, str):
        return seq, False
    return json.dumps(seq), True


def _poly(coeffs):
    out = []
    for c in coeffs:
        out.append(c if isinstance(c, int) else {str(e): v for e, v in c.items()})
    return json.dumps(out)


def sequence_entry(seq, n):
    """Coefficients of the n-th polynomial of a sequence, ascending in t."""
    return [_laurent(c) for c in json.loads(_skeinpos.sequence_entry(*_seq(seq), n))]


def to_basis(coeffs, seq="chebyshev"):
    """Coordinates of a polynomial, given by its t-coefficients, in a sequence basis."""
    return [_laurent(c) for c in json.loads(_skeinpos.to_basis(_poly(coeffs), *_seq(seq)))]


def theta_bullet(coeffs, cap=DEFAULT_CAP, jobs=1, q1=False):
    """theta_0 placed over p(z) in the marked annulus."""
    return _vector(_skeinpos.theta_bullet(_poly(coeffs), cap, jobs, q1))


def resolve(diagram, k=1, n=1, ideal="none", cap=DEFAULT_CAP, jobs=1, q1=False):
    """State sum of a built-in diagram, optionally modulo a boundary-arc ideal."""
    return _vector(_skeinpos.resolve(diagram, k, n, ideal, cap, jobs, q1))


def zkn_target(k, n):
    """q^-kn z_{k,n} in normal form."""
    return _vector(_skeinpos.zkn_target(k, n))


def minimality(seq, n, q1=False):
    return json.loads(_skeinpos.minimality(*_seq(seq), n, q1))


def arc_constraints(seq, n, k=1, verify=True, cap=DEFAULT_CAP, jobs=1, q1=False):
    return json.loads(_skeinpos.arc_constraints(*_seq(seq), n, k, verify, cap, jobs, q1))


def d1_constraints(seq="chebyshev", q1=False):
    return json.loads(_skeinpos.d1_constraints(*_seq(seq), q1))


def audit(seq, max_n, q1=False):
    return json.loads(_skeinpos.audit(*_seq(seq), max_n, q1))
