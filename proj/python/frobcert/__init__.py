"""Frobenius actions on graded local cohomology over F_p(t)."""

import json

from . import _core
from ._core import (
    DEFAULT_SEED,
    CertificationFailure,
    DimensionMismatch,
    Error,
    NonStandardGrading,
    NotPrime,
    ParseError,
    a_invariant,
    claim_names,
    default_veronese_index,
    embed_up,
    frobenius_scalar,
    p_component_split,
    semilinear_kernel,
)

__all__ = [
    "DEFAULT_SEED",
    "CertificationFailure",
    "DimensionMismatch",
    "Error",
    "NonStandardGrading",
    "NotPrime",
    "ParseError",
    "a_invariant",
    "basis",
    "certify",
    "claim_names",
    "default_veronese_index",
    "embed_up",
    "example",
    "frobenius",
    "frobenius_scalar",
    "p_component_split",
    "selftest",
    "semilinear_kernel",
    "verify",
]


def example(p):
    return json.loads(_core.example_json(p))


def basis(p, degree, n=None):
    return json.loads(_core.basis_json(p, degree, n))


def frobenius(p, degree, n=None, level=0):
    return json.loads(_core.frobenius_json(p, degree, n, level))


def certify(claim, p, n=None, window=None, jobs=1, include_f=True, raw=False):
    """Certificate as a dict, or as the exact CLI bytes with raw=True."""
    text = _core.certify_json(claim, p, n, window, jobs, include_f)
    return text if raw else json.loads(text)


def verify(cert, jobs=1):
    """(ok, failures) for a certificate dict or JSON string."""
    text = cert if isinstance(cert, str) else json.dumps(cert)
    return _core.verify_json(text, jobs)


def selftest(seed=DEFAULT_SEED, cases=1000):
    return json.loads(_core.selftest_json(seed, cases))
