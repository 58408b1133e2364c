"""Leibniz algebras over GF(p), their subalgebra lattices and the kernel checks."""

import json

from ._core import (
    Algebra,
    BudgetExceeded,
    DimensionMismatch,
    IdentityFailure,
    Lattice,
    ParseError,
    classify,
    diamond,
    diamond_witness,
    find_generator,
    isomorphic,
    kernel_fixed,
    kernel_pair,
    lattice,
    nilpotent_generator,
    one_generator,
    signature,
    signature_string,
    single_chain,
    verify_json,
)


def verify(spec, timing=False):
    """Run a verification spec (dict or JSON text) and return the report as a dict."""
    text = spec if isinstance(spec, str) else json.dumps(spec)
    return json.loads(verify_json(text, timing))


__all__ = [
    "Algebra",
    "BudgetExceeded",
    "DimensionMismatch",
    "IdentityFailure",
    "Lattice",
    "ParseError",
    "classify",
    "diamond",
    "diamond_witness",
    "find_generator",
    "isomorphic",
    "kernel_fixed",
    "kernel_pair",
    "lattice",
    "nilpotent_generator",
    "one_generator",
    "signature",
    "signature_string",
    "single_chain",
    "verify",
]
