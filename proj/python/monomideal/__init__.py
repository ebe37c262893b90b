"""Monomial ideals over a field: decompositions, Betti numbers, cleanness and
Cohen-Macaulay tests. Verdicts come back as dicts with ``value`` in
{True, False, "undecided"} plus the route that decided them."""

import json

from . import _monomideal
from ._monomideal import (
    BudgetExceeded,
    Ideal,
    InconsistencyError,
    ParseError,
    alexander_dual,
    associated_primes,
    betti_table,
    colon,
    depth,
    dim,
    has_linear_resolution,
    height,
    ideal_sum,
    intersect,
    irreducible_decomposition,
    is_componentwise_linear,
    is_generic,
    is_shellable,
    linear_quotients,
    minimal_primes,
    parse_document,
    polarize,
    product,
    proj_dim,
    radical,
    regularity,
    render_document,
    satisfies_s1,
    with_characteristic,
)


def _verdict(name):
    native = getattr(_monomideal, name)

    def decide(ideal, time_budget=None, certificate=False):
        return json.loads(native(ideal, time_budget, certificate))

    decide.__name__ = name
    decide.__doc__ = native.__doc__
    return decide


is_cm = _verdict("is_cm")
is_scm = _verdict("is_scm")
is_clean = _verdict("is_clean")
is_pretty_clean = _verdict("is_pretty_clean")
is_almost_clean = _verdict("is_almost_clean")


def classify(ideal, label="", time_budget=None, certificate=False):
    """Full report: primes, dimension and every verdict."""
    return json.loads(_monomideal.classify(ideal, label, time_budget, certificate))


def load(path):
    """Read an ideal file; returns (ideal, label)."""
    with open(path, encoding="utf-8") as f:
        return parse_document(f.read())
