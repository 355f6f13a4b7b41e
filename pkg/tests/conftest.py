"""Shared test fixtures: the documented family parameter matrix.

FAMILIES is the primary matrix used by exact-arithmetic, quadrature, and
classical tests.  SCHROEDINGER_FAMILIES swaps the radial-like entry for
beta = 2: for beta < 2 the origin is a limit-circle endpoint of the
radial-like potential and a Dirichlet finite-difference oracle does not
realise the family's own boundary condition.
"""

from fractions import Fraction

import pytest

from hypoly import Case, Family

FAMILIES = {
    "hermite_like": Family(Case.ONE, Fraction(-2), Fraction(0)),
    "laguerre_like": Family(Case.S, Fraction(-1), Fraction(1)),
    "poschl_teller": Family(Case.ONE_MINUS_S2, Fraction(-5), Fraction(1)),
    "gen_poschl_teller": Family(Case.S2_MINUS_ONE, Fraction(-8), Fraction(13)),
    "morse": Family(Case.S2, Fraction(-9), Fraction(2)),
    "scarf": Family(Case.S2_PLUS_ONE, Fraction(-7), Fraction(2)),
}

# second parameter set per case, for coverage away from the primary values
FAMILIES_ALT = {
    "hermite_like": Family(Case.ONE, Fraction(-3), Fraction(1)),
    "laguerre_like": Family(Case.S, Fraction(-2), Fraction(3, 2)),
    "poschl_teller": Family(Case.ONE_MINUS_S2, Fraction(-4), Fraction(-1)),
    "gen_poschl_teller": Family(Case.S2_MINUS_ONE, Fraction(-10), Fraction(12)),
    "morse": Family(Case.S2, Fraction(-7), Fraction(1)),
    "scarf": Family(Case.S2_PLUS_ONE, Fraction(-6), Fraction(-2)),
}

SCHROEDINGER_FAMILIES = dict(FAMILIES)
SCHROEDINGER_FAMILIES["laguerre_like"] = Family(Case.S, Fraction(-1), Fraction(2))


def top_index(family: Family, cap: int) -> int:
    """Largest index to exercise: min(cap, largest valid index)."""
    top = family.max_index
    return cap if top == float("inf") else min(cap, top)


@pytest.fixture(params=list(FAMILIES), ids=list(FAMILIES))
def family(request) -> Family:
    return FAMILIES[request.param]


@pytest.fixture(params=list(SCHROEDINGER_FAMILIES), ids=list(SCHROEDINGER_FAMILIES))
def sfamily(request) -> Family:
    return SCHROEDINGER_FAMILIES[request.param]
