import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FAMILIES, FAMILIES_ALT, top_index
from hypoly import Case, ConstraintViolation, DomainError, Family, IndexAboveCutoff, parse_case


def test_valid_one_minus_s2():
    fam = Family(Case.ONE_MINUS_S2, Fraction(-5), Fraction(1))
    assert fam.interval == (-1.0, 1.0)
    assert fam.cutoff == math.inf
    assert fam.max_index == math.inf


def test_invalid_s_alpha_positive():
    with pytest.raises(ConstraintViolation, match="alpha < 0"):
        Family(Case.S, Fraction(1), Fraction(1))


def test_invalid_s_beta_nonpositive():
    with pytest.raises(ConstraintViolation, match="beta > 0"):
        Family(Case.S, Fraction(-1), Fraction(-1))


def test_invalid_one_minus_s2():
    with pytest.raises(ConstraintViolation, match="alpha < beta < -alpha"):
        Family(Case.ONE_MINUS_S2, Fraction(-2), Fraction(3))


def test_invalid_s2_minus_one():
    # beta must exceed -alpha for the weight to be integrable at s = 1
    with pytest.raises(ConstraintViolation, match="-beta < alpha < 0"):
        Family(Case.S2_MINUS_ONE, Fraction(-8), Fraction(1))


def test_valid_s2_finite_cutoff():
    fam = Family(Case.S2, Fraction(-9), Fraction(2))
    assert fam.interval == (0.0, math.inf)
    assert fam.cutoff == Fraction(5)
    assert fam.max_index == 4


def test_half_integer_cutoff_admits_floor_indices():
    fam = Family(Case.S2_MINUS_ONE, Fraction(-8), Fraction(13))
    assert fam.cutoff == Fraction(9, 2)
    assert fam.max_index == 4
    fam.require_index(4)
    with pytest.raises(IndexAboveCutoff):
        fam.require_index(5)


def test_require_index_negative():
    with pytest.raises(IndexError):
        FAMILIES["morse"].require_index(-1)


def test_parse_case_aliases():
    assert parse_case("one") is Case.ONE
    assert parse_case("1-s2") is Case.ONE_MINUS_S2
    assert parse_case("s2-1") is Case.S2_MINUS_ONE
    assert parse_case("S2+1") is Case.S2_PLUS_ONE
    with pytest.raises(ConstraintViolation):
        parse_case("cubic")


def test_eigenvalue_examples():
    assert Family(Case.ONE, Fraction(-2), Fraction(0)).eigenvalue(3) == 6
    assert Family(Case.S2, Fraction(-9), Fraction(2)).eigenvalue(2) == 16
    for fam in FAMILIES.values():
        assert fam.eigenvalue(0) == 0


def test_eigenvalue_strictly_increasing(family):
    top = top_index(family, 10)
    lams = [family.eigenvalue(l) for l in range(top + 1)]
    assert all(a < b for a, b in zip(lams, lams[1:]))


def test_weight_examples():
    assert Family(Case.ONE, Fraction(-2), Fraction(0)).weight(0.0) == 1.0
    assert Family(Case.S, Fraction(-1), Fraction(1)).weight(1.0) == pytest.approx(
        math.exp(-1), rel=1e-15)
    assert Family(Case.S2, Fraction(-9), Fraction(2)).weight(1.0) == pytest.approx(
        math.exp(-2), rel=1e-15)


def test_weight_positive_inside(family):
    s = family.sample_points(25)
    assert np.all(family.weight(s) > 0)


def test_weight_domain_error():
    fam = FAMILIES["poschl_teller"]
    with pytest.raises(DomainError):
        fam.weight(1.5)
    with pytest.raises(DomainError):
        FAMILIES["morse"].weight(-0.1)


@pytest.mark.parametrize("name", list(FAMILIES) + ["alt_" + n for n in FAMILIES_ALT])
def test_weight_solves_pearson_equation(name):
    # (sigma*rho)' = tau*rho, checked by central differences
    fam = FAMILIES_ALT[name[4:]] if name.startswith("alt_") else FAMILIES[name]
    s = fam.sample_points(12)
    h = 1e-6 * np.maximum(1.0, np.abs(s))
    lhs = (fam.sigma(s + h) * fam.weight(s + h)
           - fam.sigma(s - h) * fam.weight(s - h)) / (2 * h)
    rhs = fam.tau(s) * fam.weight(s)
    assert np.max(np.abs(lhs - rhs) / (1 + np.abs(rhs))) < 1e-7


def test_kappa_prime_matches_difference(family):
    s = family.sample_points(12)
    h = 1e-6
    num = (family.kappa(s + h) - family.kappa(s - h)) / (2 * h)
    assert np.max(np.abs(num - family.kappa_prime(s))) < 1e-6


def test_family_json_round_trip(family):
    assert Family.from_json(family.to_json()) == family


@st.composite
def valid_families(draw):
    case = draw(st.sampled_from(list(Case)))
    alpha = draw(st.fractions(min_value=Fraction(-12), max_value=Fraction(-1, 2),
                              max_denominator=4))
    if case in (Case.S, Case.S2):
        beta = draw(st.fractions(min_value=Fraction(1, 2), max_value=Fraction(8),
                                 max_denominator=4))
    elif case is Case.ONE_MINUS_S2:
        k = draw(st.integers(min_value=1, max_value=7))
        beta = alpha * (1 - Fraction(k, 4))  # strictly between alpha and -alpha
    elif case is Case.S2_MINUS_ONE:
        beta = -alpha + draw(st.fractions(min_value=Fraction(1, 2),
                                          max_value=Fraction(6), max_denominator=4))
    else:
        beta = draw(st.fractions(min_value=Fraction(-4), max_value=Fraction(4),
                                 max_denominator=4))
    return Family(case, alpha, beta)


@settings(max_examples=60, deadline=None)
@given(valid_families())
def test_generated_families_are_consistent(fam):
    assert fam.cutoff > 0
    lo, hi = fam.interval
    assert lo < hi
    s = fam.sample_points(5)
    assert np.all(fam.sigma(s) > 0)
    assert np.all(fam.weight(s) > 0)
    if fam.is_finite_system:
        assert fam.max_index >= 0
        assert fam.max_index < fam.cutoff
