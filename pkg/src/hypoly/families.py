"""The six admissible equation families and their validated parameters.

Each family is a second-order equation sigma(s) y'' + tau(s) y' + lambda y = 0
with tau(s) = alpha*s + beta and sigma one of

    1,  s,  1 - s^2,  s^2 - 1,  s^2,  s^2 + 1.

The weight rho solves (sigma*rho)' = tau*rho and is positive on the natural
open interval (a, b); the admissible (alpha, beta) region is exactly the one
that makes rho a finite positive weight there.  Families with quadratic sigma
of positive leading coefficient support only finitely many polynomial
eigenfunctions, indexed by l < nu = (1 - alpha)/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

import numpy as np

from .errors import ConstraintViolation, DomainError, IndexAboveCutoff

RationalLike = Union[Fraction, int, str]

_INF = math.inf


class Case(Enum):
    """Tag selecting the leading polynomial sigma(s)."""

    ONE = "one"
    S = "s"
    ONE_MINUS_S2 = "one_minus_s2"
    S2_MINUS_ONE = "s2_minus_one"
    S2 = "s2"
    S2_PLUS_ONE = "s2_plus_one"


# sigma = a2*s^2 + a1*s + a0, stored ascending: (a0, a1, a2)
_SIGMA = {
    Case.ONE: (1, 0, 0),
    Case.S: (0, 1, 0),
    Case.ONE_MINUS_S2: (1, 0, -1),
    Case.S2_MINUS_ONE: (-1, 0, 1),
    Case.S2: (0, 0, 1),
    Case.S2_PLUS_ONE: (1, 0, 1),
}

_INTERVAL = {
    Case.ONE: (-_INF, _INF),
    Case.S: (0.0, _INF),
    Case.ONE_MINUS_S2: (-1.0, 1.0),
    Case.S2_MINUS_ONE: (1.0, _INF),
    Case.S2: (0.0, _INF),
    Case.S2_PLUS_ONE: (-_INF, _INF),
}

# Families with an infinite ladder of polynomial eigenfunctions.
_INFINITE = {Case.ONE, Case.S, Case.ONE_MINUS_S2}

_CASE_ALIASES = {
    "one": Case.ONE,
    "1": Case.ONE,
    "s": Case.S,
    "one_minus_s2": Case.ONE_MINUS_S2,
    "one-minus-s2": Case.ONE_MINUS_S2,
    "1-s2": Case.ONE_MINUS_S2,
    "s2_minus_one": Case.S2_MINUS_ONE,
    "s2-minus-one": Case.S2_MINUS_ONE,
    "s2-1": Case.S2_MINUS_ONE,
    "s2": Case.S2,
    "s2_plus_one": Case.S2_PLUS_ONE,
    "s2-plus-one": Case.S2_PLUS_ONE,
    "s2+1": Case.S2_PLUS_ONE,
}


def parse_case(name: str) -> Case:
    """Map a user-facing case name (one, s, 1-s2, s2-1, s2, s2+1, ...) to a Case."""
    key = name.strip().lower()
    if key not in _CASE_ALIASES:
        raise ConstraintViolation(f"unknown case {name!r}; expected one of "
                                  f"{sorted(set(a for a in _CASE_ALIASES))}")
    return _CASE_ALIASES[key]


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


@dataclass(frozen=True)
class Family:
    """A validated problem family: case tag plus exact rational (alpha, beta).

    Raises ConstraintViolation if (alpha, beta) fall outside the admissible
    region of the case:

        one:          alpha < 0
        s:            alpha < 0 and beta > 0
        one_minus_s2: alpha < beta < -alpha
        s2_minus_one: -beta < alpha < 0
        s2:           alpha < 0 and beta > 0
        s2_plus_one:  alpha < 0
    """

    case: Case
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", _as_fraction(self.alpha))
        object.__setattr__(self, "beta", _as_fraction(self.beta))
        a, b = self.alpha, self.beta
        c = self.case
        if c in (Case.ONE, Case.S2_PLUS_ONE):
            if not a < 0:
                raise ConstraintViolation("alpha < 0 violated")
        elif c in (Case.S, Case.S2):
            if not a < 0:
                raise ConstraintViolation("alpha < 0 violated")
            if not b > 0:
                raise ConstraintViolation("beta > 0 violated")
        elif c is Case.ONE_MINUS_S2:
            if not (a < b < -a):
                raise ConstraintViolation("alpha < beta < -alpha violated")
        elif c is Case.S2_MINUS_ONE:
            if not (-b < a < 0):
                raise ConstraintViolation("-beta < alpha < 0 violated")

    # ---- structural data -------------------------------------------------

    @property
    def sigma_coeffs(self) -> tuple[Fraction, Fraction, Fraction]:
        """(a0, a1, a2) with sigma = a2 s^2 + a1 s + a0."""
        a0, a1, a2 = _SIGMA[self.case]
        return Fraction(a0), Fraction(a1), Fraction(a2)

    @property
    def interval(self) -> tuple[float, float]:
        """The open interval (a, b) carrying the weight."""
        return _INTERVAL[self.case]

    @property
    def cutoff(self) -> Union[Fraction, float]:
        """Index bound nu: inf for sigma in {1, s, 1-s^2}, else (1-alpha)/2 > 0."""
        if self.case in _INFINITE:
            return _INF
        return (1 - self.alpha) / 2

    @property
    def is_finite_system(self) -> bool:
        return self.case not in _INFINITE

    @property
    def max_index(self) -> Union[int, float]:
        """Largest valid integer index l (satisfying l < cutoff); inf if unbounded."""
        nu = self.cutoff
        if nu == _INF:
            return _INF
        return math.ceil(nu) - 1

    def require_index(self, l: int) -> None:
        """Gate an index against 0 <= l < cutoff."""
        if l < 0:
            raise IndexError(f"index l={l} must be >= 0")
        nu = self.cutoff
        if not l < nu:
            raise IndexAboveCutoff(
                f"l={l} >= cutoff nu={nu}; this family has only "
                f"{self.max_index + 1} polynomial members")

    def eigenvalue(self, l: int) -> Fraction:
        """Exact eigenvalue for index l: -(sigma''/2) l(l-1) - alpha l.

        Strictly increasing in l below the cutoff; eigenvalue(0) == 0.
        """
        if l < 0:
            raise IndexError(f"index l={l} must be >= 0")
        _, _, a2 = self.sigma_coeffs
        return -a2 * l * (l - 1) - self.alpha * l

    # ---- pointwise evaluation (vectorised) --------------------------------

    def sigma(self, s):
        a0, a1, a2 = (float(c) for c in self.sigma_coeffs)
        s = np.asarray(s, dtype=float)
        return (a2 * s + a1) * s + a0

    def sigma_prime(self, s):
        _, a1, a2 = (float(c) for c in self.sigma_coeffs)
        s = np.asarray(s, dtype=float)
        return 2.0 * a2 * s + a1

    @property
    def sigma_second(self) -> Fraction:
        return 2 * self.sigma_coeffs[2]

    def tau(self, s):
        s = np.asarray(s, dtype=float)
        return float(self.alpha) * s + float(self.beta)

    def kappa(self, s):
        """kappa = sqrt(sigma), positive inside (a, b)."""
        return np.sqrt(self.sigma(s))

    def kappa_prime(self, s):
        """Analytic kappa' = sigma' / (2 kappa); avoids differencing near endpoints."""
        return self.sigma_prime(s) / (2.0 * self.kappa(s))

    def contains(self, s) -> bool:
        a, b = self.interval
        s = np.asarray(s, dtype=float)
        return bool(np.all((s > a) & (s < b)))

    def require_inside(self, s) -> None:
        if not self.contains(s):
            a, b = self.interval
            raise DomainError(f"point outside the open interval ({a}, {b})")

    # ---- weight ------------------------------------------------------------

    def weight(self, s):
        """The positive weight rho(s) on (a, b); raises DomainError outside."""
        self.require_inside(s)
        return self._weight_parts(np.asarray(s, dtype=float))

    def _weight_parts(self, s, d_lo=None, d_hi=None):
        """Weight from s plus optional exact distances to finite endpoints.

        Quadrature passes d_lo = s - a and/or d_hi = b - s computed directly in
        the transformed variable, which keeps endpoint powers accurate where
        forming the difference from s would cancel.  No domain checks.
        """
        alpha, beta = float(self.alpha), float(self.beta)
        c = self.case
        if c is Case.ONE:
            return np.exp(0.5 * alpha * s * s + beta * s)
        if c is Case.S:
            t = s if d_lo is None else d_lo
            return t ** (beta - 1.0) * np.exp(alpha * t)
        if c is Case.ONE_MINUS_S2:
            dl = (1.0 + s) if d_lo is None else d_lo
            dr = (1.0 - s) if d_hi is None else d_hi
            p_lo = -(alpha - beta) / 2.0 - 1.0
            p_hi = -(alpha + beta) / 2.0 - 1.0
            return dl ** p_lo * dr ** p_hi
        if c is Case.S2_MINUS_ONE:
            dl = (s - 1.0) if d_lo is None else d_lo
            p_lo = (alpha + beta) / 2.0 - 1.0
            p_out = (alpha - beta) / 2.0 - 1.0
            return (dl + 2.0) ** p_out * dl ** p_lo
        if c is Case.S2:
            t = s if d_lo is None else d_lo
            return t ** (alpha - 2.0) * np.exp(-beta / t)
        if c is Case.S2_PLUS_ONE:
            return (1.0 + s * s) ** (alpha / 2.0 - 1.0) * np.exp(beta * np.arctan(s))
        raise AssertionError(c)

    # ---- test/sample support ----------------------------------------------

    def sample_points(self, n: int = 20) -> np.ndarray:
        """Evenly spaced interior points in a core window, for residual checks."""
        lo, hi = _SAMPLE_WINDOW[self.case]
        return np.linspace(lo, hi, n)

    def to_json(self) -> dict:
        return {"case": self.case.value, "alpha": str(self.alpha), "beta": str(self.beta)}

    @classmethod
    def from_json(cls, obj: dict) -> "Family":
        return cls(parse_case(obj["case"]), Fraction(obj["alpha"]), Fraction(obj["beta"]))


_SAMPLE_WINDOW = {
    Case.ONE: (-3.0, 3.0),
    Case.S: (0.2, 8.0),
    Case.ONE_MINUS_S2: (-0.9, 0.9),
    Case.S2_MINUS_ONE: (1.05, 8.0),
    Case.S2: (0.15, 6.0),
    Case.S2_PLUS_ONE: (-3.0, 3.0),
}
