"""Exact generation of the polynomial eigenfunctions.

Coefficients are arbitrary-precision rationals throughout; evaluation for
numerics is double-precision Horner.  Two independent generators are provided
on purpose: the downward coefficient recursion of the defining equation, and
the symbolic derivative iteration behind the Rodrigues representation.  They
must agree exactly, which is the package's primary self-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .families import Family


@dataclass(frozen=True)
class Poly:
    """Dense polynomial with exact rational coefficients, ascending powers.

    The zero polynomial is represented by the single coefficient 0; every
    other polynomial has a nonzero leading coefficient.
    """

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(*coeffs) -> "Poly":
        return Poly(_strip(tuple(Fraction(c) for c in coeffs)))

    @staticmethod
    def zero() -> "Poly":
        return Poly((Fraction(0),))

    @staticmethod
    def one() -> "Poly":
        return Poly((Fraction(1),))

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (Fraction(0),)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; 0 for constants including zero."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(_strip(tuple(self.coeff(k) + other.coeff(k) for k in range(n))))

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(_strip(tuple(self.coeff(k) - other.coeff(k) for k in range(n))))

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(_strip(tuple(out)))

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly.zero()
        return Poly(tuple(a * c for a in self.coeffs))

    def derivative(self, order: int = 1) -> "Poly":
        p = self.coeffs
        for _ in range(order):
            p = tuple(k * p[k] for k in range(1, len(p))) or (Fraction(0),)
        return Poly(_strip(p))

    def monic(self) -> "Poly":
        lead = self.coeffs[-1]
        if lead == 0:
            raise ZeroDivisionError("cannot normalise the zero polynomial")
        return self.scale(Fraction(1) / lead)

    def eval_exact(self, s) -> Fraction:
        s = Fraction(s)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * s + c
        return acc

    @cached_property
    def _float_coeffs(self) -> np.ndarray:
        return np.array([float(c) for c in self.coeffs])

    def __call__(self, s):
        """Double-precision Horner evaluation; accepts scalars or arrays."""
        s = np.asarray(s, dtype=float)
        acc = np.zeros_like(s)
        for c in self._float_coeffs[::-1]:
            acc = acc * s + c
        return acc if acc.ndim else float(acc)

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Poly":
        return Poly(_strip(tuple(Fraction(c) for c in obj["coeffs"])))


def _strip(coeffs: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n > 1 and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


def sigma_poly(family: Family) -> Poly:
    return Poly(_strip(family.sigma_coeffs))


def tau_poly(family: Family) -> Poly:
    return Poly(_strip((family.beta, family.alpha)))


def poly_coeffs(family: Family, l: int) -> Poly:
    """Monic degree-l eigenfunction via the downward coefficient recursion.

    Substituting sum c_k s^k into sigma y'' + tau y' + lambda_l y = 0 gives

        [a2 k(k-1) + alpha k + lambda_l] c_k
            = -[a1 (k+1) k + beta (k+1)] c_{k+1} - a0 (k+2)(k+1) c_{k+2}

    seeded with c_l = 1, c_{l+1} = 0.  The bracket equals
    lambda_l - lambda_k, nonzero for k < l below the cutoff.
    """
    family.require_index(l)
    a0, a1, a2 = family.sigma_coeffs
    alpha, beta = family.alpha, family.beta
    lam = family.eigenvalue(l)
    c = [Fraction(0)] * (l + 1)
    c[l] = Fraction(1)
    for k in range(l - 1, -1, -1):
        num = (a1 * (k + 1) * k + beta * (k + 1)) * c[k + 1]
        if k + 2 <= l:
            num += a0 * (k + 2) * (k + 1) * c[k + 2]
        den = a2 * k * (k - 1) + alpha * k + lam
        assert den != 0, "eigenvalues must be distinct below the cutoff"
        c[k] = -num / den
    return Poly(tuple(c))


def rodrigues_coeffs(family: Family, l: int) -> Poly:
    """Monic degree-l eigenfunction via the exact Rodrigues-type iteration.

    With Q_0 = 1 and Q_{j+1} = sigma Q_j' + [(l-j-1) sigma' + tau] Q_j, the
    final Q_l equals rho^{-1} d^l/ds^l (sigma^l rho) as a polynomial identity,
    using sigma rho' = (tau - sigma') rho to eliminate the weight.  The result
    is normalised to leading coefficient 1.  Independent of poly_coeffs.
    """
    family.require_index(l)
    sig = sigma_poly(family)
    sig_d = sig.derivative()
    tau = tau_poly(family)
    q = Poly.one()
    for j in range(l):
        q = sig * q.derivative() + (sig_d.scale(l - j - 1) + tau) * q
    assert q.degree == l, "iteration must preserve exact degree below the cutoff"
    return q.monic()


def ode_residual(family: Family, p: Poly, l: int) -> Poly:
    """sigma p'' + tau p' + lambda_l p as an exact polynomial (zero iff p solves)."""
    lam = family.eigenvalue(l)
    return (sigma_poly(family) * p.derivative(2)
            + tau_poly(family) * p.derivative()
            + p.scale(lam))


def three_term_coeffs(family: Family, l: int) -> tuple[Fraction, Fraction]:
    """Exact (b_l, c_l) with s*P_l = P_{l+1} + b_l P_l + c_l P_{l-1}.

    Monic normalisation fixes the leading recurrence coefficient at 1.
    Requires 1 <= l and l + 1 below the cutoff.
    """
    if l < 1:
        raise IndexError(f"three-term coefficients need l >= 1, got l={l}")
    family.require_index(l + 1)
    p_prev = poly_coeffs(family, l - 1)
    p_cur = poly_coeffs(family, l)
    p_next = poly_coeffs(family, l + 1)
    rem = Poly.of(0, 1) * p_cur - p_next
    b_l = rem.coeff(l)
    rem = rem - p_cur.scale(b_l)
    c_l = rem.coeff(l - 1)
    rem = rem - p_prev.scale(c_l)
    assert rem.is_zero, "three-term residual must vanish identically"
    return b_l, c_l


def zeros(family: Family, l: int) -> np.ndarray:
    """All l zeros of the degree-l member, sorted ascending.

    Companion-matrix eigenvalues of the monic polynomial followed by one
    Newton polish; the zeros are real, simple, and interior to (a, b).
    """
    p = poly_coeffs(family, l)
    if p.degree == 0:
        return np.array([])
    coeffs_desc = p._float_coeffs[::-1]
    roots = np.roots(coeffs_desc)
    roots = np.real(roots)
    dp = p.derivative()
    roots = roots - p(roots) / dp(roots)
    roots.sort()
    return roots
