"""Independent evaluation of Hermite, Laguerre, and Jacobi polynomials.

Each of the six families is, up to one multiplicative constant, a classical
polynomial under a case-specific argument transform:

    one:          H_l( sqrt(-alpha/2) s - beta/sqrt(-2 alpha) )
    s:            L_l^{beta-1}( -alpha s )
    1-s^2:        P_l^{(-(alpha+beta)/2-1, (-alpha+beta)/2-1)}( s )
    s^2-1:        P_l^{((alpha-beta)/2-1, (alpha+beta)/2-1)}( -s )
    s^2:          (s/beta)^l L_l^{1-alpha-2l}( beta/s )
    s^2+1:        i^l P_l^{((alpha+i beta)/2-1, (alpha-i beta)/2-1)}( i s )

Hermite and Laguerre go through their three-term recurrences; Jacobi uses the
finite hypergeometric sum, which stays stable for the complex parameters and
imaginary arguments of the last case (where the conjugate-pair symmetry makes
the product real up to rounding).  The proportionality constant is always
fitted, never assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DegenerateFit
from .families import Case, Family
from .polynomials import poly_coeffs


def hermite_value(n: int, z):
    """H_n(z) by H_{k+1} = 2 z H_k - 2 k H_{k-1}."""
    z = np.asarray(z)
    prev = np.ones_like(z)
    if n == 0:
        return prev
    cur = 2 * z
    for k in range(1, n):
        prev, cur = cur, 2 * z * cur - 2 * k * prev
    return cur


def laguerre_value(n: int, p, z):
    """L_n^p(z) by (k+1) L_{k+1} = (2k+1+p-z) L_k - (k+p) L_{k-1}; any real p."""
    z = np.asarray(z)
    prev = np.ones_like(z)
    if n == 0:
        return prev
    cur = 1 + p - z
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + p - z) * cur - (k + p) * prev) / (k + 1)
    return cur


def _binom(a: complex, j: int) -> complex:
    out = 1.0 + 0.0j
    for i in range(j):
        out *= (a - i) / (j - i)
    return out


def jacobi_value(n: int, p: complex, q: complex, z):
    """P_n^{(p,q)}(z) as the finite sum over C(n+p, n-k) C(n+q, k) terms."""
    z = np.asarray(z, dtype=complex)
    half_minus = 0.5 * (z - 1.0)
    half_plus = 0.5 * (z + 1.0)
    out = np.zeros_like(z)
    for k in range(n + 1):
        out = out + (_binom(n + p, n - k) * _binom(n + q, k)
                     * half_minus ** k * half_plus ** (n - k))
    return out


@dataclass(frozen=True)
class ClassicalSpec:
    """Which classical polynomial, at which parameters, under which transform."""

    kind: str                 # "hermite" | "laguerre" | "jacobi"
    degree: int
    case: Case
    alpha: float
    beta: float
    p: Optional[complex] = None
    q: Optional[complex] = None

    def value(self, s):
        """Evaluate the transformed classical expression (complex-valued)."""
        s = np.asarray(s, dtype=float)
        a, b = self.alpha, self.beta
        n = self.degree
        if self.case is Case.ONE:
            z = math.sqrt(-a / 2.0) * s - b / math.sqrt(-2.0 * a)
            return hermite_value(n, z).astype(complex)
        if self.case is Case.S:
            return laguerre_value(n, self.p.real, -a * s).astype(complex)
        if self.case is Case.ONE_MINUS_S2:
            return jacobi_value(n, self.p, self.q, s)
        if self.case is Case.S2_MINUS_ONE:
            return jacobi_value(n, self.p, self.q, -s)
        if self.case is Case.S2:
            return ((s / b) ** n * laguerre_value(n, self.p.real, b / s)).astype(complex)
        if self.case is Case.S2_PLUS_ONE:
            return 1j ** n * jacobi_value(n, self.p, self.q, 1j * s)
        raise AssertionError(self.case)


def classical_for(family: Family, l: int) -> ClassicalSpec:
    """The classical counterpart of the degree-l member of a family."""
    family.require_index(l)
    a, b = float(family.alpha), float(family.beta)
    c = family.case
    if c is Case.ONE:
        return ClassicalSpec("hermite", l, c, a, b)
    if c is Case.S:
        return ClassicalSpec("laguerre", l, c, a, b, p=complex(b - 1.0))
    if c is Case.ONE_MINUS_S2:
        return ClassicalSpec("jacobi", l, c, a, b,
                             p=complex(-(a + b) / 2.0 - 1.0),
                             q=complex((-a + b) / 2.0 - 1.0))
    if c is Case.S2_MINUS_ONE:
        return ClassicalSpec("jacobi", l, c, a, b,
                             p=complex((a - b) / 2.0 - 1.0),
                             q=complex((a + b) / 2.0 - 1.0))
    if c is Case.S2:
        return ClassicalSpec("laguerre", l, c, a, b, p=complex(1.0 - a - 2.0 * l))
    if c is Case.S2_PLUS_ONE:
        return ClassicalSpec("jacobi", l, c, a, b,
                             p=(a + 1j * b) / 2.0 - 1.0,
                             q=(a - 1j * b) / 2.0 - 1.0)
    raise AssertionError(c)


def classical_eval(spec: ClassicalSpec, s):
    """Evaluate the classical counterpart at s; always returns complex."""
    return spec.value(s)


def fit_residual(ours: np.ndarray, ref: np.ndarray) -> float:
    """Least-squares single-constant fit: max |ours - c*ref| / max |ours|.

    Raises DegenerateFit when ref vanishes on the grid (a parameter bug
    upstream would silently pass otherwise).
    """
    denom = np.vdot(ref, ref).real
    if denom < 1e-300:
        raise DegenerateFit("classical expression is identically zero on the grid")
    c = np.vdot(ref, ours) / denom
    return float(np.max(np.abs(ours - c * ref)) / np.max(np.abs(ours)))


def proportionality_residual(family: Family, l: int,
                             grid: Optional[np.ndarray] = None) -> float:
    """Max relative deviation of P_l from the fitted classical expression.

    The proportionality constant is fitted on the grid (>= l+2 interior
    points), never assumed; a residual above rounding noise means the
    generated polynomial and the classical counterpart disagree.
    """
    if grid is None:
        grid = family.sample_points(max(24, l + 2))
    grid = np.asarray(grid, dtype=float)
    if len(grid) < l + 2:
        raise ValueError(f"need at least l+2={l + 2} grid points")
    family.require_inside(grid)
    ours = poly_coeffs(family, l)(grid)
    ref = classical_eval(classical_for(family, l), grid)
    return fit_residual(ours, ref)
