"""Bound states, superpotentials, and partner potentials on the line.

A change of variable x -> s(x) with ds/dx = +-kappa(s(x)) turns the level-m
eigenproblem into -psi'' + V_m(x) psi = lambda_l psi for

    psi_{l,m}(x) = sqrt(kappa(s) rho(s)) * F_{l,m}(s),   s = s(x).

Both sign branches reduce to the same s-space formulas: with
N(s) = tau(s) + (2m-1) sigma'(s)/2,

    W_m(x)  = -N(s) / (2 kappa(s))
    dW_m/dx = sign * [ N sigma'/(4 sigma) - N'/2 ]
    V_m(x)  = N (N - sigma') / (4 sigma) + N'/2 + lambda_m

which reproduce the familiar closed forms: Poschl-Teller (s = cos x),
generalized Poschl-Teller (s = cosh x), Morse (s = e^x), hyperbolic Scarf
(s = sinh x), plus the harmonic-like (s = x) and radial-like (s = x^2/4)
conventions for constant and linear sigma.

An independent finite-difference eigensolver provides the spectral oracle:
the Dirichlet discretisation of -d^2/dx^2 + V on a box that covers the
classically allowed region reproduces the exact eigenvalues lambda_l of all
bound levels.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .assoc import AssocFunction, make_assoc
from .errors import DomainError, GridTooCoarse
from .families import Case, Family
from .ladder import assoc_from_top, lower_level, raise_level, require_ladder_level

X_FD_STEP = 1e-5  # central-difference step scale in x for generic callables


@dataclass(frozen=True)
class ChangeOfVariable:
    """Monotone map x -> s(x) from (x_lo, x_hi) onto the family interval.

    sign = +-1 records ds/dx = sign * kappa(s(x)).
    """

    case: Case
    x_lo: float
    x_hi: float
    sign: int

    def s_of_x(self, x):
        x = np.asarray(x, dtype=float)
        if self.case is Case.ONE:
            return x.copy()
        if self.case is Case.S:
            return 0.25 * x * x
        if self.case is Case.ONE_MINUS_S2:
            return np.cos(x)
        if self.case is Case.S2_MINUS_ONE:
            return np.cosh(x)
        if self.case is Case.S2:
            return np.exp(x)
        if self.case is Case.S2_PLUS_ONE:
            return np.sinh(x)
        raise AssertionError(self.case)

    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all((x > self.x_lo) & (x < self.x_hi)))

    def require_inside(self, x) -> None:
        if not self.contains(x):
            raise DomainError(
                f"x outside the open interval ({self.x_lo}, {self.x_hi})")


_CHANGES = {
    Case.ONE: ChangeOfVariable(Case.ONE, -math.inf, math.inf, +1),
    Case.S: ChangeOfVariable(Case.S, 0.0, math.inf, +1),
    Case.ONE_MINUS_S2: ChangeOfVariable(Case.ONE_MINUS_S2, 0.0, math.pi, -1),
    Case.S2_MINUS_ONE: ChangeOfVariable(Case.S2_MINUS_ONE, 0.0, math.inf, +1),
    Case.S2: ChangeOfVariable(Case.S2, -math.inf, math.inf, +1),
    Case.S2_PLUS_ONE: ChangeOfVariable(Case.S2_PLUS_ONE, -math.inf, math.inf, +1),
}

_FAMILY_LABEL = {
    Case.ONE: "harmonic_like",
    Case.S: "radial_like",
    Case.ONE_MINUS_S2: "poschl_teller",
    Case.S2_MINUS_ONE: "gen_poschl_teller",
    Case.S2: "morse",
    Case.S2_PLUS_ONE: "scarf_hyperbolic",
}


def change_of_variable(case: Case) -> ChangeOfVariable:
    """The canonical change of variable for a case (cos, cosh, exp, sinh, ...)."""
    return _CHANGES[case]


@dataclass(frozen=True)
class PotentialSpec:
    """Identification of the partner potential at level m.

    a_m = (1 - alpha - 2m)/2 and a_m_prime = (-1 - alpha + 2m)/2 are the two
    conventional level constants; delta = -beta/2.  For finite families the
    potential tends to a_m^2 + lambda_m, the continuum threshold.
    """

    family: Family
    m: int
    label: str
    a_m: float
    a_m_prime: float
    delta: float
    sign: int


def potential_spec(family: Family, m: int) -> PotentialSpec:
    alpha = float(family.alpha)
    return PotentialSpec(
        family=family, m=m, label=_FAMILY_LABEL[family.case],
        a_m=(1.0 - alpha - 2.0 * m) / 2.0,
        a_m_prime=(-1.0 - alpha + 2.0 * m) / 2.0,
        delta=-float(family.beta) / 2.0,
        sign=change_of_variable(family.case).sign)


def potential_asymptote(family: Family, m: int) -> float:
    """Continuum threshold lim V_m for finite families, inf otherwise."""
    if not family.is_finite_system:
        return math.inf
    spec = potential_spec(family, m)
    return spec.a_m ** 2 + float(family.eigenvalue(m))


@dataclass(frozen=True)
class Wavefunction:
    """sqrt(kappa rho)(s(x)) times an associated function's value at s(x).

    Any polynomial part is allowed, so smooth non-eigen test functions share
    the machinery of the true bound states psi_{l,m}.
    """

    assoc: AssocFunction

    @property
    def family(self) -> Family:
        return self.assoc.family

    @property
    def change(self) -> ChangeOfVariable:
        return change_of_variable(self.family.case)

    def __call__(self, x):
        s = self.change.s_of_x(np.asarray(x, dtype=float))
        out = np.sqrt(self.family.kappa(s) * self.family._weight_parts(s)) * self.assoc(s)
        return out if out.ndim else float(out)


def bound_state(family: Family, l: int, m: int) -> Wavefunction:
    """The normalisable eigenfunction psi_{l,m} (unnormalised amplitude)."""
    return Wavefunction(make_assoc(family, l, m))


def psi_eval(family: Family, l: int, m: int, x) -> Union[float, np.ndarray]:
    """Checked evaluation of psi_{l,m} at x inside (x_lo, x_hi)."""
    cov = change_of_variable(family.case)
    cov.require_inside(x)
    return bound_state(family, l, m)(x)


def _n_linear(family: Family, m: int, s):
    """N(s) = tau(s) + (2m-1) sigma'(s)/2 and its constant derivative."""
    n_val = family.tau(s) + (2 * m - 1) / 2.0 * family.sigma_prime(s)
    n_der = float(family.alpha) + (2 * m - 1) * float(family.sigma_coeffs[2])
    return n_val, n_der


def superpotential(family: Family, m: int, x) -> Union[float, np.ndarray]:
    """W_m(x) = -N(s(x)) / (2 kappa(s(x))), the log-derivative of psi_{m,m}."""
    require_ladder_level(family, m)
    cov = change_of_variable(family.case)
    cov.require_inside(x)
    s = cov.s_of_x(np.asarray(x, dtype=float))
    n_val, _ = _n_linear(family, m, s)
    out = -n_val / (2.0 * family.kappa(s))
    return out if out.ndim else float(out)


def superpotential_derivative(family: Family, m: int, x) -> Union[float, np.ndarray]:
    """Analytic dW_m/dx = sign * [N sigma'/(4 sigma) - N'/2] at s = s(x)."""
    require_ladder_level(family, m)
    cov = change_of_variable(family.case)
    cov.require_inside(x)
    s = cov.s_of_x(np.asarray(x, dtype=float))
    n_val, n_der = _n_linear(family, m, s)
    out = cov.sign * (n_val * family.sigma_prime(s) / (4.0 * family.sigma(s))
                      - n_der / 2.0)
    return out if out.ndim else float(out)


def potential(family: Family, m: int, x) -> Union[float, np.ndarray]:
    """Partner potential V_m(x) = W_m^2 -+ dW_m/dx + lambda_m.

    Computed in s-space as N (N - sigma')/(4 sigma) + N'/2 + lambda_m, where
    the sign convention cancels; matches the named closed forms exactly.
    """
    if m < 0:
        raise IndexError(f"level m={m} must be >= 0")
    cov = change_of_variable(family.case)
    cov.require_inside(x)
    s = cov.s_of_x(np.asarray(x, dtype=float))
    n_val, n_der = _n_linear(family, m, s)
    out = (n_val * (n_val - family.sigma_prime(s)) / (4.0 * family.sigma(s))
           + n_der / 2.0 + float(family.eigenvalue(m)))
    return out if out.ndim else float(out)


def ladder_x(family: Family, m: int, direction: str,
             f: Union[Wavefunction, Callable[[float], float]], x):
    """Apply the x-space ladder operator at level m to f, evaluated at x.

    direction "raise": sign*d/dx + W_m  (sends psi_{l,m} to psi_{l,m+1});
    direction "lower": -sign*d/dx + W_m (sends psi_{l,m+1} to
    (lambda_l - lambda_m) psi_{l,m}, unscaled).  Wavefunction inputs go
    through the exact s-space maps; generic callables use central
    differences with step X_FD_STEP * max(1, |x|).
    """
    require_ladder_level(family, m)
    if direction not in ("raise", "lower"):
        raise ValueError(f"direction must be 'raise' or 'lower', got {direction!r}")
    cov = change_of_variable(family.case)
    cov.require_inside(x)
    x_arr = np.asarray(x, dtype=float)
    if isinstance(f, Wavefunction):
        g = raise_level(f.assoc) if direction == "raise" else lower_level(f.assoc)
        out = Wavefunction(g)(x_arr)
        return out if np.ndim(out) else float(out)
    h = X_FD_STEP * np.maximum(1.0, np.abs(x_arr))
    d1 = (np.asarray(f(x_arr + h), dtype=float)
          - np.asarray(f(x_arr - h), dtype=float)) / (2.0 * h)
    w = superpotential(family, m, x_arr)
    sgn = cov.sign if direction == "raise" else -cov.sign
    out = sgn * d1 + w * np.asarray(f(x_arr), dtype=float)
    return out if np.ndim(out) else float(out)


def build_psi_from_top(family: Family, l: int, m: int, x_grid) -> np.ndarray:
    """psi_{l,m} on a grid, built by the scaled lowering chain from level l.

    The chain runs through the exact s-space maps (the x-space operators are
    their conjugates), so the result matches psi_eval to rounding.
    """
    x_grid = np.asarray(x_grid, dtype=float)
    change_of_variable(family.case).require_inside(x_grid)
    f = assoc_from_top(family, l, m)
    return np.asarray(Wavefunction(f)(x_grid), dtype=float)


# ---- finite-difference spectral oracle -------------------------------------

#: Dirichlet boxes (x_lo, x_hi, n_points) that cover all bound states of the
#: documented test parameters of each case.
DEFAULT_BOXES = {
    Case.ONE: (-10.0, 10.0, 4000),
    Case.S: (0.0, 30.0, 6000),
    Case.ONE_MINUS_S2: (0.0, math.pi, 4000),
    Case.S2_MINUS_ONE: (0.0, 40.0, 8000),
    Case.S2: (-4.0, 20.0, 8000),
    Case.S2_PLUS_ONE: (-20.0, 20.0, 8000),
}


def fd_eigensolve(potential_fn: Callable, x_lo: float, x_hi: float,
                  n_points: int, k: int,
                  convergence_tol: float = None) -> np.ndarray:
    """k lowest eigenvalues of -d^2/dx^2 + V with Dirichlet walls.

    Standard 3-point discretisation on n_points interior points; symmetric
    tridiagonal solve.  If convergence_tol is given, the grid is doubled once
    and a GridTooCoarse warning is emitted when any eigenvalue moves by more
    than 10x the tolerance (the finer values are returned).
    """
    if n_points < 200:
        raise ValueError("n_points must be >= 200")
    if not 1 <= k <= n_points:
        raise ValueError(f"need 1 <= k <= n_points, got k={k}")

    def solve(n: int) -> np.ndarray:
        x = np.linspace(x_lo, x_hi, n + 2)[1:-1]
        dx = (x_hi - x_lo) / (n + 1)
        diag = 2.0 / dx ** 2 + np.asarray(potential_fn(x), dtype=float)
        off = np.full(n - 1, -1.0 / dx ** 2)
        return eigh_tridiagonal(diag, off, eigvals_only=True,
                                select="i", select_range=(0, k - 1))

    vals = solve(n_points)
    if convergence_tol is not None:
        finer = solve(2 * n_points)
        shift = float(np.max(np.abs(finer - vals)))
        if shift > 10.0 * convergence_tol:
            warnings.warn(
                f"doubling the grid moved an eigenvalue by {shift:.3e} "
                f"(> 10 x {convergence_tol:.1e})", GridTooCoarse)
        vals = finer
    return vals


def bound_spectrum(family: Family, m: int = 0) -> list[float]:
    """Exact eigenvalues of all indices l with m <= l below the cutoff.

    For finite families this is the full bound spectrum of V_m; it is what
    the finite-difference oracle must reproduce.
    """
    top = family.max_index
    if top == math.inf:
        raise ValueError("infinite family: pass an explicit index range instead")
    return [float(family.eigenvalue(l)) for l in range(m, int(top) + 1)]


def potential_grid(family: Family, m: int, ls: Sequence[int],
                   x: np.ndarray) -> dict:
    """Columns (x, V_m, W_m, psi_{l,m}...) for export."""
    x = np.asarray(x, dtype=float)
    cols = {
        "x": x,
        "V": np.asarray(potential(family, m, x), dtype=float),
        "W": np.asarray(superpotential(family, m, x), dtype=float),
    }
    for l in ls:
        cols[f"psi_{l}"] = np.asarray(psi_eval(family, l, m, x), dtype=float)
    return cols
