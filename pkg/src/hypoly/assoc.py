"""Associated special functions kappa^m(s) * d^m/ds^m P_l(s).

The polynomial part is kept exact; kappa = sqrt(sigma) enters only at
evaluation time.  The level-m operator

    H_m = -sigma d^2 - tau d + m(m-2)/4 (sigma')^2/sigma
          + m tau/2 sigma'/sigma - m(m-2)/2 sigma'' - m tau'

has these functions as eigenfunctions with the same eigenvalues as the
underlying polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .errors import DomainError
from .families import Family
from .polynomials import Poly, poly_coeffs, sigma_poly, tau_poly

FD_STEP = 1e-5  # central-difference step scale for generic callables


@dataclass(frozen=True)
class AssocFunction:
    """Value kappa^m(s) * phi(s) with exact polynomial part phi.

    l records which polynomial the part was derived from; ladder maps keep l
    fixed while moving m.  phi may be the zero polynomial (annihilation
    marker).
    """

    family: Family
    l: int
    m: int
    phi: Poly

    @property
    def is_zero(self) -> bool:
        return self.phi.is_zero

    def __call__(self, s):
        s = np.asarray(s, dtype=float)
        out = self.family.sigma(s) ** (self.m / 2.0) * self.phi(s)
        return out if out.ndim else float(out)

    def eval_with_derivatives(self, s):
        """(f, f', f'') at interior s, all derivatives exact.

        Uses f = sigma^{m/2} phi with u = m sigma'/(2 sigma):
        f' = sigma^{m/2} (u phi + phi'), and
        f'' = sigma^{m/2} ((u^2 + u') phi + 2 u phi' + phi'').
        """
        s = np.asarray(s, dtype=float)
        sig = self.family.sigma(s)
        if np.any(sig <= 0):
            raise DomainError("sigma(s) must be positive for derivative evaluation")
        sp = self.family.sigma_prime(s)
        spp = float(self.family.sigma_second)
        k = sig ** (self.m / 2.0)
        u = self.m * sp / (2.0 * sig)
        du = self.m * (spp * sig - sp * sp) / (2.0 * sig * sig)
        p0 = self.phi(s)
        p1 = self.phi.derivative()(s)
        p2 = self.phi.derivative(2)(s)
        f = k * p0
        f1 = k * (u * p0 + p1)
        f2 = k * ((u * u + du) * p0 + 2.0 * u * p1 + p2)
        return f, f1, f2

    def scale(self, c) -> "AssocFunction":
        return AssocFunction(self.family, self.l, self.m, self.phi.scale(c))

    def to_json(self) -> dict:
        return {**self.family.to_json(), "l": self.l, "m": self.m,
                "phi": self.phi.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "AssocFunction":
        return cls(Family.from_json(obj), int(obj["l"]), int(obj["m"]),
                   Poly.from_json(obj["phi"]))


def make_assoc(family: Family, l: int, m: int) -> AssocFunction:
    """The (l, m) associated function; phi is the exact m-th derivative of P_l."""
    family.require_index(l)
    if not 0 <= m <= l:
        raise IndexError(f"level m={m} must satisfy 0 <= m <= l={l}")
    return AssocFunction(family, l, m, poly_coeffs(family, l).derivative(m))


def assoc_eval(f: AssocFunction, s) -> Union[float, np.ndarray]:
    """Checked evaluation: raises DomainError outside the open interval."""
    f.family.require_inside(s)
    return f(s)


def hamiltonian_coefficient(family: Family, m: int, s):
    """The multiplicative (non-derivative) part of the level-m operator."""
    s = np.asarray(s, dtype=float)
    sig = family.sigma(s)
    sp = family.sigma_prime(s)
    spp = float(family.sigma_second)
    alpha = float(family.alpha)
    return (m * (m - 2) / 4.0 * sp * sp / sig
            + m / 2.0 * family.tau(s) * sp / sig
            - m * (m - 2) / 2.0 * spp
            - m * alpha)


def apply_hamiltonian(family: Family, m: int,
                      f: Union[AssocFunction, Callable[[float], float]], s):
    """Evaluate (H_m f)(s).

    AssocFunction inputs use exact derivatives; generic callables use central
    differences with step FD_STEP * max(1, |s|).  Raises DomainError where
    sigma(s) = 0.
    """
    s_arr = np.asarray(s, dtype=float)
    sig = family.sigma(s_arr)
    if np.any(sig == 0):
        raise DomainError("the level-m operator is singular where sigma(s) = 0")
    if isinstance(f, AssocFunction):
        v, d1, d2 = f.eval_with_derivatives(s_arr)
    else:
        h = FD_STEP * np.maximum(1.0, np.abs(s_arr))
        fp = np.asarray(f(s_arr + h), dtype=float)
        fm = np.asarray(f(s_arr - h), dtype=float)
        v = np.asarray(f(s_arr), dtype=float)
        d1 = (fp - fm) / (2.0 * h)
        d2 = (fp - 2.0 * v + fm) / (h * h)
    out = -sig * d2 - family.tau(s_arr) * d1 + hamiltonian_coefficient(family, m, s_arr) * v
    return out if out.ndim else float(out)


def hamiltonian_poly_action(family: Family, m: int, phi: Poly) -> Poly:
    """Exact polynomial form of H_m on kappa^m * phi.

    H_m (kappa^m phi) = kappa^m [ -sigma phi'' - (tau + m sigma') phi'
                                  + lambda_m phi ],
    so the operator acts on polynomial parts without leaving them.
    """
    sig = sigma_poly(family)
    tau = tau_poly(family)
    lam_m = family.eigenvalue(m)
    return (-(sig * phi.derivative(2))
            - (tau + sig.derivative().scale(m)) * phi.derivative()
            + phi.scale(lam_m))


def derivative_recurrence_residual(family: Family, l: int, m: int, s) -> float:
    """Residual of the level recurrence tying m+1, m, m-1 at a point.

    For 1 <= m <= l-1:
        F_{l,m+1} + [tau/kappa + 2(m-1) kappa'] F_{l,m}
                  + (lambda_l - lambda_{m-1}) F_{l,m-1}
    and for m = l the same expression without the first term.  Identically
    zero in exact arithmetic; the float value returned is rounding noise.
    """
    family.require_index(l)
    if not 1 <= m <= l:
        raise IndexError(f"recurrence residual needs 1 <= m <= l, got m={m}, l={l}")
    s = np.asarray(s, dtype=float)
    family.require_inside(s)
    mid = make_assoc(family, l, m)
    low = make_assoc(family, l, m - 1)
    coeff = (family.tau(s) / family.kappa(s)
             + 2.0 * (m - 1) * family.kappa_prime(s))
    gap = float(family.eigenvalue(l) - family.eigenvalue(m - 1))
    res = coeff * mid(s) + gap * low(s)
    if m < l:
        res = res + make_assoc(family, l, m + 1)(s)
    return res if res.ndim else float(res)
