"""First-order raising/lowering maps between adjacent levels.

Acting on kappa^m phi, the raising operator kappa d/ds - m kappa' sends the
polynomial part to phi' at level m+1; its formal adjoint
-kappa d/ds - tau/kappa - m kappa' sends a level-(m+1) part psi to
-sigma psi' - (m sigma' + tau) psi at level m, UNSCALED: on an eigen part it
returns (lambda_l - lambda_m) times the lower function.  Keeping both maps
symbolic makes every ladder identity an exact rational statement.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .assoc import AssocFunction, apply_hamiltonian, hamiltonian_poly_action, make_assoc
from .errors import IndexAboveCutoff
from .families import Family
from .polynomials import sigma_poly, tau_poly
from . import quadrature


def raise_level(f: AssocFunction) -> AssocFunction:
    """Level m -> m+1: phi -> phi'.  Annihilates constant parts (m = l)."""
    return AssocFunction(f.family, f.l, f.m + 1, f.phi.derivative())


def lower_level(f: AssocFunction) -> AssocFunction:
    """Level m+1 -> m, unscaled: psi -> -sigma psi' - (m sigma' + tau) psi."""
    if f.m < 1:
        raise IndexError("cannot lower below level 0")
    m = f.m - 1
    sig = sigma_poly(f.family)
    tau = tau_poly(f.family)
    phi = -(sig * f.phi.derivative()) - (sig.derivative().scale(m) + tau) * f.phi
    return AssocFunction(f.family, f.l, m, phi)


def assoc_from_top(family: Family, l: int, m: int) -> AssocFunction:
    """Rebuild the (l, m) function by lowering from the top of its chain.

    Starts at level l (part = l!, from the monic leading term) and applies
    the scaled lowering map; equals make_assoc(family, l, m) exactly.
    """
    family.require_index(l)
    if not 0 <= m < l:
        raise IndexError(f"top-down build needs 0 <= m < l, got m={m}, l={l}")
    f = make_assoc(family, l, l)
    lam_l = family.eigenvalue(l)
    for j in range(l - 1, m - 1, -1):
        gap = lam_l - family.eigenvalue(j)
        f = lower_level(f).scale(Fraction(1) / gap)
    return f


def require_ladder_level(family: Family, m: int) -> None:
    """The (m, m+1) operator pair exists only for m + 1 < cutoff."""
    if m < 0:
        raise IndexError(f"level m={m} must be >= 0")
    if not m + 1 < family.cutoff:
        raise IndexAboveCutoff(
            f"ladder pair at m={m} needs m+1 < cutoff nu={family.cutoff}")


def norm_chain(family: Family, l: int, tol: float = 1e-10) -> np.ndarray:
    """Quadrature norms ||F_{l,m}|| for m = 0..l.

    Successive entries satisfy the gap recursion
    ||F_{l,m+1}|| = sqrt(lambda_l - lambda_m) ||F_{l,m}|| up to quadrature
    error.
    """
    family.require_index(l)
    out = np.empty(l + 1)
    for m in range(l + 1):
        f = make_assoc(family, l, m)
        res = quadrature.inner_product(family, f, f, tol=tol)
        out[m] = np.sqrt(res.value)
    return out


def factorization_residual(family: Family, m: int, f: AssocFunction, s):
    """Pointwise residuals of the two factorisations of the level operators.

    r1: (H_m - lambda_m) g - (lower o raise) g, with g = f's part at level m.
    r2: (H_{m+1} - lambda_m) g - (raise o lower) g, at level m+1.
    Both identities hold operator-wise; the residuals measure rounding only.
    """
    require_ladder_level(family, m)
    s = np.asarray(s, dtype=float)
    lam_m = float(family.eigenvalue(m))

    g_lo = AssocFunction(family, f.l, m, f.phi)
    lhs1 = apply_hamiltonian(family, m, g_lo, s) - lam_m * g_lo(s)
    rhs1 = lower_level(raise_level(g_lo))(s)
    r1 = lhs1 - rhs1

    g_hi = AssocFunction(family, f.l, m + 1, f.phi)
    lhs2 = apply_hamiltonian(family, m + 1, g_hi, s) - lam_m * g_hi(s)
    rhs2 = raise_level(lower_level(g_hi))(s)
    r2 = lhs2 - rhs2
    if np.ndim(r1):
        return r1, r2
    return float(r1), float(r2)


def intertwine_residual(family: Family, m: int, f: AssocFunction, s):
    """Pointwise residuals of the two intertwining identities.

    r1: H_m (lower g) - lower (H_{m+1} g), with g = f's part at level m+1.
    r2: raise (H_m g) - H_{m+1} (raise g), with g at level m.
    """
    require_ladder_level(family, m)
    s = np.asarray(s, dtype=float)

    g_hi = AssocFunction(family, f.l, m + 1, f.phi)
    lhs1 = apply_hamiltonian(family, m, lower_level(g_hi), s)
    h_hi = AssocFunction(family, f.l, m + 1,
                         hamiltonian_poly_action(family, m + 1, g_hi.phi))
    rhs1 = lower_level(h_hi)(s)
    r1 = lhs1 - rhs1

    g_lo = AssocFunction(family, f.l, m, f.phi)
    h_lo = AssocFunction(family, f.l, m,
                         hamiltonian_poly_action(family, m, g_lo.phi))
    lhs2 = raise_level(h_lo)(s)
    rhs2 = apply_hamiltonian(family, m + 1, raise_level(g_lo), s)
    r2 = lhs2 - rhs2
    if np.ndim(r1):
        return r1, r2
    return float(r1), float(r2)
