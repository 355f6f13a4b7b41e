"""Unified orthogonal polynomial systems of hypergeometric-type equations.

Six equation families sigma(s) y'' + (alpha s + beta) y' + lambda y = 0 with
sigma in {1, s, 1-s^2, s^2-1, s^2, s^2+1} share one exact treatment: monic
polynomial eigenfunctions in rational arithmetic, the associated functions
kappa^m d^m/ds^m P_l with their raising/lowering algebra, weighted quadrature
for orthogonality and norms, the classical-polynomial counterparts, and the
exactly solvable Schrödinger problems (Pöschl-Teller, Morse, Scarf, ...)
carried by each family, checked against an independent finite-difference
spectral oracle.
"""

from .assoc import (AssocFunction, apply_hamiltonian, assoc_eval,
                    derivative_recurrence_residual, make_assoc)
from .classical import (ClassicalSpec, classical_eval, classical_for,
                        proportionality_residual)
from .errors import (ConstraintViolation, DegenerateFit, DomainError,
                     GridTooCoarse, HypolyError, IndexAboveCutoff,
                     NoConvergence, NonIntegrable)
from .families import Case, Family, parse_case
from .ladder import (assoc_from_top, factorization_residual,
                     intertwine_residual, lower_level, norm_chain, raise_level)
from .polynomials import (Poly, ode_residual, poly_coeffs, rodrigues_coeffs,
                          three_term_coeffs, zeros)
from .quadrature import (GramResult, QuadratureResult, gram_csv, gram_json,
                         gram_matrix, inner_product, integrate)
from .schroedinger import (ChangeOfVariable, PotentialSpec, Wavefunction,
                           bound_spectrum, bound_state, build_psi_from_top,
                           change_of_variable, fd_eigensolve, ladder_x,
                           potential, potential_asymptote, potential_grid,
                           potential_spec, psi_eval, superpotential,
                           superpotential_derivative)

__all__ = [
    "AssocFunction", "Case", "ChangeOfVariable", "ClassicalSpec",
    "ConstraintViolation", "DegenerateFit", "DomainError", "Family",
    "GramResult", "GridTooCoarse", "HypolyError", "IndexAboveCutoff",
    "NoConvergence", "NonIntegrable", "Poly", "PotentialSpec",
    "QuadratureResult", "Wavefunction",
    "apply_hamiltonian", "assoc_eval", "assoc_from_top", "bound_spectrum",
    "bound_state", "build_psi_from_top", "change_of_variable",
    "classical_eval", "classical_for", "derivative_recurrence_residual",
    "factorization_residual", "fd_eigensolve", "gram_csv", "gram_json",
    "gram_matrix", "inner_product", "integrate", "intertwine_residual",
    "ladder_x", "lower_level", "make_assoc", "norm_chain", "ode_residual",
    "parse_case", "poly_coeffs", "potential", "potential_asymptote",
    "potential_grid", "potential_spec", "proportionality_residual",
    "psi_eval", "raise_level", "rodrigues_coeffs", "superpotential",
    "superpotential_derivative", "three_term_coeffs", "zeros",
]
