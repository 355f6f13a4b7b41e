"""Exception hierarchy shared across the package."""


class HypolyError(Exception):
    """Base class for errors raised by this package."""


class ConstraintViolation(HypolyError, ValueError):
    """Family parameters (alpha, beta) violate the admissibility inequalities."""


class IndexAboveCutoff(HypolyError, IndexError):
    """Requested index l >= nu; a finite family has only ceil(nu) members."""


class DomainError(HypolyError, ValueError):
    """Evaluation point lies outside the open interval of the family."""


class NoConvergence(HypolyError, RuntimeError):
    """Quadrature levels exhausted before two successive refinements agreed."""


class NonIntegrable(HypolyError, RuntimeError):
    """Quadrature values diverge across refinement levels."""


class DegenerateFit(HypolyError, RuntimeError):
    """Proportionality fit against an identically-zero reference."""


class GridTooCoarse(UserWarning):
    """Doubling the eigensolver grid moved an eigenvalue by more than 10x tolerance."""
