"""Exception and warning types shared across the package."""


class WignerKitError(Exception):
    """Base class for all package errors."""


class OverflowCeiling(WignerKitError):
    """Polynomial degree or magnitude exceeds the documented overflow ceiling."""


class PoleAtNonpositiveInteger(WignerKitError):
    """Gamma evaluated at a pole (zero or a negative integer)."""


class SeriesDivergence(WignerKitError):
    """Series argument outside the configured convergence ceiling."""


class ParameterPole(WignerKitError):
    """Function parameters sit on a pole of the defining formula."""


class BranchCutEvaluation(WignerKitError):
    """Argument lies on the negative real axis; caller must pick a side."""


class NonconvergentQuadrature(WignerKitError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class BoundaryDecayViolation(WignerKitError):
    """Wavefunction is not negligible at the edge of its sample domain."""


class NonHermitianResult(WignerKitError):
    """Imaginary part of a transform exceeded tolerance after symmetrization."""


class GridMismatch(WignerKitError):
    """Two grids do not share identical metadata."""


class StencilOutOfBounds(WignerKitError):
    """Finite-difference stencil does not fit inside the grid."""


class CFLViolation(WignerKitError):
    """Time step too large for the grid and advection speed."""


class NonHermitianDensity(WignerKitError):
    """Density matrix fails the Hermitian / unit-trace contract."""


class ParameterExtractionFailure(WignerKitError):
    """Conjugated operator left the closed kernel family; not silently projected."""


class OverflowGuard(WignerKitError):
    """Hyperbolic argument large enough to overflow closed-form entries."""


class SingularPoint(WignerKitError):
    """Evaluation requested on a singular locus (e.g. x*p = 0)."""


class DomainError(WignerKitError, ValueError):
    """Argument outside the mathematical domain of the function."""


class TruncationWarning(UserWarning):
    """Parameters push truncated Fock-space accuracy heuristics."""
