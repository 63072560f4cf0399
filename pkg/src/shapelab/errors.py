"""Exception types raised across the toolkit."""


class ShapelabError(Exception):
    """Base class for all toolkit errors."""


# -- geometry -----------------------------------------------------------

class NonPositiveRadius(ShapelabError):
    """Sampled boundary radius is <= 0 somewhere."""


class DegenerateStrip(ShapelabError):
    """Cylinder height functions cross (g_plus - g_minus <= 0 somewhere)."""


class MeshQualityFailure(ShapelabError):
    """Mesh generation could not reach the minimum-angle bound."""


class ComponentNotFound(ShapelabError):
    """Requested boundary component id does not exist."""


# -- assembly -----------------------------------------------------------

class SingularTriangle(ShapelabError):
    """Triangle area below the degeneracy threshold."""


# -- eigensolve ---------------------------------------------------------

class NoConvergence(ShapelabError):
    """Eigensolver failed to reach the residual target."""

    def __init__(self, iterations, message=""):
        self.iterations = iterations
        super().__init__(message or f"no convergence after {iterations} iterations")


class IndefiniteMass(ShapelabError):
    """Mass matrix is not symmetric positive definite."""


class AmbiguousCluster(ShapelabError):
    """Gap after the candidate cluster too small to certify multiplicity."""


# -- shapecalc ----------------------------------------------------------

class EmptyBoundary(ShapelabError):
    """Deformation requested on a mesh without boundary edges."""


class MeshFoldOver(ShapelabError):
    """Transport step flipped a triangle; step size too large."""


# -- criticality --------------------------------------------------------

class AllZeroFunction(ShapelabError):
    """Nodal-domain count requested for an identically zero vector."""


class OptimizerStall(ShapelabError):
    """Projected-gradient search stopped making progress above tolerance."""


# -- reference ----------------------------------------------------------

class DomainError(ShapelabError):
    """Argument outside the supported range of a special function."""


class BracketNotFound(ShapelabError):
    """No sign change located while bracketing a root (implementation bug)."""


class VolumeMismatch(ShapelabError):
    """Comparison mesh volume does not match the reference cylinder."""


class CenteringFailed(ShapelabError):
    """Centering root-find found no sign change over the mesh range."""


# -- optimizer ----------------------------------------------------------

class ZeroGradient(ShapelabError):
    """Boundary residual already constant: no ascent direction exists."""


class ProjectionDiverged(ShapelabError):
    """Volume projection Newton iteration failed to converge."""


# -- cli ----------------------------------------------------------------

class ConfigError(ShapelabError):
    """Malformed or inconsistent experiment configuration."""
