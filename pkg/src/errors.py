"""
Exception hierarchy for the Simplicial Homeology Toolkit
"""


class HomeologyError(Exception):
    """Base class for every error raised by the toolkit"""


class ConfigError(HomeologyError, ValueError):
    """Invalid configuration value"""


class ComplexError(HomeologyError, ValueError):
    """Invalid simplicial complex input or construction"""


class UnknownVertexError(ComplexError):
    """A facet or simplex references a vertex label the complex does not have"""


class DuplicateVertexError(ComplexError):
    """A vertex label occurs twice in a vertex order"""


class SimplexNotInComplexError(ComplexError):
    """An operation was asked about a simplex that is not a face of the complex"""


class VertexLabelCollisionError(ComplexError):
    """A requested fresh vertex label is already in use"""


class GlueError(ComplexError):
    """A vertex identification is not injective or not face-compatible"""


class ComplexFormatError(ComplexError):
    """A JSON input file could not be parsed into the expected shape"""

    def __init__(self, message: str, location: str = None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class ComplexTooLargeError(HomeologyError):
    """A computation exceeded its configured face budget"""


class AlgebraError(HomeologyError, ArithmeticError):
    """Exact linear algebra failure"""


class ContainmentError(AlgebraError):
    """A denominator lattice is not contained in its numerator"""


class CoefficientError(AlgebraError, ValueError):
    """Unknown coefficient choice or non-prime modulus"""


class ChainComplexError(HomeologyError):
    """Chain complex construction failed an invariant"""


class DegreeOutOfRangeError(ChainComplexError, IndexError):
    """Requested chain degree is outside the complex"""


class SpectralSequenceError(HomeologyError):
    """Spectral page request or page consistency check failed"""


class BlockComplexError(HomeologyError):
    """Malformed block complex"""


class BlockSubcomplexError(BlockComplexError):
    """A block is not a subcomplex of the ambient complex"""


class BlockPartitionError(BlockComplexError):
    """Some simplex does not have exactly one owning block"""


class BlockHomologyError(BlockComplexError):
    """A block or its boundary has the wrong homology"""


class BlockOrientationError(BlockComplexError):
    """A block cannot be coherently oriented or an incidence is inconsistent"""


class SimplicialMapError(HomeologyError):
    """A vertex map does not define a simplicial map"""


class DegenerateMapError(SimplicialMapError):
    """A simplicial map collapses some simplex"""


class HypothesisViolation(HomeologyError):
    """The inputs of a structure check do not satisfy its hypotheses"""
