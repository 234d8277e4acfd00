"""svtlab: graded local cohomology of square-free monomial ideals and the
second-vanishing-theorem equivalence, computed exactly."""

__version__ = "0.1.0"

ENGINE_VERSION = __version__
