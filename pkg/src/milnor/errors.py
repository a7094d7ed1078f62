"""Exception taxonomy shared across the package.

Everything raised on purpose derives from MilnorError, so callers (and the
CLI) can distinguish domain failures from genuine bugs. Validation errors
cover malformed mathematical input (wrong congruence class, non-orthonormal
basis, non-unit quaternion); parameter errors cover out-of-range knobs
(negative deformation scale, missing truncation bound).
"""


class MilnorError(Exception):
    """Base class for all deliberate failures."""


class ParameterError(MilnorError, ValueError):
    """A numeric knob is outside its legal range."""


class ValidationError(MilnorError, ValueError):
    """Structured input fails a required identity or congruence."""


class DimensionMismatchError(MilnorError, ValueError):
    """Operands live in algebras of different sizes."""


class DegeneratePlaneError(MilnorError, ValueError):
    """Two vectors that were supposed to span a 2-plane do not."""


class NoFiniteMatchingError(MilnorError, ValueError):
    """No finite plateau level exists (deformation scale a <= 1)."""


class ProfileError(MilnorError, ValueError):
    """A warping profile violates one of its construction invariants."""


class OutOfRegimeError(MilnorError, ValueError):
    """The requested classification only makes sense for other parameters."""
