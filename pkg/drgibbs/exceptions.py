"""Error types raised by drgibbs.

Parameter problems derive from ``ValueError`` and numerical breakdowns from
``ArithmeticError`` so callers can catch them with the builtin classes too.
"""


class DrgibbsError(Exception):
    """Base class of every error raised by this package."""


class BadParam(DrgibbsError, ValueError):
    """A family parameter, option or descriptor is invalid."""


class AxiomViolation(BadParam):
    """Recurrence coefficients do not define a polynomial hypergroup."""

    def __init__(self, index, axiom):
        self.index = index
        self.axiom = axiom
        super().__init__(f"coefficient index {index}: {axiom}")


class DomainError(BadParam):
    """An argument lies outside the domain where a formula is valid."""


class TooLarge(BadParam):
    """A requested graph exceeds the vertex budget."""


class NonPrimeField(BadParam):
    """Subspace enumeration was asked for a field size that is not prime."""


class NegativeCoefficient(DrgibbsError, ArithmeticError):
    """A convolution produced a negative weight (inconsistent coefficients)."""

    def __init__(self, i, j, k, value):
        self.pair = (i, j)
        self.index = k
        self.value = value
        super().__init__(f"delta_{i} * delta_{j} has weight {value} at {k}")


class NumericalFailure(DrgibbsError, ArithmeticError):
    """A floating-point computation did not produce a usable answer."""


class NoConvergence(NumericalFailure):
    """An iterative refinement ran out of steps."""


class NotDistanceRegular(DrgibbsError):
    """Intersection counts differ between two base pairs at the same distance."""

    def __init__(self, pair, other, distance):
        self.pair = pair
        self.other = other
        self.distance = distance
        super().__init__(
            f"pairs {pair} and {other} at distance {distance} have different intersection counts"
        )


class EmbeddingFailure(DrgibbsError):
    """A vertex map does not preserve distances."""

    def __init__(self, pair, base_distance, image_distance):
        self.pair = pair
        self.base_distance = base_distance
        self.image_distance = image_distance
        super().__init__(
            f"pair {pair}: distance {base_distance} maps to {image_distance}"
        )
