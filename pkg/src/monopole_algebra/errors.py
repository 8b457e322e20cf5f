"""Exception hierarchy for the monopole algebra library."""


class MonopoleAlgebraError(Exception):
    """Base class for all library errors."""


class DomainError(MonopoleAlgebraError):
    """Input outside the mathematical domain of an operation."""


class SingularityError(DomainError):
    """Evaluation requested on or too close to a singular locus."""


class NumericalError(MonopoleAlgebraError):
    """A numerical result is non-finite or otherwise unusable."""


class IncommensurableRadicandsError(MonopoleAlgebraError):
    """Sum of two signed square roots left the representable closure."""
