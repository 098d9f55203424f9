"""Exception types raised across the package."""


class SemigroupError(ValueError):
    """Base class for invalid semigroup input or construction failures."""


class NotCofinite(SemigroupError):
    """Generators with gcd > 1 span a monoid with infinitely many gaps."""


class NotASemigroup(SemigroupError):
    """A proposed gap set whose complement is not closed under addition.

    ``witness`` holds a pair ``(a, b)`` of members whose sum is a gap.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotMember(SemigroupError):
    """An integer expected to lie in the semigroup does not."""


class NotGammaHyperelliptic(SemigroupError):
    """The semigroup fails the gamma-hyperelliptic certificate."""


class MalformedOddList(SemigroupError):
    """The odd members below twice the genus do not number gamma."""


class ConstructionOutOfRange(SemigroupError):
    """A closed-form construction did not produce the advertised semigroup."""


class GenusMismatch(SemigroupError):
    """Two tableaux compared cell-wise have different genus."""
