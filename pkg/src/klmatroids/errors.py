"""Exception types shared across the package."""

from __future__ import annotations


class KlmatroidsError(Exception):
    """Base class for every error raised by this package."""


class EmptyBases(KlmatroidsError):
    """A matroid was given no bases at all."""


class MixedCardinality(KlmatroidsError):
    """The proposed bases do not all have the same size."""


class ExchangeAxiomViolation(KlmatroidsError):
    """The proposed basis system fails the basis-exchange axiom.

    Carries a witnessing pair of bases and the element of ``basis`` that
    cannot be exchanged into ``other``.
    """

    def __init__(self, basis: tuple[int, ...], other: tuple[int, ...], element: int):
        self.basis = basis
        self.other = other
        self.element = element
        super().__init__(
            f"exchange axiom fails: removing {element} from {set(basis)} admits "
            f"no replacement from {set(other)}"
        )


class NotAFlat(KlmatroidsError):
    """A minor was requested at a set that is not closed."""


class HasLoops(KlmatroidsError):
    """The operation is only defined for loopless matroids."""


class InvalidShape(KlmatroidsError):
    """The requested tableau shape parameters are out of range."""


class InvalidParameters(KlmatroidsError):
    """The requested matroid-family or coefficient parameters are out of range."""


class NonIntegerResult(KlmatroidsError):
    """An exact rational computation that must produce an integer did not.

    This always signals an implementation bug, never bad input.
    """


class IndexOutOfRange(KlmatroidsError):
    """An action index lies outside its admissible range."""
