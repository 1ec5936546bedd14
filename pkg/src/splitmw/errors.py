"""Exception types shared across the toolkit."""

from __future__ import annotations


class SplitMWError(Exception):
    """Base class for all toolkit errors."""


class EmptyBasesError(SplitMWError):
    """A matroid was given an empty basis family."""


class WrongBasisSizeError(SplitMWError):
    """A claimed basis does not have exactly `rank` elements."""


class ExchangeViolationError(SplitMWError):
    """The basis exchange axiom fails; carries a concrete witness."""

    def __init__(self, basis1, basis2, element):
        self.basis1 = tuple(basis1)
        self.basis2 = tuple(basis2)
        self.element = element
        super().__init__(
            f"exchange fails for B1={self.basis1}, B2={self.basis2}, "
            f"e={element}: no f in B2\\B1 makes (B1\\{{e}})|{{f}} a basis"
        )


class LimitExceededError(SplitMWError):
    """Input is larger than the configured brute-force limit."""


class NotCleanInputError(SplitMWError):
    """The operation requires a loopless and coloopless matroid."""


class LoopsPresentError(NotCleanInputError):
    def __init__(self, elements):
        self.elements = tuple(elements)
        super().__init__(f"matroid has loops at elements {self.elements}")


class ColoopsPresentError(NotCleanInputError):
    def __init__(self, elements):
        self.elements = tuple(elements)
        super().__init__(f"matroid has coloops at elements {self.elements}")


class NotSplitError(SplitMWError):
    """The matroid is not a split matroid."""


class ClassificationFailureError(SplitMWError):
    """A connected split matroid with no clean pivot matched no base case.

    This would refute the base-case classification the tracer relies on,
    so the offending matroid is attached in full.
    """

    def __init__(self, matroid, message="no base case matched"):
        self.matroid = matroid
        super().__init__(f"{message}: n={matroid.n} rank={matroid.rank} "
                         f"bases={sorted(matroid.bases)}")


class ExhaustivenessFailureError(ClassificationFailureError):
    """classify_base_case found neither a small-rank case nor a minimal matroid."""
