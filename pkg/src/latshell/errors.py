"""Exception types shared across the package."""


class LatshellError(Exception):
    """Base class for all package-specific errors."""


class BadId(LatshellError):
    """An element id is out of range for the structure it refers to."""


class CycleDetected(LatshellError):
    """Cover relations contain a directed cycle."""


class NotComparable(LatshellError):
    """An interval endpoint pair is not ordered."""


class NotBounded(LatshellError):
    """Operation requires a poset with a unique bottom and top."""


class TooLarge(LatshellError):
    """Input exceeds the configured size budget."""


class BadParams(LatshellError):
    """Constructor parameters are outside the valid range."""


class NotALattice(LatshellError):
    """Witnessed failure of unique meets/joins.

    Attributes x, y name a pair with no unique greatest lower bound or
    least upper bound; ``reason`` is ``"meet"`` or ``"join"``.
    """

    def __init__(self, x: int, y: int, reason: str):
        self.x = x
        self.y = y
        self.reason = reason
        super().__init__(f"pair ({x}, {y}) has no unique {reason}")


class NotACoatom(LatshellError):
    """Element passed to a coatom-only predicate is not a coatom."""


class NotAnMChain(LatshellError):
    """Chain is not a maximal chain of left-modular elements."""


class NotCompatible(LatshellError):
    """Two poset elements cannot be identified (one covers-or-incomparable
    relation required)."""


class NotComodernistic(LatshellError):
    """Witnessed interval with no left-modular coatom.

    Attributes x, y give the interval endpoints.
    """

    def __init__(self, x: int, y: int):
        self.x = x
        self.y = y
        super().__init__(f"interval [{x}, {y}] has no left-modular coatom")


class NotAGroup(LatshellError):
    """A multiplication table fails a group axiom."""

    def __init__(self, axiom: str, witness=None):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"not a group: {axiom} fails (witness {witness})")


class NotASubgroup(LatshellError):
    """Element subset is not closed under the group operation."""


class NotSolvable(LatshellError):
    """Operation requires a solvable group."""


class BadPermutation(LatshellError):
    """Sequence is not a permutation of the expected index range."""
