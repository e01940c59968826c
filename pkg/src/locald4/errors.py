"""Exception types shared across the package."""


class LocalD4Error(Exception):
    """Base class for all package-specific errors."""


class DegreeMismatch(LocalD4Error):
    """Generators act on point sets of different sizes."""


class OrderExceedsCap(LocalD4Error):
    """A group is larger than the enumeration cap allows."""


class VertexOutOfRange(LocalD4Error):
    """A vertex index does not belong to the graph or action."""


class CosetLimitExceeded(LocalD4Error):
    """Coset enumeration needed more live cosets than the budget."""


class TableNotClosed(LocalD4Error):
    """A coset table with undefined entries was used where a closed one is required."""


class InvalidPartition(LocalD4Error):
    """Blocks do not partition the vertex set."""


class PartitionNotInvariant(LocalD4Error):
    """A group generator does not permute the given blocks."""


class ConnectionNotInverseClosed(LocalD4Error):
    """A Cayley connection set is not closed under inverses."""


class IdentityInConnection(LocalD4Error):
    """A Cayley connection set contains the identity."""


class SelfPairedLoop(LocalD4Error):
    """The connecting element of a coset graph lies in the subgroup."""


class NotASubgroup(LocalD4Error):
    """Claimed subgroup generators do not sift into the ambient chain."""


class UnknownSeed(LocalD4Error):
    """No seed graph with the requested name."""


class SeedInvariantViolated(LocalD4Error):
    """A seed graph failed its stored integrity checks."""


class InvalidParams(LocalD4Error):
    """Family parameters outside the admissible range."""


class SearchBudgetExceeded(LocalD4Error):
    """Isomorphism/automorphism backtracking exceeded its node budget."""


class NotLocallyD4(LocalD4Error):
    """The pair is not locally dihedral of degree 4."""


class NotLocallyC23(LocalD4Error):
    """The pair is not locally C2 acting on 3 points."""


class StabTooSmall(LocalD4Error):
    """Vertex stabiliser too small for the requested construction."""


class PairingDegenerate(LocalD4Error):
    """Vertex or arc pairing collapses onto short cycles."""


class NotCubic(LocalD4Error):
    """A cubic graph was expected."""


class NotVertexTransitive(LocalD4Error):
    """A vertex-transitive action was expected."""


class NotPowerOfTwo(LocalD4Error):
    """An argument had to be a power of two."""
