"""Exception types shared across the package."""


class HeckeblocksError(Exception):
    """Base class for all package errors."""


class BeadCountTooSmall(HeckeblocksError):
    """Abacus bead count is smaller than the number of parts."""


class SizeMismatch(HeckeblocksError):
    """Two partitions were expected to have equal size."""


class EmptyPartition(HeckeblocksError):
    """Operation requires a nonempty partition."""


class NotERegular(HeckeblocksError):
    """Operation requires an e-regular partition."""


class WrongBlock(HeckeblocksError):
    """Partition does not lie in the expected block."""


class DifferentBlock(HeckeblocksError):
    """Partitions lie in different blocks."""


class BracketSyntaxError(HeckeblocksError):
    """Malformed angle-bracket expression; carries the byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class DuplicateRunner(HeckeblocksError):
    """A runner index occurs twice in a bracket expression."""


class RunnerOutOfRange(HeckeblocksError):
    """Runner index exceeds the number of runners in context."""


class NonPartitionSubscript(HeckeblocksError):
    """Bracket subscript is not weakly decreasing."""


class BlockMismatch(HeckeblocksError):
    """Bracket expression incompatible with the supplied block."""


class WeightMismatch(HeckeblocksError):
    """Decoded partition has the wrong block weight."""


class NonExactDivision(HeckeblocksError):
    """Quantum-factorial division left a remainder (certifies a bug)."""


class CorrectionDiverged(HeckeblocksError):
    """Canonical-basis correction loop failed to terminate (certifies a bug)."""


class HypothesisUnmet(HeckeblocksError):
    """An intermediate adjustment entry was not resolved in time."""


class ExpansionResidue(HeckeblocksError):
    """Canonical-basis expansion left a nonzero remainder (certifies a bug)."""


class PositivityViolation(HeckeblocksError):
    """A coefficient left the expected positive cone (certifies a bug)."""


class OracleMismatch(HeckeblocksError):
    """Two independent algorithms disagreed (certifies a bug)."""
