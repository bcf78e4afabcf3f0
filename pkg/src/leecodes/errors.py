"""Exception hierarchy shared by all leecodes modules."""


class LeeCodeError(Exception):
    """Base class for all library errors."""


class DimensionError(LeeCodeError):
    """Words of mismatched length were combined."""


class SizeError(LeeCodeError):
    """A set has the wrong cardinality for the requested operation."""


class DomainError(LeeCodeError):
    """An argument is outside the operation's domain."""


class MembershipError(LeeCodeError):
    """A vector is not a member of the required lattice."""


class PeriodicityError(LeeCodeError):
    """The code's period does not divide the requested modulus."""


class WindowError(LeeCodeError):
    """A verification window is too small or holds too little data."""


class ConstructionError(LeeCodeError):
    """An internal construction invariant was violated."""


class StructuralError(LeeCodeError):
    """A composite value is internally inconsistent."""


class DataFormatError(LeeCodeError):
    """Serialized input could not be parsed or validated."""
