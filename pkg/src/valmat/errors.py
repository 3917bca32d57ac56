"""Exception types shared by every module."""


class ValmatError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ValmatError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class CapacityError(ValmatError):
    """An exhaustive routine was asked to run beyond its configured bound."""


class ParameterError(ValmatError, ValueError):
    """Construction parameters violate a documented invariant."""


class InvalidFamilyError(ParameterError):
    """A set family does not satisfy the axioms it is claimed to satisfy."""


class InvalidRepresentationError(ValmatError):
    """A representation object is internally inconsistent."""


class InfeasibleError(ValmatError):
    """An optimisation problem has no feasible solution."""


class SchemaError(ValmatError, ValueError):
    """A serialized artifact does not match the expected schema."""
