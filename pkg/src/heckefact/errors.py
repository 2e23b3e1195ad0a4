"""Exception types shared across the package."""


class HeckefactError(Exception):
    """Base class for all package-specific errors."""


class InternalInexactDivision(HeckefactError):
    """A division that must be exact left a remainder (arithmetic bug)."""


class SizeMismatch(HeckefactError):
    """Operands live in algebras of different rank."""


class IndexOutOfRange(HeckefactError):
    """A generator or content index is outside its legal range."""


class RankGuardExceeded(HeckefactError):
    """Requested rank exceeds the desk-scale guardrail."""


class GuardrailExceeded(HeckefactError):
    """Brute-force parameters exceed the enumeration guardrail."""


class FieldNotSupported(HeckefactError):
    """Subspace counting only supports small fixed finite fields."""


class NotASubset(HeckefactError):
    """inv(S; U) requires S to be contained in U."""


class UnionNotFull(HeckefactError):
    """The set tuple does not cover the ground set."""


class DegreeMismatch(HeckefactError):
    """The symmetric function degree violates a theorem hypothesis."""


class ParseError(HeckefactError):
    """CLI input could not be parsed."""


class UnknownCheck(HeckefactError):
    """No check with that name is registered."""
