"""Error types shared across the package.

DomainError covers mathematically invalid input (bad determinant, wrong
divisibility, points too close to the real axis, ...). ParseError covers
malformed text input; the CLI maps it to a usage error instead.  Every
error carries a short machine-readable ``code``.
"""


class ParseError(ValueError):
    """Malformed textual input (matrix strings, words, rationals)."""

    code = "parse"


class DomainError(ValueError):
    """Input is well-formed but outside the operation's domain."""

    code = "domain"


class DeterminantError(DomainError):
    code = "bad_determinant"


class NotOddPrimeError(DomainError):
    code = "not_odd_prime"


class DivisibilityError(DomainError):
    code = "bad_divisibility"


class PrimeMismatchError(DomainError):
    code = "prime_mismatch"


class CosetBodyError(DomainError):
    """Operation defined only on the Gamma0 part received a coset element."""

    code = "wrong_body"


class NotCoprimeError(DomainError):
    code = "not_coprime"


class NotAnEdgeError(DomainError):
    code = "not_an_edge"


class WrongBaseEdgeError(DomainError):
    code = "wrong_base_edge"


class ImaginaryPartError(DomainError):
    """Im(z) too small for the requested precision to be affordable."""

    code = "imaginary_part_too_small"
