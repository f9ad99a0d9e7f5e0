"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class DsalikeError(Exception):
    """Base class for all errors raised by dsalike."""


class ParameterError(DsalikeError, ValueError):
    """A parameter violates a documented precondition."""


class RangeError(ParameterError):
    """A value lies outside its permitted interval."""


class NotInvertibleError(DsalikeError, ValueError):
    def __init__(self, a: int, modulus: int, gcd: int) -> None:
        super().__init__(f"{a} is not invertible modulo {modulus} (gcd={gcd})")
        self.a = a
        self.modulus = modulus
        self.gcd = gcd


class RefusedScaleError(DsalikeError):
    """Brute force was asked to scan a group that is too large."""


class GenerationExhaustedError(DsalikeError):
    """Parameter search gave up after its attempt budget."""


class DegenerateNonceError(DsalikeError):
    """Every nonce draw produced a degenerate signature component."""


class NonceSourceExhausted(DsalikeError):
    """A fixed nonce sequence ran out of values."""


class AttackPreconditionError(DsalikeError):
    """The transcripts handed to an attack do not have the required shape."""


class NotSameNonceError(AttackPreconditionError):
    pass


class DegeneratePairError(AttackPreconditionError):
    pass


class UnusableForgeryError(DsalikeError):
    """The chosen forgery inputs produce a degenerate signature; retry with others."""


class ParseError(DsalikeError, ValueError):
    def __init__(self, message: str, lineno: int | None = None) -> None:
        text = f"line {lineno}: {message}" if lineno is not None else message
        super().__init__(text)
        self.lineno = lineno
