"""Mapping messages to the exponent-range digest value signed by every scheme."""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass

from .errors import RangeError
from .params import DomainParams


class DigestSource(enum.Enum):
    HASHED = "hashed"
    PREHASHED = "prehashed"


@dataclass(frozen=True)
class DigestValue:
    value: int
    source: DigestSource = DigestSource.HASHED


def digest_message(message: bytes, params: DomainParams) -> DigestValue:
    """SHA-256 of ``message`` read big-endian, reduced mod q; 0 is remapped to 1.

    A zero digest would cancel the alpha term of the verification
    equation, so it is never produced.
    """
    value = int.from_bytes(hashlib.sha256(message).digest(), "big") % params.q
    return DigestValue(value or 1, DigestSource.HASHED)


def prehashed(value: int, params: DomainParams) -> DigestValue:
    """Wrap an externally computed digest value, which must lie in [1, q-1]."""
    if not 1 <= value <= params.q - 1:
        raise RangeError(f"digest value must be in [1, q-1], got {value}")
    return DigestValue(value, DigestSource.PREHASHED)
