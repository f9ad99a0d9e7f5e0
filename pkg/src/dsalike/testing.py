"""Signers that also hand back their nonces.

For tests and attack demonstrations only. Revealing a nonce reveals the
private key (or, for the three-component scheme, one of its two nonces),
so production code should never import this module.
"""

from __future__ import annotations

from . import dsa, tdsa
from .hashing import DigestValue
from .mathcore import OpCounter
from .nonces import NonceSource
from .params import DomainParams, PrivateKey


def dsa_sign_with_nonce(
    params: DomainParams, key: PrivateKey, digest: DigestValue, nonces: NonceSource,
    counter: OpCounter | None = None,
) -> tuple[dsa.DsaSignature, int]:
    return dsa._sign(params, key, digest, nonces, counter, dsa.MAX_RETRIES)


def tdsa_sign_with_nonces(
    params: DomainParams, key: PrivateKey, digest: DigestValue, nonces: NonceSource,
    counter: OpCounter | None = None,
) -> tuple[tdsa.TdsaSignature, tuple[int, int]]:
    return tdsa._tdsa_sign(params, key, digest, nonces, counter, tdsa.MAX_RETRIES)


def gdsa_sign_with_nonces(
    params: DomainParams, key: PrivateKey, digest: DigestValue, n: int, nonces: NonceSource,
    counter: OpCounter | None = None,
) -> tuple[tdsa.GdsaSignature, tuple[int, ...]]:
    return tdsa._gdsa_sign(params, key, digest, n, nonces, counter, tdsa.MAX_RETRIES)
