"""Classic DSA over the shared domain parameters; the baseline scheme."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateNonceError, NotInvertibleError
from .hashing import DigestValue
from .mathcore import OpCounter, mod_exp, mod_inv, mod_mul
from .nonces import NonceSource
from .params import DomainParams, PrivateKey, PublicKey, check_private_key, require_valid
from .trace import MISMATCH, NOT_INVERTIBLE, RANGE, VerificationTrace, reject

MAX_RETRIES = 100


@dataclass(frozen=True)
class DsaSignature:
    r: int
    s: int


def _sign(params, key, digest, nonces, counter, max_retries):
    require_valid(params)
    check_private_key(params, key)
    p, q, alpha = params.p, params.q, params.alpha
    for _ in range(max_retries):
        k = nonces.draw(q)
        r = mod_exp(alpha, k, p, counter) % q
        if r == 0:
            continue
        s = mod_mul(digest.value + mod_mul(key.x, r, q, counter), mod_inv(k, q), q, counter)
        if s == 0:
            continue
        return DsaSignature(r, s), k
    raise DegenerateNonceError(f"no usable nonce in {max_retries} draws")


def dsa_sign(
    params: DomainParams,
    key: PrivateKey,
    digest: DigestValue,
    nonces: NonceSource,
    *,
    counter: OpCounter | None = None,
    max_retries: int = MAX_RETRIES,
) -> DsaSignature:
    """Sign with r = (alpha**k mod p) mod q and s = (h + x*r)/k mod q.

    Nonces giving r = 0 or s = 0 are discarded and redrawn.
    """
    sig, _ = _sign(params, key, digest, nonces, counter, max_retries)
    return sig


def dsa_verify(
    params: DomainParams,
    pub: PublicKey,
    digest: DigestValue,
    sig: DsaSignature,
    *,
    counter: OpCounter | None = None,
) -> VerificationTrace:
    p, q = params.p, params.q
    if not (0 < sig.r < q and 0 < sig.s < q):
        return reject(RANGE)
    try:
        w = mod_inv(sig.s, q)
    except NotInvertibleError:
        return reject(NOT_INVERTIBLE)
    u1 = mod_mul(digest.value, w, q, counter)
    u2 = mod_mul(sig.r, w, q, counter)
    v = mod_mul(mod_exp(params.alpha, u1, p, counter), mod_exp(pub.y, u2, p, counter), p, counter) % q
    return VerificationTrace((u1, u2), v, None if v == sig.r else MISMATCH)
