"""Three-component DSA-like signatures and their (n+1)-component generalization.

A signature (r, s, t) on digest h under public key y satisfies::

    (alpha**(h/t) * y**(r/t) * r**(s/t) mod p) mod q == s

with 0 < r < p and 0 < s, t < q, all exponent divisions taken mod q. The
signer picks nonces k, l, sets r = alpha**k mod p, s = (alpha**l mod p) mod q
and solves t = (h + x*r + k*s)/l mod q.

The generalized form with n >= 2 uses nonces k_1..k_n::

    r_i     = alpha**k_i mod p                     (i < n)
    r_n     = (alpha**k_n mod p) mod q
    r_{n+1} = (h + <(x, k_1..k_{n-1}), (r_1..r_n)>) / k_n mod q

and at n = 2 coincides with (r, s, t). Wherever a component that can be as
large as p enters arithmetic mod q it is reduced mod q first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateNonceError, NotInvertibleError, ParameterError
from .hashing import DigestValue
from .mathcore import OpCounter, mod_exp, mod_inv, mod_mul
from .nonces import NonceSource
from .params import DomainParams, PrivateKey, PublicKey, check_private_key, require_valid
from .trace import MISMATCH, NOT_INVERTIBLE, RANGE, VerificationTrace, reject

MAX_RETRIES = 100


@dataclass(frozen=True)
class TdsaSignature:
    r: int
    s: int
    t: int


@dataclass(frozen=True)
class GdsaSignature:
    r_values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "r_values", tuple(self.r_values))

    @property
    def n(self) -> int:
        return len(self.r_values) - 1


def _tdsa_sign(params, key, digest, nonces, counter, max_retries):
    require_valid(params)
    check_private_key(params, key)
    p, q, alpha = params.p, params.q, params.alpha
    for _ in range(max_retries):
        k = nonces.draw(q)
        l = nonces.draw(q)
        r = mod_exp(alpha, k, p, counter)
        s = mod_exp(alpha, l, p, counter) % q
        if s == 0 or r % q == 0:
            continue
        try:
            l_inv = mod_inv(l, q)
        except NotInvertibleError:
            continue
        total = digest.value + mod_mul(key.x, r % q, q, counter) + mod_mul(k, s, q, counter)
        t = mod_mul(total, l_inv, q, counter)
        if t == 0:
            continue
        return TdsaSignature(r, s, t), (k, l)
    raise DegenerateNonceError(f"no usable nonce pair in {max_retries} draws")


def tdsa_sign(
    params: DomainParams,
    key: PrivateKey,
    digest: DigestValue,
    nonces: NonceSource,
    *,
    counter: OpCounter | None = None,
    max_retries: int = MAX_RETRIES,
) -> TdsaSignature:
    """Sign ``digest``; nonce pairs giving s = 0, t = 0 or r = 0 mod q are redrawn."""
    sig, _ = _tdsa_sign(params, key, digest, nonces, counter, max_retries)
    return sig


def tdsa_verify(
    params: DomainParams,
    pub: PublicKey,
    digest: DigestValue,
    sig: TdsaSignature,
    *,
    counter: OpCounter | None = None,
) -> VerificationTrace:
    p, q = params.p, params.q
    r, s, t = sig.r, sig.s, sig.t
    if not (0 < r < p and 0 < s < q and 0 < t < q):
        return reject(RANGE)
    try:
        t_inv = mod_inv(t, q)
    except NotInvertibleError:
        return reject(NOT_INVERTIBLE)
    u1 = mod_mul(digest.value, t_inv, q, counter)
    u2 = mod_mul(r % q, t_inv, q, counter)
    u3 = mod_mul(s, t_inv, q, counter)
    acc = mod_mul(mod_exp(params.alpha, u1, p, counter), mod_exp(pub.y, u2, p, counter), p, counter)
    v = mod_mul(acc, mod_exp(r, u3, p, counter), p, counter) % q
    return VerificationTrace((u1, u2, u3), v, None if v == s else MISMATCH)


def _gdsa_sign(params, key, digest, n, nonces, counter, max_retries):
    if n < 2:
        raise ParameterError(f"n must be >= 2, got {n}")
    require_valid(params)
    check_private_key(params, key)
    p, q, alpha = params.p, params.q, params.alpha
    for _ in range(max_retries):
        ks = [nonces.draw(q) for _ in range(n)]
        rs = [mod_exp(alpha, k, p, counter) for k in ks]
        rs[-1] %= q
        if any(r % q == 0 for r in rs):
            continue
        try:
            kn_inv = mod_inv(ks[-1], q)
        except NotInvertibleError:
            continue
        # inner product of (x, k_1..k_{n-1}) with (r_1..r_n)
        u = [key.x] + ks[:-1]
        dot = sum(mod_mul(ui, ri % q, q, counter) for ui, ri in zip(u, rs))
        last = mod_mul(digest.value + dot, kn_inv, q, counter)
        if last == 0:
            continue
        return GdsaSignature(tuple(rs) + (last,)), tuple(ks)
    raise DegenerateNonceError(f"no usable nonce tuple in {max_retries} draws")


def gdsa_sign(
    params: DomainParams,
    key: PrivateKey,
    digest: DigestValue,
    n: int,
    nonces: NonceSource,
    *,
    counter: OpCounter | None = None,
    max_retries: int = MAX_RETRIES,
) -> GdsaSignature:
    """Produce the (n+1)-component signature; nonces are drawn in order k_1..k_n."""
    sig, _ = _gdsa_sign(params, key, digest, n, nonces, counter, max_retries)
    return sig


def gdsa_verify(
    params: DomainParams,
    pub: PublicKey,
    digest: DigestValue,
    sig: GdsaSignature,
    *,
    counter: OpCounter | None = None,
) -> VerificationTrace:
    p, q = params.p, params.q
    rs = sig.r_values
    n = len(rs) - 1
    if n < 2:
        return reject(RANGE)
    if not all(0 < r < p for r in rs[: n - 1]) or not all(0 < r < q for r in rs[n - 1 :]):
        return reject(RANGE)
    try:
        last_inv = mod_inv(rs[n], q)
    except NotInvertibleError:
        return reject(NOT_INVERTIBLE)
    exps = (mod_mul(digest.value, last_inv, q, counter),) + tuple(
        mod_mul(r % q, last_inv, q, counter) for r in rs[:n]
    )
    bases = (params.alpha, pub.y) + rs[: n - 1]
    acc = 1
    for b, e in zip(bases, exps):
        acc = mod_mul(acc, mod_exp(b, e, p, counter), p, counter)
    v = acc % q
    return VerificationTrace(exps, v, None if v == rs[n - 1] else MISMATCH)
