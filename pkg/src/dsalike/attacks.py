"""Executable attacks against the two schemes.

What is implemented:

* DSA nonce reuse. Two signatures sharing k give k = (h1 - h2)/(s1 - s2)
  and then x = (s1*k - h1)/r, all mod q.
* Nonce-pair reuse on the three-component scheme. Two signatures sharing
  (k, l) share r and s, and l*t_i = h_i + x*r + k*s gives
  l = (h1 - h2)/(t1 - t2). The one equation left still has two unknowns
  (x, k), so every candidate x has a matching k.
  :func:`tdsa_key_candidates_after_pair_reuse` enumerates that family at
  toy scale.
* Existential forgery when no hash is applied. With r = alpha**k * y**k'
  and s = (alpha**l * y**l' mod p) mod q, taking t = (r + k'*s)/l' and
  digest m = t*l - k*s makes (r, s, t) verify for m.
* From n signatures an eavesdropper can write n linear relations
  l_i*t_i = h_i + x*r_i + k_i*s_i in 2n + 1 unknowns.
  :func:`solve_signature_system` shows that every guess of x extends to a
  full solution, so the relations alone do not identify x.

The remaining attack lines are left out. Recovering x from one signature,
or forging by fixing two components and solving for the third, is either
a discrete logarithm or a congruence of the form a*b**s = s or
a**r * r**b = c, for which no general solver is known. Knowing how to
forge DSA signatures does not give a way to solve the three-component
equation either. None of these has a constructive procedure to encode.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dsa import DsaSignature, dsa_verify
from .errors import (
    AttackPreconditionError,
    DegeneratePairError,
    DsalikeError,
    NotSameNonceError,
    ParameterError,
    RangeError,
    UnusableForgeryError,
)
from .hashing import DigestSource, DigestValue
from .mathcore import mod_exp, mod_inv
from .params import DomainParams, PublicKey
from .tdsa import TdsaSignature, tdsa_verify


@dataclass(frozen=True)
class TranscriptEntry:
    digest: DigestValue
    signature: DsaSignature | TdsaSignature

    @property
    def scheme(self) -> str:
        return "dsa" if isinstance(self.signature, DsaSignature) else "tdsa"


@dataclass(frozen=True)
class ForgeryInput:
    k: int
    k_prime: int
    l: int
    l_prime: int


class AttackFailedError(DsalikeError):
    """The recovered value did not check out against the public data."""


def _require_valid_entry(params, pub, entry: TranscriptEntry, scheme: str) -> None:
    if entry.scheme != scheme:
        raise AttackPreconditionError(f"expected a {scheme} signature, got {entry.scheme}")
    verify = dsa_verify if scheme == "dsa" else tdsa_verify
    if not verify(params, pub, entry.digest, entry.signature).accepted:
        raise AttackPreconditionError("transcript entry does not verify under the public key")


def dsa_recover_key_from_nonce_reuse(
    params: DomainParams, pub: PublicKey, entry1: TranscriptEntry, entry2: TranscriptEntry
) -> tuple[int, int]:
    """Return (k, x) from two DSA signatures made with the same nonce."""
    _require_valid_entry(params, pub, entry1, "dsa")
    _require_valid_entry(params, pub, entry2, "dsa")
    q = params.q
    sig1, sig2 = entry1.signature, entry2.signature
    if sig1.r != sig2.r:
        raise NotSameNonceError("r values differ; the nonces were not reused")
    if (sig1.s - sig2.s) % q == 0:
        raise DegeneratePairError("s1 == s2; the nonce is indeterminate")
    h1, h2 = entry1.digest.value, entry2.digest.value
    k = (h1 - h2) * mod_inv((sig1.s - sig2.s) % q, q) % q
    x = (sig1.s * k - h1) * mod_inv(sig1.r, q) % q
    if mod_exp(params.alpha, x, params.p) != pub.y:
        raise AttackFailedError("recovered x does not reproduce y")
    return k, x


def tdsa_recover_l_from_pair_reuse(
    params: DomainParams, pub: PublicKey, entry1: TranscriptEntry, entry2: TranscriptEntry
) -> int:
    """Return the nonce l shared by two three-component signatures."""
    _require_valid_entry(params, pub, entry1, "tdsa")
    _require_valid_entry(params, pub, entry2, "tdsa")
    q = params.q
    sig1, sig2 = entry1.signature, entry2.signature
    if sig1.r != sig2.r or sig1.s != sig2.s:
        raise NotSameNonceError("r or s differ; the nonce pair was not reused")
    if sig1.t == sig2.t:
        raise DegeneratePairError("t1 == t2; l is indeterminate")
    l = (entry1.digest.value - entry2.digest.value) * mod_inv((sig1.t - sig2.t) % q, q) % q
    if mod_exp(params.alpha, l, params.p) % q != sig1.s:
        raise AttackFailedError("recovered l does not reproduce s")
    return l


def tdsa_key_candidates_after_pair_reuse(
    params: DomainParams, entry: TranscriptEntry, l: int
) -> list[tuple[int, int]]:
    """All (x, k) in [1, q-1]^2 consistent with l*t = h + x*r + k*s for one entry.

    Exhaustive over x, so toy groups only. The size of the result shows
    how far the leaked l falls short of pinning down the key.
    """
    if params.q >= 1 << 24:
        raise ParameterError("candidate enumeration is for toy groups only")
    q = params.q
    sig = entry.signature
    s_inv = mod_inv(sig.s, q)
    rq = sig.r % q
    out = []
    for x in range(1, q):
        k = (l * sig.t - entry.digest.value - x * rq) * s_inv % q
        if k:
            out.append((x, k))
    return out


def tdsa_existential_forgery(
    params: DomainParams, pub: PublicKey, inputs: ForgeryInput
) -> tuple[DigestValue, TdsaSignature]:
    """Forge a (digest value, signature) pair from public data alone.

    Only works when the verifier accepts raw digest values, i.e. the hash
    is bypassed. Raises UnusableForgeryError when the chosen inputs give a
    zero digest or a degenerate component.
    """
    p, q, alpha, y = params.p, params.q, params.alpha, pub.y
    for name in ("k", "k_prime", "l", "l_prime"):
        v = getattr(inputs, name)
        if not 1 <= v <= q - 1:
            raise RangeError(f"{name} must be in [1, q-1], got {v}")
    try:
        lp_inv = mod_inv(inputs.l_prime, q)
    except DsalikeError as exc:
        raise ParameterError("l_prime is not invertible mod q") from exc

    r = mod_exp(alpha, inputs.k, p) * mod_exp(y, inputs.k_prime, p) % p
    s = mod_exp(alpha, inputs.l, p) * mod_exp(y, inputs.l_prime, p) % p % q
    t = (r % q + inputs.k_prime * s) * lp_inv % q
    m = (t * inputs.l - inputs.k * s) % q
    if 0 in (s, t, m, r % q):
        raise UnusableForgeryError("degenerate forgery; pick other inputs")
    return DigestValue(m, DigestSource.PREHASHED), TdsaSignature(r, s, t)


def signature_system_shape(n: int) -> tuple[int, int]:
    """(equations, unknowns) of the system built from n signatures: (n, 2n + 1)."""
    if n < 1:
        raise ParameterError("n must be >= 1")
    return n, 2 * n + 1


def solve_signature_system(
    params: DomainParams, entries: list[TranscriptEntry], x_guess: int, l_values: list[int]
) -> list[tuple[int, int]]:
    """Complete any guess of x to a solution (k_i, l_i) of every relation.

    With ``l_i`` chosen freely, ``k_i = (l_i*t_i - h_i - x*r_i)/s_i``. The
    returned pairs satisfy every relation, yet for a wrong ``x_guess`` they
    are not the signer's nonces.
    """
    if len(l_values) != len(entries):
        raise ParameterError("need one l per entry")
    q = params.q
    out = []
    for entry, l in zip(entries, l_values):
        sig = entry.signature
        k = (l * sig.t - entry.digest.value - x_guess * (sig.r % q)) * mod_inv(sig.s, q) % q
        out.append((k, l % q))
    return out
