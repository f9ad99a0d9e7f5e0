"""Domain parameters (p, q, g, alpha) and key pairs (x, y)."""

from __future__ import annotations

import functools
import secrets
from dataclasses import dataclass

from .errors import GenerationExhaustedError, ParameterError, RangeError
from .mathcore import OpCounter, RandomSource, is_probable_prime, mod_exp

ALLOWED_T_BITS = (160, 256, 384, 512)
MIN_L_BITS = 512
MAX_L_BITS = 3072


@dataclass(frozen=True)
class DomainParams:
    """Public group parameters.

    ``alpha`` generates the order-``q`` subgroup of ``(Z/pZ)*``. ``g`` is the
    seed it was derived from, kept when known.
    """

    p: int
    q: int
    alpha: int
    g: int | None = None


@dataclass(frozen=True)
class PrivateKey:
    x: int

    def __repr__(self) -> str:
        return "PrivateKey(x=<hidden>)"


@dataclass(frozen=True)
class PublicKey:
    y: int


@dataclass(frozen=True)
class SizePolicy:
    t_bits: int = 160
    l_bits: int = 1024

    def __post_init__(self) -> None:
        if self.t_bits not in ALLOWED_T_BITS:
            raise ParameterError(f"t_bits must be one of {ALLOWED_T_BITS}, got {self.t_bits}")
        if not MIN_L_BITS <= self.l_bits <= MAX_L_BITS or self.l_bits % 64:
            raise ParameterError(
                f"l_bits must be a multiple of 64 in [{MIN_L_BITS}, {MAX_L_BITS}], got {self.l_bits}"
            )


def derive_alpha(p: int, q: int, g: int, counter: OpCounter | None = None) -> int:
    return mod_exp(g, (p - 1) // q, p, counter)


def validate_domain_params(params: DomainParams) -> list[str]:
    """List every violated invariant of ``params``; an empty list means valid."""
    return list(_violations(params))


@functools.lru_cache(maxsize=64)
def _violations(params: DomainParams) -> tuple[str, ...]:
    p, q, alpha, g = params.p, params.q, params.alpha, params.g
    out = []
    if not is_probable_prime(p):
        out.append("p-not-prime")
    if not is_probable_prime(q):
        out.append("q-not-prime")
    divides = q > 1 and (p - 1) % q == 0
    if not divides:
        out.append("q-does-not-divide-p-minus-1")
    if not 0 < alpha < p:
        out.append("alpha-out-of-range")
    elif alpha == 1:
        out.append("alpha-is-identity")
    elif divides and pow(alpha, q, p) != 1:
        # order check only means something once q | p - 1
        out.append("alpha-order-not-q")
    if g is not None:
        if not 1 < g < p:
            out.append("g-out-of-range")
        elif divides and pow(g, (p - 1) // q, p) != alpha:
            out.append("alpha-not-derived-from-g")
    return tuple(out)


def require_valid(params: DomainParams) -> None:
    problems = validate_domain_params(params)
    if problems:
        raise ParameterError("invalid domain parameters: " + ", ".join(problems))


def domain_params_from(p: int, q: int, g: int | None = None, alpha: int | None = None) -> DomainParams:
    """Accept externally supplied primes, skipping generation.

    ``alpha`` is derived from ``g`` when not given. The result is validated
    and ParameterError lists every problem found.
    """
    if alpha is None:
        if g is None:
            raise ParameterError("need g or alpha")
        if p <= 2 or q <= 1 or (p - 1) % q:
            raise ParameterError("q must divide p - 1 to derive alpha")
        alpha = derive_alpha(p, q, g)
    params = DomainParams(p=p, q=q, alpha=alpha, g=g)
    require_valid(params)
    return params


def _random_prime(bits: int, rng: RandomSource, max_attempts: int) -> int:
    for _ in range(max_attempts):
        cand = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_probable_prime(cand, rng=rng):
            return cand
    raise GenerationExhaustedError(f"no {bits}-bit prime after {max_attempts} candidates")


def search_domain_params(
    q_bits: int,
    p_bits: int,
    rng: RandomSource | None = None,
    max_attempts: int = 200_000,
) -> DomainParams:
    """Generate parameters of arbitrary size with no policy checks.

    Picks a ``q_bits`` prime q, then walks ``p = q*m + 1`` over even m
    from a random start until p is a ``p_bits`` prime, then draws g until
    ``g**((p-1)/q) != 1``. :func:`generate_domain_params` is the policy
    checked entry point; this one exists for reduced-size tests.
    """
    if q_bits < 2 or p_bits <= q_bits + 1:
        raise ParameterError("need 2 <= q_bits < p_bits - 1")
    rng = rng or secrets.SystemRandom()
    q = _random_prime(q_bits, rng, max_attempts)

    lo, hi = 1 << (p_bits - 1), 1 << p_bits
    m_lo = -(-(lo - 1) // q)  # ceil((lo - 1) / q): smallest m with q*m + 1 >= lo
    m_hi = (hi - 2) // q
    if m_lo > m_hi:
        raise GenerationExhaustedError("no p of the requested size exists for this q")

    p = None
    m = None
    for _ in range(max_attempts):
        if m is None or m > m_hi:
            m = rng.randrange(m_lo, m_hi + 1)
            m += m % 2
            if m > m_hi:
                m = None
                continue
        cand = q * m + 1
        if lo < cand < hi and is_probable_prime(cand, rng=rng):
            p = cand
            break
        m += 2
    if p is None:
        raise GenerationExhaustedError(f"no {p_bits}-bit p = q*m + 1 after {max_attempts} candidates")

    for _ in range(max_attempts):
        g = rng.randrange(2, p - 1)
        alpha = derive_alpha(p, q, g)
        if alpha != 1:
            return DomainParams(p=p, q=q, alpha=alpha, g=g)
    raise GenerationExhaustedError("no g with alpha != 1")


def generate_domain_params(
    policy: SizePolicy | None = None,
    rng: RandomSource | None = None,
    max_attempts: int = 200_000,
) -> DomainParams:
    policy = policy or SizePolicy()
    params = search_domain_params(policy.t_bits, policy.l_bits, rng, max_attempts)
    require_valid(params)
    return params


def check_private_key(params: DomainParams, key: PrivateKey) -> None:
    if not 1 <= key.x <= params.q - 1:
        raise RangeError("private key x must satisfy 1 <= x <= q - 1")


def public_key_for(params: DomainParams, key: PrivateKey, counter: OpCounter | None = None) -> PublicKey:
    check_private_key(params, key)
    return PublicKey(mod_exp(params.alpha, key.x, params.p, counter))


def keygen(
    params: DomainParams,
    rng: RandomSource | None = None,
    *,
    x: int | None = None,
    counter: OpCounter | None = None,
) -> tuple[PrivateKey, PublicKey]:
    """Draw x uniformly from [1, q-1] (or use the forced ``x``) and compute y = alpha**x mod p."""
    require_valid(params)
    if x is None:
        rng = rng or secrets.SystemRandom()
        x = rng.randrange(1, params.q)
    priv = PrivateKey(x)
    return priv, public_key_for(params, priv, counter)
