"""Modular arithmetic with operation counting, primality testing and a toy DLP oracle.

Every exponentiation in the signing and verification paths goes through
:func:`mod_exp` and every product outside an exponentiation goes through
:func:`mod_mul`, so passing an :class:`OpCounter` yields an exact tally of
the work a protocol run performs.
"""

from __future__ import annotations

import math
import secrets
from dataclasses import dataclass
from typing import Protocol

from .errors import NotInvertibleError, ParameterError, RefusedScaleError

DLP_GUARD_BITS = 24

# The primes up to 41 are a deterministic Miller-Rabin witness set for n < 3.3e24.
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_DETERMINISTIC_LIMIT = 3317044064679887385961981

_SMALL_PRIMES = [n for n in range(3, 1000, 2) if all(n % d for d in range(3, math.isqrt(n) + 1, 2))]


class RandomSource(Protocol):
    def randrange(self, start: int, stop: int = ..., step: int = ...) -> int: ...

    def getrandbits(self, k: int) -> int: ...


@dataclass
class OpCounter:
    """Tally of modular exponentiations and stand-alone modular multiplications."""

    exp_count: int = 0
    mul_count: int = 0

    def reset(self) -> None:
        self.exp_count = 0
        self.mul_count = 0


def _check_modulus(modulus: int) -> None:
    if modulus <= 1:
        raise ParameterError(f"modulus must be > 1, got {modulus}")


def mod_exp(base: int, exponent: int, modulus: int, counter: OpCounter | None = None) -> int:
    _check_modulus(modulus)
    if exponent < 0:
        raise ParameterError("exponent must be non-negative")
    if counter is not None:
        counter.exp_count += 1
    return pow(base, exponent, modulus)


def mod_mul(a: int, b: int, modulus: int, counter: OpCounter | None = None) -> int:
    _check_modulus(modulus)
    if counter is not None:
        counter.mul_count += 1
    return a * b % modulus


def mod_inv(a: int, modulus: int) -> int:
    """Return ``b`` in ``[1, modulus)`` with ``a*b = 1 (mod modulus)``.

    Raises NotInvertibleError (carrying the gcd) when no inverse exists.
    """
    _check_modulus(modulus)
    g = math.gcd(a, modulus)
    if g != 1:
        raise NotInvertibleError(a, modulus, g)
    return pow(a, -1, modulus)


def is_probable_prime(n: int, rounds: int = 64, rng: RandomSource | None = None) -> bool:
    """Miller-Rabin test.

    Below ~3.3e24 a fixed witness set makes the answer exact. Above it
    ``rounds`` random bases are used, bounding the error on composites
    by 4**-rounds.
    """
    if rounds < 1:
        raise ParameterError("rounds must be >= 1")
    if n < 2:
        return False
    if n in (2, 3):
        return True
    if n % 2 == 0:
        return False
    for sp in _SMALL_PRIMES:
        if n == sp:
            return True
        if n % sp == 0:
            return False

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    if n < _DETERMINISTIC_LIMIT:
        bases = _DETERMINISTIC_BASES
    else:
        rng = rng or secrets.SystemRandom()
        bases = tuple(rng.randrange(2, n - 1) for _ in range(rounds))

    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def dlp_bruteforce(alpha: int, beta: int, p: int, q: int) -> int | None:
    """Exhaustively find ``e`` in ``[0, q)`` with ``alpha**e = beta (mod p)``.

    Only meant as an independent oracle for toy groups; refuses
    ``q >= 2**24``. Returns None when ``beta`` is not in the subgroup.
    """
    if q >= 1 << DLP_GUARD_BITS:
        raise RefusedScaleError(f"q has {q.bit_length()} bits; brute force is limited to {DLP_GUARD_BITS}")
    _check_modulus(p)
    target = beta % p
    acc = 1
    for e in range(q):
        if acc == target:
            return e
        acc = acc * alpha % p
    return None
