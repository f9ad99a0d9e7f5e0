"""Sources of per-signature secret exponents.

A nonce source is anything with a ``draw(q)`` method returning an integer
in ``[1, q-1]``. A source belongs to one signing call at a time.
"""

from __future__ import annotations

import hashlib
import hmac
import secrets
from collections.abc import Iterable
from typing import Protocol

from .errors import NonceSourceExhausted, RangeError


class NonceSource(Protocol):
    def draw(self, q: int) -> int: ...


class RandomNonces:
    """Nonces from the operating system CSPRNG (or a supplied ``random.Random``)."""

    def __init__(self, rng=None) -> None:
        self._rng = rng or secrets.SystemRandom()

    def draw(self, q: int) -> int:
        return self._rng.randrange(1, q)


class FixedNonces:
    """Replays a given sequence; for tests and the worked examples."""

    def __init__(self, values: Iterable[int]) -> None:
        self._values = list(values)
        self._pos = 0

    @property
    def drawn(self) -> list[int]:
        return self._values[: self._pos]

    def draw(self, q: int) -> int:
        if self._pos >= len(self._values):
            raise NonceSourceExhausted(f"fixed sequence of {len(self._values)} nonces used up")
        k = self._values[self._pos]
        self._pos += 1
        if not 1 <= k <= q - 1:
            raise RangeError(f"nonce {k} outside [1, q-1]")
        return k


class DeterministicNonces:
    """Counter-mode HMAC-SHA256 stream keyed by a seed.

    The same seed always yields the same sequence, so two signatures made
    with one seed share nonces. That is what makes CLI runs reproducible
    and what the reuse attacks exploit; never sign real data this way.
    """

    def __init__(self, seed: bytes) -> None:
        self._seed = bytes(seed)
        self._counter = 0

    def _block(self) -> bytes:
        out = hmac.new(self._seed, self._counter.to_bytes(8, "big"), hashlib.sha256).digest()
        self._counter += 1
        return out

    def draw(self, q: int) -> int:
        bits = (q - 2).bit_length() or 1
        nbytes = (bits + 7) // 8
        while True:
            buf = b""
            while len(buf) < nbytes:
                buf += self._block()
            cand = int.from_bytes(buf[:nbytes], "big") >> (8 * nbytes - bits)
            # rejection keeps the draw uniform on [1, q-1]
            if cand < q - 1:
                return cand + 1
