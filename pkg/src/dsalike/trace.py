from __future__ import annotations

from dataclasses import dataclass

RANGE = "range"
NOT_INVERTIBLE = "not-invertible"
MISMATCH = "mismatch"


@dataclass(frozen=True)
class VerificationTrace:
    """Intermediate values of one verification and its decision.

    ``exponents`` holds u1, u2[, u3] (or the generalized e_0..e_n).
    ``reason`` is None on accept, otherwise one of range, not-invertible,
    mismatch.
    """

    exponents: tuple[int, ...] = ()
    v: int | None = None
    reason: str | None = None

    @property
    def accepted(self) -> bool:
        return self.reason is None

    @property
    def u1(self) -> int:
        return self.exponents[0]

    @property
    def u2(self) -> int:
        return self.exponents[1]

    @property
    def u3(self) -> int:
        return self.exponents[2]

    def __bool__(self) -> bool:
        return self.accepted


def reject(reason: str, exponents: tuple[int, ...] = (), v: int | None = None) -> VerificationTrace:
    return VerificationTrace(exponents, v, reason)
