"""Operation counts and timings for a full keygen + sign + verify pipeline."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .dsa import dsa_sign, dsa_verify
from .errors import ParameterError
from .hashing import DigestValue
from .mathcore import OpCounter
from .nonces import NonceSource, RandomNonces
from .params import DomainParams, PrivateKey, derive_alpha, keygen
from .tdsa import tdsa_sign, tdsa_verify


@dataclass
class BenchResult:
    scheme: str
    iterations: int
    exp_count: int
    mul_count: int
    seconds: dict[str, float] = field(default_factory=dict)
    accepted: int = 0


def bench_count(
    params: DomainParams,
    key: PrivateKey,
    digest: DigestValue,
    *,
    scheme: str = "tdsa",
    iterations: int = 1,
    nonces: NonceSource | None = None,
) -> BenchResult:
    """Run the pipeline ``iterations`` times under a single counter.

    Each iteration derives alpha from g, recomputes y from x, signs once
    and verifies once. The three-component scheme costs 2 + 2 + 3
    exponentiations per iteration and DSA costs 2 + 2 + 2.
    """
    if params.g is None:
        raise ParameterError("benchmark needs g to time alpha derivation")
    if scheme not in ("tdsa", "dsa"):
        raise ParameterError(f"unsupported scheme {scheme!r}")
    if iterations < 1:
        raise ParameterError("iterations must be >= 1")
    nonces = nonces or RandomNonces()
    sign, verify = (tdsa_sign, tdsa_verify) if scheme == "tdsa" else (dsa_sign, dsa_verify)

    counter = OpCounter()
    seconds = {"keygen": 0.0, "sign": 0.0, "verify": 0.0}
    accepted = 0
    for _ in range(iterations):
        t0 = time.perf_counter()
        alpha = derive_alpha(params.p, params.q, params.g, counter)
        derived = DomainParams(p=params.p, q=params.q, alpha=alpha, g=params.g)
        _, pub = keygen(derived, x=key.x, counter=counter)
        t1 = time.perf_counter()
        sig = sign(derived, key, digest, nonces, counter=counter)
        t2 = time.perf_counter()
        accepted += verify(derived, pub, digest, sig, counter=counter).accepted
        t3 = time.perf_counter()
        seconds["keygen"] += t1 - t0
        seconds["sign"] += t2 - t1
        seconds["verify"] += t3 - t2
    return BenchResult(scheme, iterations, counter.exp_count, counter.mul_count, seconds, accepted)
