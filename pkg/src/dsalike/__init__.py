"""DSA and a three-component DSA-like signature scheme, with attacks and op counting."""

from .attacks import (
    ForgeryInput,
    TranscriptEntry,
    dsa_recover_key_from_nonce_reuse,
    tdsa_existential_forgery,
    tdsa_recover_l_from_pair_reuse,
)
from .bench import BenchResult, bench_count
from .dsa import DsaSignature, dsa_sign, dsa_verify
from .errors import *  # noqa: F401,F403
from .hashing import DigestSource, DigestValue, digest_message, prehashed
from .mathcore import OpCounter, dlp_bruteforce, is_probable_prime, mod_exp, mod_inv, mod_mul
from .nonces import DeterministicNonces, FixedNonces, NonceSource, RandomNonces
from .params import (
    DomainParams,
    PrivateKey,
    PublicKey,
    SizePolicy,
    domain_params_from,
    generate_domain_params,
    keygen,
    validate_domain_params,
)
from .tdsa import GdsaSignature, TdsaSignature, gdsa_sign, gdsa_verify, tdsa_sign, tdsa_verify
from .trace import VerificationTrace

__version__ = "0.1.0"
