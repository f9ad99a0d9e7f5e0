"""Command line interface.

Exit codes: 0 success (or signature accepted), 1 signature rejected or
attack not applicable, 2 usage or parse error. Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import __version__, attacks, codec
from .bench import bench_count
from .dsa import DsaSignature, dsa_sign, dsa_verify
from .errors import AttackPreconditionError, DsalikeError, ParseError, UnusableForgeryError
from .hashing import DigestValue, digest_message, prehashed
from .nonces import DeterministicNonces, NonceSource, RandomNonces
from .params import SizePolicy, generate_domain_params, keygen, public_key_for, validate_domain_params
from .params import PrivateKey, PublicKey
from .tdsa import GdsaSignature, TdsaSignature, gdsa_sign, gdsa_verify, tdsa_sign, tdsa_verify


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 on its own; keep that but route through main
        raise UsageError(message)


def _seed(text: str | None) -> bytes | None:
    if text is None:
        return None
    try:
        return bytes.fromhex(text)
    except ValueError:
        raise UsageError(f"--nonce-seed must be hex, got {text!r}") from None


def _nonces(args) -> NonceSource:
    seed = _seed(args.nonce_seed)
    return DeterministicNonces(seed) if seed is not None else RandomNonces()


def _rng(args):
    seed = _seed(args.nonce_seed)
    return random.Random(int.from_bytes(seed, "big")) if seed is not None else None


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, data: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.write(data.decode("ascii"))
    else:
        Path(path).write_bytes(data)


def _load_key(path: str, want: type) -> codec.KeyFile:
    keyfile = codec.decode_key(_read(path))
    if not isinstance(keyfile.key, want):
        kind = "private" if want is PrivateKey else "public"
        raise UsageError(f"{path} is not a {kind} key file")
    problems = validate_domain_params(keyfile.params)
    if problems:
        raise UsageError(f"{path}: invalid domain parameters: {', '.join(problems)}")
    return keyfile


def _digest(params, message_path: str | None, prehashed_value: str | None) -> DigestValue:
    if (message_path is None) == (prehashed_value is None):
        raise UsageError("give exactly one of --in and --prehashed")
    if message_path is not None:
        return digest_message(_read(message_path), params)
    if not prehashed_value.isdigit():
        raise UsageError("--prehashed expects a decimal integer")
    return prehashed(int(prehashed_value), params)


def cmd_params_gen(args) -> int:
    params = generate_domain_params(SizePolicy(args.t_bits, args.l_bits), _rng(args))
    _write(args.out, codec.encode_params(params))
    return 0


def cmd_keygen(args) -> int:
    params = codec.decode_params(_read(args.params))
    problems = validate_domain_params(params)
    if problems:
        raise UsageError(f"invalid domain parameters: {', '.join(problems)}")
    priv, pub = keygen(params, _rng(args))
    _write(args.out_priv, codec.encode_key(codec.KeyFile(args.scheme, params, priv)))
    _write(args.out_pub, codec.encode_key(codec.KeyFile(args.scheme, params, pub)))
    return 0


def cmd_sign(args) -> int:
    keyfile = _load_key(args.priv, PrivateKey)
    scheme = args.scheme or keyfile.scheme
    params = keyfile.params
    digest = _digest(params, args.input, args.prehashed)
    nonces = _nonces(args)
    if scheme == "dsa":
        sig = dsa_sign(params, keyfile.key, digest, nonces)
    elif scheme == "tdsa":
        sig = tdsa_sign(params, keyfile.key, digest, nonces)
    else:
        sig = gdsa_sign(params, keyfile.key, digest, args.n, nonces)
    _write(args.out, codec.encode_signature(sig))
    return 0


def _verify(params, pub, digest, sig):
    if isinstance(sig, DsaSignature):
        return dsa_verify(params, pub, digest, sig)
    if isinstance(sig, TdsaSignature):
        return tdsa_verify(params, pub, digest, sig)
    return gdsa_verify(params, pub, digest, sig)


def cmd_verify(args) -> int:
    keyfile = _load_key(args.pub, PublicKey)
    sig = codec.decode_signature(_read(args.sig))
    digest = _digest(keyfile.params, args.input, args.prehashed)
    trace = _verify(keyfile.params, keyfile.key, digest, sig)
    for i, u in enumerate(trace.exponents, 1):
        print(f"u{i}={u}")
    if trace.v is not None:
        print(f"v={trace.v}")
    if trace.accepted:
        print("accept")
        return 0
    print(f"reject: {trace.reason}")
    return 1


def _entry(params, sig_path, message_path, prehashed_value) -> attacks.TranscriptEntry:
    sig = codec.decode_signature(_read(sig_path))
    if isinstance(sig, GdsaSignature):
        raise UsageError("attacks take dsa or tdsa signatures")
    return attacks.TranscriptEntry(_digest(params, message_path, prehashed_value), sig)


def cmd_attack(args) -> int:
    keyfile = _load_key(args.pub, PublicKey)
    params, pub = keyfile.params, keyfile.key
    try:
        if args.attack == "forge":
            return _forge(args, params, pub)
        e1 = _entry(params, args.sig1, args.in1, args.prehashed1)
        e2 = _entry(params, args.sig2, args.in2, args.prehashed2)
        if args.attack == "dsa-nonce-reuse":
            k, x = attacks.dsa_recover_key_from_nonce_reuse(params, pub, e1, e2)
            print(f"k={k}")
            print(f"x={x}")
            print("recovered x reproduces y")
        else:
            l = attacks.tdsa_recover_l_from_pair_reuse(params, pub, e1, e2)
            print(f"l={l}")
            print("recovered l reproduces s")
    except (AttackPreconditionError, attacks.AttackFailedError) as exc:
        print(f"attack not applicable: {exc}", file=sys.stderr)
        return 1
    return 0


def _forge(args, params, pub) -> int:
    chosen = (args.k, args.k_prime, args.l, args.l_prime)
    if all(v is not None for v in chosen):
        candidates = [attacks.ForgeryInput(*chosen)]
    elif any(v is not None for v in chosen):
        raise UsageError("give all of --k --k-prime --l --l-prime, or none")
    else:
        src = _nonces(args)
        candidates = (attacks.ForgeryInput(*(src.draw(params.q) for _ in range(4))) for _ in range(args.tries))
    for inputs in candidates:
        try:
            digest, sig = attacks.tdsa_existential_forgery(params, pub, inputs)
        except UnusableForgeryError:
            continue
        print(f"forged_digest={digest.value}")
        _write(args.out, codec.encode_signature(sig))
        return 0
    print("attack not applicable: every forgery input was degenerate", file=sys.stderr)
    return 1


def cmd_bench(args) -> int:
    data = _read(args.params)
    try:
        keyfile = codec.decode_key(data)
        params = keyfile.params
        priv = keyfile.key if isinstance(keyfile.key, PrivateKey) else None
    except ParseError:
        params, priv = codec.decode_params(data), None
    problems = validate_domain_params(params)
    if problems:
        raise UsageError(f"invalid domain parameters: {', '.join(problems)}")
    if priv is None:
        priv, _ = keygen(params, _rng(args))
    public_key_for(params, priv)
    digest = digest_message(b"benchmark message", params)
    schemes = ("tdsa", "dsa") if args.scheme == "both" else (args.scheme,)
    for scheme in schemes:
        res = bench_count(params, priv, digest, scheme=scheme, iterations=args.iterations, nonces=_nonces(args))
        total = sum(res.seconds.values())
        print(
            f"{scheme}: iterations={res.iterations} exp_count={res.exp_count} mul_count={res.mul_count} "
            f"keygen={res.seconds['keygen']:.6f}s sign={res.seconds['sign']:.6f}s "
            f"verify={res.seconds['verify']:.6f}s total={total:.6f}s"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="dsalike", description="DSA and three-component DSA-like signatures.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def seeded(p):
        p.add_argument("--nonce-seed", metavar="HEX", help="deterministic randomness for reproducible runs")

    params = sub.add_parser("params", help="domain parameter operations")
    psub = params.add_subparsers(dest="params_command", required=True, parser_class=_Parser)
    gen = psub.add_parser("gen", help="generate p, q, g, alpha")
    gen.add_argument("--t-bits", type=int, default=160)
    gen.add_argument("--l-bits", type=int, default=1024)
    gen.add_argument("--out")
    seeded(gen)
    gen.set_defaults(func=cmd_params_gen)

    kg = sub.add_parser("keygen", help="generate a key pair")
    kg.add_argument("--params", required=True)
    kg.add_argument("--out-priv", required=True)
    kg.add_argument("--out-pub", required=True)
    kg.add_argument("--scheme", choices=codec.SCHEMES, default="tdsa")
    seeded(kg)
    kg.set_defaults(func=cmd_keygen)

    sg = sub.add_parser("sign", help="sign a message file or a raw digest value")
    sg.add_argument("--scheme", choices=codec.SCHEMES, help="defaults to the key file's scheme")
    sg.add_argument("--n", type=int, default=3, help="component count parameter for gdsa (>= 2)")
    sg.add_argument("--priv", required=True)
    sg.add_argument("--in", dest="input", metavar="MESSAGE_FILE")
    sg.add_argument("--prehashed", metavar="DECIMAL")
    sg.add_argument("--out")
    seeded(sg)
    sg.set_defaults(func=cmd_sign)

    vf = sub.add_parser("verify", help="verify a signature file")
    vf.add_argument("--pub", required=True)
    vf.add_argument("--in", dest="input", metavar="MESSAGE_FILE")
    vf.add_argument("--prehashed", metavar="DECIMAL")
    vf.add_argument("--sig", required=True)
    vf.set_defaults(func=cmd_verify)

    at = sub.add_parser("attack", help="attack demonstrations")
    at.add_argument("attack", choices=("dsa-nonce-reuse", "tdsa-pair-reuse", "forge"))
    at.add_argument("--pub", required=True)
    for i in (1, 2):
        at.add_argument(f"--sig{i}")
        at.add_argument(f"--in{i}", metavar="MESSAGE_FILE")
        at.add_argument(f"--prehashed{i}", metavar="DECIMAL")
    at.add_argument("--k", type=int)
    at.add_argument("--k-prime", type=int)
    at.add_argument("--l", type=int)
    at.add_argument("--l-prime", type=int)
    at.add_argument("--tries", type=int, default=100)
    at.add_argument("--out")
    seeded(at)
    at.set_defaults(func=cmd_attack)

    bn = sub.add_parser("bench", help="count exponentiations and multiplications")
    bn.add_argument("--params", required=True, help="parameter file or private key file")
    bn.add_argument("--iterations", type=int, default=1)
    bn.add_argument("--scheme", choices=("tdsa", "dsa", "both"), default="both")
    seeded(bn)
    bn.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "attack" and args.attack != "forge" and not (args.sig1 and args.sig2):
            raise UsageError("reuse attacks need --sig1 and --sig2")
        return args.func(args)
    except UsageError as exc:
        print(f"dsalike: error: {exc}", file=sys.stderr)
        return 2
    except DsalikeError as exc:
        print(f"dsalike: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
