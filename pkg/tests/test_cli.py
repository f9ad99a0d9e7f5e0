import random
import subprocess
import sys

import pytest

from dsalike import (
    DeterministicNonces,
    DomainParams,
    DsaSignature,
    GdsaSignature,
    PrivateKey,
    PublicKey,
    RandomNonces,
    TdsaSignature,
    digest_message,
    keygen,
    prehashed,
    tdsa_sign,
    tdsa_verify,
)
from dsalike.cli import main
from dsalike.codec import KeyFile, decode_key, decode_params, decode_signature, encode_key, encode_signature

from .vectors import EX_H_IMPLIED, EX_R, EX_S, EX_T, EX_X, EX_Y


@pytest.fixture
def example_files(tmp_path, example_params):
    pub = tmp_path / "example.pub"
    priv = tmp_path / "example.key"
    sig = tmp_path / "example.sig"
    pub.write_bytes(encode_key(KeyFile("tdsa", example_params, PublicKey(EX_Y))))
    priv.write_bytes(encode_key(KeyFile("tdsa", example_params, PrivateKey(EX_X))))
    sig.write_bytes(encode_signature(TdsaSignature(EX_R, EX_S, EX_T)))
    return pub, priv, sig


@pytest.fixture
def toy_files(tmp_path, toy):
    pub = tmp_path / "toy.pub"
    priv = tmp_path / "toy.key"
    pub.write_bytes(encode_key(KeyFile("tdsa", toy, PublicKey(8))))
    priv.write_bytes(encode_key(KeyFile("tdsa", toy, PrivateKey(3))))
    return pub, priv


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_example_vector(capsys, example_files):
    pub, _, sig = example_files
    code, out, _ = run(capsys, "verify", "--pub", pub, "--prehashed", EX_H_IMPLIED, "--sig", sig)
    assert code == 0
    assert f"v={EX_S}" in out
    assert out.strip().endswith("accept")


def test_verify_tampered_t(capsys, tmp_path, example_files):
    pub, _, _ = example_files
    bad = tmp_path / "bad.sig"
    bad.write_bytes(encode_signature(TdsaSignature(EX_R, EX_S, EX_T + 1)))
    code, out, _ = run(capsys, "verify", "--pub", pub, "--prehashed", EX_H_IMPLIED, "--sig", bad)
    assert code == 1
    assert "reject: mismatch" in out


def test_sign_is_deterministic_with_seed(capsys, tmp_path, toy_files):
    _, priv = toy_files
    msg = tmp_path / "msg"
    msg.write_bytes(b"hello")
    outs = []
    for name in ("a.sig", "b.sig"):
        code, _, err = run(capsys, "sign", "--priv", priv, "--in", msg, "--out", tmp_path / name, "--nonce-seed", "00ff")
        assert code == 0, err
        outs.append((tmp_path / name).read_bytes())
    assert outs[0] == outs[1]
    code, _, _ = run(capsys, "sign", "--priv", priv, "--in", msg, "--out", tmp_path / "c.sig", "--nonce-seed", "01ff")
    assert code == 0


@pytest.mark.parametrize("scheme,extra", [("dsa", []), ("tdsa", []), ("gdsa", ["--n", "4"])])
def test_sign_verify_each_scheme(capsys, tmp_path, example_files, scheme, extra):
    pub, priv, _ = example_files
    msg = tmp_path / "msg"
    msg.write_bytes(b"attack at dawn")
    sig = tmp_path / "out.sig"
    assert run(capsys, "sign", "--scheme", scheme, *extra, "--priv", priv, "--in", msg, "--out", sig)[0] == 0
    kinds = {"dsa": DsaSignature, "tdsa": TdsaSignature, "gdsa": GdsaSignature}
    assert isinstance(decode_signature(sig.read_bytes()), kinds[scheme])
    code, out, _ = run(capsys, "verify", "--pub", pub, "--in", msg, "--sig", sig)
    assert code == 0 and "accept" in out
    msg.write_bytes(b"attack at dusk")
    assert run(capsys, "verify", "--pub", pub, "--in", msg, "--sig", sig)[0] == 1


def test_params_keygen_flow(capsys, tmp_path):
    params = tmp_path / "params"
    code, _, err = run(capsys, "params", "gen", "--t-bits", 160, "--l-bits", 512, "--out", params, "--nonce-seed", "07")
    assert code == 0, err
    parsed = decode_params(params.read_bytes())
    assert parsed.q.bit_length() == 160 and parsed.p.bit_length() == 512
    priv, pub = tmp_path / "k", tmp_path / "k.pub"
    assert run(capsys, "keygen", "--params", params, "--out-priv", priv, "--out-pub", pub)[0] == 0
    kp, kq = decode_key(priv.read_bytes()), decode_key(pub.read_bytes())
    assert pow(parsed.alpha, kp.key.x, parsed.p) == kq.key.y


def test_params_gen_rejects_policy(capsys):
    code, _, err = run(capsys, "params", "gen", "--t-bits", 8, "--l-bits", 16)
    assert code == 2
    assert "t_bits" in err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["verify", "--pub", "nope.pub", "--prehashed", "5", "--sig", "nope.sig"],
        ["sign", "--priv"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_parse_error_exit_2(capsys, tmp_path, toy_files):
    pub, _ = toy_files
    sig = tmp_path / "s"
    sig.write_bytes(b"scheme=tdsa\nr=4\ns=5\nt=0\n")
    code, _, err = run(capsys, "verify", "--pub", pub, "--prehashed", 5, "--sig", sig)
    assert code == 2
    assert "line 4" in err


def test_verify_needs_exactly_one_message(capsys, tmp_path, toy_files):
    pub, _ = toy_files
    sig = tmp_path / "s"
    sig.write_bytes(b"scheme=tdsa\nr=4\ns=5\nt=4\n")
    assert run(capsys, "verify", "--pub", pub, "--sig", sig)[0] == 2
    assert run(capsys, "verify", "--pub", pub, "--sig", sig, "--prehashed", 5)[0] == 0
    assert run(capsys, "verify", "--pub", pub, "--sig", sig, "--prehashed", 11)[0] == 2


def test_invalid_params_in_key_exit_2(capsys, tmp_path):
    pub = tmp_path / "bad.pub"
    pub.write_bytes(b"scheme=tdsa\np=23\nq=7\nalpha=2\ny=8\n")
    sig = tmp_path / "s"
    sig.write_bytes(b"scheme=tdsa\nr=4\ns=5\nt=4\n")
    code, _, err = run(capsys, "verify", "--pub", pub, "--sig", sig, "--prehashed", 5)
    assert code == 2 and "q-does-not-divide" in err


def test_attack_dsa_nonce_reuse(capsys, tmp_path, toy_files):
    pub, priv = toy_files
    s1, s2 = tmp_path / "1.sig", tmp_path / "2.sig"
    run(capsys, "sign", "--scheme", "dsa", "--priv", priv, "--prehashed", 5, "--out", s1, "--nonce-seed", "aa")
    run(capsys, "sign", "--scheme", "dsa", "--priv", priv, "--prehashed", 7, "--out", s2, "--nonce-seed", "aa")
    code, out, _ = run(
        capsys, "attack", "dsa-nonce-reuse", "--pub", pub,
        "--sig1", s1, "--prehashed1", 5, "--sig2", s2, "--prehashed2", 7,
    )
    assert code == 0
    assert "x=3" in out.splitlines()


def test_attack_tdsa_pair_reuse(capsys, tmp_path, example_files):
    pub, priv, _ = example_files
    s1, s2 = tmp_path / "1.sig", tmp_path / "2.sig"
    m1, m2 = tmp_path / "m1", tmp_path / "m2"
    m1.write_bytes(b"one")
    m2.write_bytes(b"two")
    run(capsys, "sign", "--priv", priv, "--in", m1, "--out", s1, "--nonce-seed", "bb")
    run(capsys, "sign", "--priv", priv, "--in", m2, "--out", s2, "--nonce-seed", "bb")
    code, out, _ = run(capsys, "attack", "tdsa-pair-reuse", "--pub", pub, "--sig1", s1, "--in1", m1, "--sig2", s2, "--in2", m2)
    assert code == 0
    l = int(next(line for line in out.splitlines() if line.startswith("l="))[2:])
    # the seed stream yields k then l
    src = DeterministicNonces(bytes.fromhex("bb"))
    q = decode_key(pub.read_bytes()).params.q
    src.draw(q)
    assert l == src.draw(q)


def test_attack_not_applicable_exit_1(capsys, tmp_path, toy_files):
    pub, _ = toy_files
    s1, s2 = tmp_path / "1.sig", tmp_path / "2.sig"
    # k=2 and k=3 on digests 5 and 7 under x=3
    s1.write_bytes(encode_signature(DsaSignature(4, 3)))
    s2.write_bytes(encode_signature(DsaSignature(8, 9)))
    code, _, err = run(
        capsys, "attack", "dsa-nonce-reuse", "--pub", pub,
        "--sig1", s1, "--prehashed1", 5, "--sig2", s2, "--prehashed2", 7,
    )
    assert code == 1 and "not applicable" in err


def test_attack_forge(capsys, tmp_path, toy_files):
    pub, _ = toy_files
    sig = tmp_path / "forged.sig"
    code, out, _ = run(capsys, "attack", "forge", "--pub", pub, "--k", 1, "--k-prime", 2, "--l", 3, "--l-prime", 5, "--out", sig)
    assert code == 0
    assert "forged_digest=6" in out
    assert run(capsys, "verify", "--pub", pub, "--prehashed", 6, "--sig", sig)[0] == 0


def test_attack_forge_random(capsys, tmp_path, example_files):
    pub, _, _ = example_files
    sig = tmp_path / "forged.sig"
    code, out, _ = run(capsys, "attack", "forge", "--pub", pub, "--nonce-seed", "cc", "--out", sig)
    assert code == 0
    m = int(out.split("forged_digest=")[1].split()[0])
    assert run(capsys, "verify", "--pub", pub, "--prehashed", m, "--sig", sig)[0] == 0


def test_bench(capsys, tmp_path, example_files):
    _, priv, _ = example_files
    code, out, _ = run(capsys, "bench", "--params", priv, "--iterations", 3)
    assert code == 0
    lines = out.splitlines()
    assert "tdsa: iterations=3 exp_count=21 mul_count=24" in lines[0]
    assert "dsa: iterations=3 exp_count=15 mul_count=15" in lines[1]


def test_exit_code_matches_library(capsys, tmp_path, toy):
    rng = random.Random(77)
    pub_path, sig_path = tmp_path / "pub", tmp_path / "sig"
    for _ in range(100):
        priv, pub = keygen(toy, rng)
        pub_path.write_bytes(encode_key(KeyFile("tdsa", toy, pub)))
        h = rng.randrange(1, toy.q)
        sig = tdsa_sign(toy, priv, prehashed(h, toy), RandomNonces(rng))
        if rng.random() < 0.5:
            sig = TdsaSignature(sig.r, sig.s, rng.randrange(1, toy.q))
        sig_path.write_bytes(encode_signature(sig))
        expected = 0 if tdsa_verify(toy, pub, prehashed(h, toy), sig).accepted else 1
        assert run(capsys, "verify", "--pub", pub_path, "--prehashed", h, "--sig", sig_path)[0] == expected


def test_module_entry_point(tmp_path, toy_files):
    pub, priv = toy_files
    msg = tmp_path / "m"
    msg.write_bytes(b"x")
    sig = tmp_path / "s"
    subprocess.run([sys.executable, "-m", "dsalike", "sign", "--priv", priv, "--in", msg, "--out", sig], check=True)
    done = subprocess.run(
        [sys.executable, "-m", "dsalike", "verify", "--pub", pub, "--in", msg, "--sig", sig], capture_output=True, text=True
    )
    assert done.returncode == 0 and "accept" in done.stdout
    toy = DomainParams(23, 11, 2, 5)
    assert tdsa_verify(toy, PublicKey(8), digest_message(b"x", toy), decode_signature(sig.read_bytes()))
