"""Canonical decimal text encoding for parameters, keys and signatures.

Every file is a sequence of ``name=value`` lines with lowercase names in a
fixed order and decimal values without leading zeros::

    scheme=tdsa
    p=23
    q=11
    g=5
    alpha=2
    y=8

Decoding is strict. Unknown, missing, duplicate or out-of-order fields
raise ParseError with the offending line number, so a file that decodes
re-encodes to the same bytes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .dsa import DsaSignature
from .errors import ParseError
from .params import DomainParams, PrivateKey, PublicKey
from .tdsa import GdsaSignature, TdsaSignature

SCHEMES = ("dsa", "tdsa", "gdsa")

_LINE = re.compile(r"([a-z][a-z0-9_]*)=(.*)")
_DECIMAL = re.compile(r"0|[1-9][0-9]*")


@dataclass(frozen=True)
class KeyFile:
    scheme: str
    params: DomainParams
    key: PrivateKey | PublicKey


def _render(fields: list[tuple[str, object]]) -> bytes:
    return "".join(f"{name}={value}\n" for name, value in fields).encode("ascii")


class _Reader:
    """Consumes fields in order, tracking line numbers for diagnostics."""

    def __init__(self, data: bytes) -> None:
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}") from None
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        self._items = []
        for i, line in enumerate(lines, 1):
            m = _LINE.fullmatch(line)
            if not m:
                raise ParseError(f"malformed line {line!r}", i)
            self._items.append((i, m.group(1), m.group(2)))
        self._pos = 0

    def _peek(self):
        return self._items[self._pos] if self._pos < len(self._items) else None

    def has(self, name: str) -> bool:
        item = self._peek()
        return item is not None and item[1] == name

    def raw(self, name: str) -> tuple[int, str]:
        item = self._peek()
        if item is None:
            raise ParseError(f"missing field {name!r}", len(self._items) + 1)
        lineno, got, value = item
        if got != name:
            raise ParseError(f"expected field {name!r}, found {got!r}", lineno)
        self._pos += 1
        return lineno, value

    def integer(self, name: str, low: int = 1, high: int | None = None) -> int:
        lineno, value = self.raw(name)
        if not _DECIMAL.fullmatch(value):
            raise ParseError(f"{name} is not a canonical decimal integer", lineno)
        n = int(value)
        if n < low or (high is not None and n > high):
            bound = f"[{low}, {high}]" if high is not None else f">= {low}"
            raise ParseError(f"{name}={n} out of range {bound}", lineno)
        return n

    def scheme(self) -> str:
        lineno, value = self.raw("scheme")
        if value not in SCHEMES:
            raise ParseError(f"unknown scheme {value!r}", lineno)
        return value

    def finish(self) -> None:
        item = self._peek()
        if item is not None:
            raise ParseError(f"unexpected field {item[1]!r}", item[0])


def _params_fields(params: DomainParams) -> list[tuple[str, object]]:
    fields: list[tuple[str, object]] = [("p", params.p), ("q", params.q)]
    if params.g is not None:
        fields.append(("g", params.g))
    fields.append(("alpha", params.alpha))
    return fields


def _read_params(rd: _Reader) -> DomainParams:
    p = rd.integer("p", low=3)
    q = rd.integer("q", low=2, high=p - 1)
    g = rd.integer("g", low=2, high=p - 1) if rd.has("g") else None
    alpha = rd.integer("alpha", low=2, high=p - 1)
    return DomainParams(p=p, q=q, alpha=alpha, g=g)


def encode_params(params: DomainParams) -> bytes:
    return _render(_params_fields(params))


def decode_params(data: bytes) -> DomainParams:
    rd = _Reader(data)
    params = _read_params(rd)
    rd.finish()
    return params


def encode_key(keyfile: KeyFile) -> bytes:
    if keyfile.scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {keyfile.scheme!r}")
    fields: list[tuple[str, object]] = [("scheme", keyfile.scheme)] + _params_fields(keyfile.params)
    if isinstance(keyfile.key, PrivateKey):
        fields.append(("x", keyfile.key.x))
    else:
        fields.append(("y", keyfile.key.y))
    return _render(fields)


def decode_key(data: bytes) -> KeyFile:
    rd = _Reader(data)
    scheme = rd.scheme()
    params = _read_params(rd)
    key: PrivateKey | PublicKey
    if rd.has("x"):
        key = PrivateKey(rd.integer("x", low=1, high=params.q - 1))
    else:
        key = PublicKey(rd.integer("y", low=2, high=params.p - 1))
    rd.finish()
    return KeyFile(scheme, params, key)


def encode_signature(sig: DsaSignature | TdsaSignature | GdsaSignature) -> bytes:
    if isinstance(sig, DsaSignature):
        return _render([("scheme", "dsa"), ("r", sig.r), ("s", sig.s)])
    if isinstance(sig, TdsaSignature):
        return _render([("scheme", "tdsa"), ("r", sig.r), ("s", sig.s), ("t", sig.t)])
    if isinstance(sig, GdsaSignature):
        fields: list[tuple[str, object]] = [("scheme", "gdsa"), ("n", sig.n)]
        fields += [(f"r{i}", r) for i, r in enumerate(sig.r_values, 1)]
        return _render(fields)
    raise TypeError(f"not a signature: {type(sig).__name__}")


def decode_signature(data: bytes) -> DsaSignature | TdsaSignature | GdsaSignature:
    """Parse a signature file.

    Components must be positive. Upper bounds depend on the domain
    parameters and are checked by the verifiers.
    """
    rd = _Reader(data)
    scheme = rd.scheme()
    sig: DsaSignature | TdsaSignature | GdsaSignature
    if scheme == "dsa":
        sig = DsaSignature(rd.integer("r"), rd.integer("s"))
    elif scheme == "tdsa":
        sig = TdsaSignature(rd.integer("r"), rd.integer("s"), rd.integer("t"))
    else:
        n = rd.integer("n", low=2)
        sig = GdsaSignature(tuple(rd.integer(f"r{i}") for i in range(1, n + 2)))
    rd.finish()
    return sig
