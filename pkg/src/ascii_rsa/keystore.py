"""Plain-text key files: one header line, then labeled decimal values.

Public files carry n and e; private files carry n and d plus, optionally,
the p/q/phi provenance trio. Values are decimal so they can be pasted from
and compared against worked examples directly.
"""

import re

from .errors import MalformedKeyFile
from .rsa import PrivateKey, PublicKey

PUBLIC_HEADER = "ascii-rsa public key v1"
PRIVATE_HEADER = "ascii-rsa private key v1"

_DECIMAL = re.compile(r"0|[1-9][0-9]*")  # no leading zeros


def serialize_public(k: PublicKey) -> str:
    return f"{PUBLIC_HEADER}\nn={k.n}\ne={k.e}\n"


def serialize_private(k: PrivateKey) -> str:
    lines = [PRIVATE_HEADER, f"n={k.n}", f"d={k.d}"]
    for label in ("p", "q", "phi"):
        value = getattr(k, label)
        if value is not None:
            lines.append(f"{label}={value}")
    return "\n".join(lines) + "\n"


def _split_lines(text: str) -> list[str]:
    # LF or CRLF endings; a missing final newline is tolerated, nothing else.
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return [line[:-1] if line.endswith("\r") else line for line in lines]


def _parse_entries(text: str, header: str, required: list[str], optional: list[str]) -> dict[str, int]:
    lines = _split_lines(text)
    if not lines or lines[0] != header:
        raise MalformedKeyFile(f"bad header (expected {header!r})")
    labels = []
    entries = {}
    for line in lines[1:]:
        label, sep, value = line.partition("=")
        if not sep or not _DECIMAL.fullmatch(value):
            raise MalformedKeyFile(f"bad entry line: {line!r}")
        if label in entries:
            raise MalformedKeyFile(f"duplicate label {label!r}")
        labels.append(label)
        entries[label] = int(value)
    if labels[: len(required)] != required:
        raise MalformedKeyFile(f"expected labels {required} first, got {labels}")
    # Remaining labels must be an in-order subset of the optional ones.
    position = 0
    for label in labels[len(required) :]:
        while position < len(optional) and optional[position] != label:
            position += 1
        if position == len(optional):
            raise MalformedKeyFile(f"unexpected or misordered label {label!r}")
        position += 1
    return entries


def parse_public(text: str) -> PublicKey:
    entries = _parse_entries(text, PUBLIC_HEADER, ["n", "e"], [])
    return PublicKey(entries["n"], entries["e"])


def parse_private(text: str) -> PrivateKey:
    entries = _parse_entries(text, PRIVATE_HEADER, ["n", "d"], ["p", "q", "phi"])
    return PrivateKey(
        entries["n"],
        entries["d"],
        p=entries.get("p"),
        q=entries.get("q"),
        phi=entries.get("phi"),
    )


def parse_key(text: str) -> PublicKey | PrivateKey:
    """Parse either kind of key file, dispatching on its header line."""
    lines = _split_lines(text)
    if lines and lines[0] == PRIVATE_HEADER:
        return parse_private(text)
    return parse_public(text)
