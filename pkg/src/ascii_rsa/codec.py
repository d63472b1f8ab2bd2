"""Conversions between byte strings and non-negative integers.

Byte strings are read big-endian, base 256. The zero integer maps to the
empty string, so a message's leading NUL bytes do not survive a round trip
through the integer form; block framing restores losslessness where that
matters.
"""

from .errors import NonByteCharacter, ValueTooWide


def bytes_to_int(b: bytes) -> int:
    """Big-endian base-256 value of ``b``; the empty string is 0."""
    return int.from_bytes(b, "big")


def int_to_bytes(x: int) -> bytes:
    """Shortest big-endian encoding of ``x``: no leading NUL, 0 -> empty."""
    if x < 0:
        raise ValueError("negative values cannot be encoded")
    return x.to_bytes((x.bit_length() + 7) // 8, "big")


def int_to_bytes_fixed(x: int, width: int) -> bytes:
    """Big-endian encoding of ``x``, left-padded with NUL to exactly ``width`` bytes."""
    if x < 0:
        raise ValueError("negative values cannot be encoded")
    if (x.bit_length() + 7) // 8 > width:
        raise ValueTooWide(f"{x} does not fit in {width} byte(s)")
    return x.to_bytes(width, "big")


def text_to_bytes(t: str) -> bytes:
    """One byte per character; rejects code points above 255."""
    try:
        return t.encode("latin-1")
    except UnicodeEncodeError as exc:
        raise NonByteCharacter("text contains a character outside the 256-entry table") from exc


def bytes_to_text(b: bytes) -> str:
    """Inverse of text_to_bytes: one character per byte."""
    return b.decode("latin-1")
