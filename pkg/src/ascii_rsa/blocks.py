"""Arbitrary-length encryption by splitting the message into framed blocks.

Each plaintext block is prefixed with a 0x01 sentinel byte before the
integer conversion. The sentinel keeps every block value strictly below the
modulus, preserves leading NUL payload bytes, and makes the final partial
block's length self-describing, so round trips are lossless on all inputs.
"""

import struct
from dataclasses import dataclass, field

from .codec import bytes_to_int, int_to_bytes, int_to_bytes_fixed
from .errors import FramingError, ModulusTooSmall
from .rsa import PrivateKey, PublicKey, decrypt_int, encrypt_int

ENVELOPE_MAGIC = b"ARSA1"
ENVELOPE_HEADER_SIZE = 9  # magic + 4-byte big-endian block width
SENTINEL = 0x01


@dataclass(frozen=True)
class CipherEnvelope:
    """Block-mode ciphertext: fixed-width cipher blocks plus a tiny header."""

    cipher_block_width: int
    blocks: tuple[bytes, ...] = field(default_factory=tuple)
    version: int = 1

    def to_bytes(self) -> bytes:
        out = bytearray(ENVELOPE_MAGIC)
        out += struct.pack(">I", self.cipher_block_width)
        for block in self.blocks:
            out += block
        return bytes(out)

    @classmethod
    def from_bytes(cls, data: bytes) -> "CipherEnvelope":
        if len(data) < ENVELOPE_HEADER_SIZE or data[:5] != ENVELOPE_MAGIC:
            raise FramingError("not a cipher envelope (bad magic or truncated header)")
        width = struct.unpack(">I", data[5:9])[0]
        if width == 0:
            raise FramingError("cipher block width must be positive")
        body = data[ENVELOPE_HEADER_SIZE:]
        if len(body) % width != 0:
            raise FramingError(
                f"envelope body of {len(body)} bytes is not a multiple of block width {width}"
            )
        blocks = tuple(body[i : i + width] for i in range(0, len(body), width))
        return cls(width, blocks)


def _cipher_width(n: int) -> int:
    return (n.bit_length() + 7) // 8


def plaintext_block_capacity(k: PublicKey) -> int:
    """Payload bytes per block.

    One byte is reserved for the sentinel; the formula guarantees that any
    sentinel-plus-payload string encodes to an integer below 2**(bits(n)-1),
    hence below n, without per-block comparisons.
    """
    capacity = (k.n.bit_length() - 1) // 8 - 1
    if capacity < 1:
        raise ModulusTooSmall(
            f"modulus of {k.n.bit_length()} bits is too small for block framing (needs >= 17)"
        )
    return capacity


def block_encrypt(message: bytes, k: PublicKey) -> CipherEnvelope:
    """Encrypt a message of any length; the empty message yields zero blocks."""
    capacity = plaintext_block_capacity(k)
    width = _cipher_width(k.n)
    blocks = []
    for start in range(0, len(message), capacity):
        framed = bytes([SENTINEL]) + message[start : start + capacity]
        m = bytes_to_int(framed)
        assert m < k.n  # guaranteed by the capacity formula
        blocks.append(int_to_bytes_fixed(encrypt_int(m, k), width))
    return CipherEnvelope(width, tuple(blocks))


def block_decrypt(env: CipherEnvelope, k: PrivateKey) -> bytes:
    """Decrypt an envelope; strict inverse of block_encrypt under the same key."""
    out = bytearray()
    for index, block in enumerate(env.blocks):
        if len(block) != env.cipher_block_width:
            raise FramingError(
                f"block {index} is {len(block)} bytes, expected {env.cipher_block_width}"
            )
        plain = int_to_bytes(decrypt_int(bytes_to_int(block), k))
        if not plain or plain[0] != SENTINEL:
            raise FramingError(
                f"block {index} did not decrypt to a framed payload (wrong key or corrupted data)"
            )
        out += plain[1:]
    return bytes(out)
