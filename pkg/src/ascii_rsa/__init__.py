"""Textbook RSA over raw byte messages.

The pipeline: a message is read as one big-endian integer (or split into
sentinel-framed blocks that each stay below the modulus), pushed through
plain RSA exponentiation, and written back out as bytes. Educational by
design; not a substitute for a padded, audited RSA implementation.
"""

__version__ = "0.1.0"

from .blocks import CipherEnvelope, block_decrypt, block_encrypt, plaintext_block_capacity
from .codec import bytes_to_int, bytes_to_text, int_to_bytes, int_to_bytes_fixed, text_to_bytes
from .errors import (
    AsciiRsaError,
    CipherTooLarge,
    FixtureCorrupt,
    FramingError,
    InvalidKey,
    MalformedKeyFile,
    MessageTooLarge,
    ModulusTooSmall,
    NonByteCharacter,
    NotInvertible,
    ValueTooWide,
    ZeroModulus,
)
from .keystore import parse_key, parse_private, parse_public, serialize_private, serialize_public
from .numtheory import RandomSource, gcd, is_probable_prime, mod_inverse, mod_pow, random_prime
from .rsa import (
    KeyPair,
    PrivateKey,
    PublicKey,
    decimal_cipher,
    decrypt_int,
    encrypt_int,
    generate_keypair,
    paper_decrypt,
    paper_encrypt,
)
from .vectors import PaperVectors, load_vectors, verify_vectors

__all__ = [
    "AsciiRsaError",
    "CipherEnvelope",
    "CipherTooLarge",
    "FixtureCorrupt",
    "FramingError",
    "InvalidKey",
    "KeyPair",
    "MalformedKeyFile",
    "MessageTooLarge",
    "ModulusTooSmall",
    "NonByteCharacter",
    "NotInvertible",
    "PaperVectors",
    "PrivateKey",
    "PublicKey",
    "RandomSource",
    "ValueTooWide",
    "ZeroModulus",
    "block_decrypt",
    "block_encrypt",
    "bytes_to_int",
    "bytes_to_text",
    "decimal_cipher",
    "decrypt_int",
    "encrypt_int",
    "gcd",
    "generate_keypair",
    "int_to_bytes",
    "int_to_bytes_fixed",
    "is_probable_prime",
    "load_vectors",
    "mod_inverse",
    "mod_pow",
    "paper_decrypt",
    "paper_encrypt",
    "parse_key",
    "parse_private",
    "parse_public",
    "plaintext_block_capacity",
    "random_prime",
    "serialize_private",
    "serialize_public",
    "text_to_bytes",
    "verify_vectors",
]
