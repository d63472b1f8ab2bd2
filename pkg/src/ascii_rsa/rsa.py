"""RSA key material, key generation, and the single-integer message pipelines.

This is deliberately textbook RSA: deterministic, no padding scheme, no
constant-time guarantees. It exists to demonstrate the byte/integer message
codec, not to protect real secrets.
"""

from dataclasses import dataclass

from .codec import bytes_to_int, int_to_bytes
from .errors import CipherTooLarge, InvalidKey, MessageTooLarge
from .numtheory import RandomSource, gcd, mod_inverse, mod_pow, random_prime


@dataclass(frozen=True)
class PublicKey:
    n: int
    e: int

    def __post_init__(self):
        if self.n < 6:
            raise InvalidKey("modulus must be at least 6")
        if not 1 < self.e < self.n:
            raise InvalidKey("public exponent must satisfy 1 < e < n")


@dataclass(frozen=True)
class PrivateKey:
    n: int
    d: int
    # Optional provenance; d alone suffices to decrypt.
    p: int | None = None
    q: int | None = None
    phi: int | None = None

    def __post_init__(self):
        if self.n < 6:
            raise InvalidKey("modulus must be at least 6")
        if not 1 < self.d < self.n:
            raise InvalidKey("private exponent must satisfy 1 < d < n")
        if (self.p is None) != (self.q is None):
            raise InvalidKey("p and q must be given together")
        if self.p is not None and self.p * self.q != self.n:
            raise InvalidKey("p * q does not equal n")
        if self.phi is not None:
            if not 1 < self.d < self.phi:
                raise InvalidKey("private exponent must satisfy 1 < d < phi")
            if self.p is not None and (self.p - 1) * (self.q - 1) != self.phi:
                raise InvalidKey("phi does not equal (p - 1) * (q - 1)")


@dataclass(frozen=True)
class KeyPair:
    public: PublicKey
    private: PrivateKey

    def __post_init__(self):
        if self.public.n != self.private.n:
            raise InvalidKey("public and private halves disagree on n")
        if self.private.phi is not None:
            if (self.public.e * self.private.d) % self.private.phi != 1:
                raise InvalidKey("e * d is not 1 modulo phi")


def generate_keypair(
    bits_p: int,
    bits_q: int,
    e: int = 11,
    rounds: int = 20,
    rng: RandomSource | None = None,
) -> KeyPair:
    """Generate a key pair with primes of exactly ``bits_p`` and ``bits_q`` bits.

    The requested public exponent is kept as-is: when it shares a factor
    with phi, both primes are discarded and regenerated. A q equal to p is
    rerolled, which matters at the tiny sizes used in tests.
    """
    if bits_p < 4 or bits_q < 4:
        raise ValueError("prime sizes must be at least 4 bits")
    if e < 3 or e % 2 == 0:
        raise ValueError("public exponent must be odd and >= 3")
    if rng is None:
        rng = RandomSource()
    while True:
        p = random_prime(bits_p, rounds, rng)
        q = random_prime(bits_q, rounds, rng)
        while q == p:
            q = random_prime(bits_q, rounds, rng)
        phi = (p - 1) * (q - 1)
        if gcd(e, phi) == 1:
            break
    n = p * q
    d = mod_inverse(e, phi)
    return KeyPair(PublicKey(n, e), PrivateKey(n, d, p=p, q=q, phi=phi))


def encrypt_int(m: int, k: PublicKey) -> int:
    if m < 0:
        raise ValueError("message integer must be non-negative")
    if m >= k.n:
        raise MessageTooLarge(
            f"message integer has {m.bit_length()} bits; this key's modulus has "
            f"{k.n.bit_length()} bits, but at least {m.bit_length() + 1} are needed"
        )
    return mod_pow(m, k.e, k.n)


def decrypt_int(c: int, k: PrivateKey) -> int:
    if c < 0:
        raise ValueError("cipher integer must be non-negative")
    if c >= k.n:
        raise CipherTooLarge(
            f"cipher integer has {c.bit_length()} bits but the modulus has only "
            f"{k.n.bit_length()}; corrupted or foreign ciphertext"
        )
    return mod_pow(c, k.d, k.n)


def decimal_cipher(message: bytes, k: PublicKey) -> int:
    """The whole message encrypted as one integer, returned in integer form."""
    return encrypt_int(bytes_to_int(message), k)


def paper_encrypt(message: bytes, k: PublicKey) -> bytes:
    """Single-block pipeline: message bytes -> integer -> RSA -> cipher bytes.

    Requires the message integer to be below the modulus.
    """
    return int_to_bytes(decimal_cipher(message, k))


def paper_decrypt(cipher: bytes, k: PrivateKey) -> bytes:
    """Inverse of paper_encrypt. Leading NUL bytes of the original message
    cannot be reconstructed (the integer form has no notion of them)."""
    return int_to_bytes(decrypt_int(bytes_to_int(cipher), k))
