"""Golden end-to-end vectors shipped with the package, plus their verifier.

The vectors replay one complete worked run of the pipeline: a 133-byte
message, a 1200-bit modulus built from two 600-bit primes, e = 11 with the
matching private exponent, and the intermediate plaintext/cipher integers
m1 and m2. The loader cross-checks the values against each other, so a
single mistyped digit anywhere is caught mechanically.
"""

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .codec import bytes_to_int, int_to_bytes
from .errors import FixtureCorrupt, NotInvertible
from .numtheory import RandomSource, is_probable_prime, mod_inverse
from .rsa import PrivateKey, PublicKey, decrypt_int, encrypt_int

_FIELDS = ("p", "q", "n", "phi", "e", "d", "m1", "m2")

VECTOR_FILE = "paper_vectors.txt"
MESSAGE_SIDECAR = "paper_message.bin"


@dataclass(frozen=True)
class PaperVectors:
    p: int
    q: int
    n: int
    phi: int
    e: int
    d: int
    m1: int
    m2: int
    message: bytes
    s_bits: int  # bit length of the message's 8-bit-per-byte representation


def _packaged(name: str) -> bytes:
    return resources.files("ascii_rsa").joinpath("data").joinpath(name).read_bytes()


def load_vectors(path: str | Path | None = None) -> PaperVectors:
    """Load golden vectors (the packaged set by default) and integrity-check them.

    ``path`` points at the labeled-decimal vector file; the raw message
    bytes are read from the ``paper_message.bin`` sidecar next to it.
    """
    if path is None:
        text = _packaged(VECTOR_FILE).decode("ascii")
        message = _packaged(MESSAGE_SIDECAR)
    else:
        path = Path(path)
        text = path.read_text(encoding="ascii")
        message = (path.parent / MESSAGE_SIDECAR).read_bytes()

    values: dict[str, int] = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        label, sep, digits = line.partition("=")
        if not sep or label not in _FIELDS or label in values or not digits.isdigit():
            raise FixtureCorrupt(f"bad vector line: {line[:40]!r}")
        values[label] = int(digits)
    missing = [f for f in _FIELDS if f not in values]
    if missing:
        raise FixtureCorrupt(f"vector file lacks {missing}")

    v = PaperVectors(message=message, s_bits=8 * len(message), **values)
    consistent = (
        v.n == v.p * v.q
        and v.phi == (v.p - 1) * (v.q - 1)
        and (v.e * v.d) % v.phi == 1
        and v.e == 11
        and v.m1 < v.n
        and v.m2 < v.n
    )
    if not consistent:
        raise FixtureCorrupt("vector values are mutually inconsistent")
    return v


def verify_vectors(
    v: PaperVectors, rounds: int = 20, rng: RandomSource | None = None
) -> list[tuple[str, bool]]:
    """Replay every step of the worked example; returns (check, passed) pairs."""
    public = PublicKey(v.n, v.e)
    private = PrivateKey(v.n, v.d)
    try:
        inverse_matches = mod_inverse(v.e, v.phi) == v.d
    except NotInvertible:
        inverse_matches = False
    return [
        ("message bytes -> m1", bytes_to_int(v.message) == v.m1),
        ("m1 -> m2 (encrypt)", encrypt_int(v.m1, public) == v.m2),
        ("m2 -> m1 (decrypt)", decrypt_int(v.m2, private) == v.m1),
        ("m1 -> message bytes", int_to_bytes(v.m1) == v.message),
        ("mod_inverse(e, phi) == d", inverse_matches),
        (
            "p and q probable primes",
            is_probable_prime(v.p, rounds, rng) and is_probable_prime(v.q, rounds, rng),
        ),
    ]
