import pytest

from ascii_rsa import KeyPair, PrivateKey, PublicKey, load_vectors


@pytest.fixture(scope="session")
def golden():
    """The packaged golden vectors (1200-bit modulus, e = 11, 133-byte message)."""
    return load_vectors()


@pytest.fixture()
def tiny_keypair():
    # p=61, q=53: the classic small worked key. d found by extended Euclid.
    return KeyPair(PublicKey(3233, 17), PrivateKey(3233, 2753, p=61, q=53, phi=3120))
