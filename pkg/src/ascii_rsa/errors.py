"""Exception types shared across the package."""


class AsciiRsaError(Exception):
    """Base class for every error this package raises deliberately."""


class ZeroModulus(AsciiRsaError):
    pass


class NotInvertible(AsciiRsaError):
    pass


class ValueTooWide(AsciiRsaError):
    pass


class NonByteCharacter(AsciiRsaError):
    pass


class MessageTooLarge(AsciiRsaError):
    """The message integer is not below the modulus, so plain RSA does not apply."""


class CipherTooLarge(AsciiRsaError):
    """The cipher integer is not below the modulus (corrupted or foreign ciphertext)."""


class ModulusTooSmall(AsciiRsaError):
    pass


class FramingError(AsciiRsaError):
    pass


class MalformedKeyFile(AsciiRsaError):
    pass


class InvalidKey(AsciiRsaError):
    pass


class FixtureCorrupt(AsciiRsaError):
    pass
