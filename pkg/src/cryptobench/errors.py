"""Exception hierarchy shared by all cryptobench modules."""


class CryptoBenchError(Exception):
    """Base class for every error raised by this library."""


class DomainError(CryptoBenchError, ValueError):
    """An argument lies outside the operation's domain."""


class NotInvertibleError(CryptoBenchError):
    """Modular inverse requested for a non-unit; carries the offending gcd."""

    def __init__(self, value: int, modulus: int, gcd: int):
        super().__init__(f"{value} is not invertible mod {modulus} (gcd {gcd})")
        self.value = value
        self.modulus = modulus
        self.gcd = gcd


class DiscreteLogNotFoundError(CryptoBenchError):
    """No exponent below the stated order bound maps base to target."""


class PaddingError(CryptoBenchError):
    """Ciphertext unpadded to an invalid PKCS#7 tail."""


class MessageTooLargeError(DomainError):
    """Plaintext value falls outside the scheme's message space."""


class KeyMismatchError(CryptoBenchError):
    """Ciphertext fingerprint does not match the key in use."""


class DecryptionError(CryptoBenchError):
    """Decryption produced no valid plaintext (corrupt data or wrong key)."""


class StateError(CryptoBenchError):
    """Streaming object used after it was finalized."""


class IntegrityError(CryptoBenchError):
    """A timed benchmark sample failed its post-run correctness check."""


class ReportFormatError(CryptoBenchError):
    """A report or key file does not match the expected schema."""
