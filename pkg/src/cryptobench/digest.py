"""MD5 and SHA-1 built from scratch, with one-shot and streaming interfaces.

Both hashes share the same 64-byte Merkle-Damgard block pipeline and differ
only in their compression function, length-field endianness, and output
width. The streaming objects buffer at most one block between updates.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass

from .errors import StateError

_M32 = 0xFFFFFFFF


@dataclass(frozen=True)
class Digest:
    """A finished hash value tagged with its algorithm."""

    algorithm: str
    value: bytes

    @property
    def hex(self) -> str:
        return self.value.hex()


def _rotl32(x: int, s: int) -> int:
    return ((x << s) | (x >> (32 - s))) & _M32


class _BlockHash:
    """Shared 64-byte-block buffering and padding for MD5/SHA-1."""

    algorithm = ""
    _length_fmt = ""  # "<Q" or ">Q" for the trailing 64-bit bit count

    def __init__(self):
        self._buffer = b""
        self._length_bits = 0
        self._result: Digest | None = None

    def update(self, chunk: bytes) -> None:
        """Absorb more message bytes; invalid once finalize() has run."""
        if self._result is not None:
            raise StateError(f"{self.algorithm} state already finalized")
        self._length_bits += len(chunk) * 8
        data = self._buffer + chunk
        offset = 0
        for offset in range(0, len(data) - 63, 64):
            self._compress(data[offset : offset + 64])
        self._buffer = data[len(data) - (len(data) % 64) :]

    def finalize(self) -> Digest:
        """Pad, run the final blocks, and freeze the digest (idempotent)."""
        if self._result is None:
            padding = b"\x80" + b"\x00" * ((55 - self._length_bits // 8) % 64)
            tail = self._buffer + padding + struct.pack(self._length_fmt, self._length_bits)
            for offset in range(0, len(tail), 64):
                self._compress(tail[offset : offset + 64])
            self._buffer = b""
            self._result = Digest(self.algorithm, self._output())
        return self._result

    def _compress(self, block: bytes) -> None:
        raise NotImplementedError

    def _output(self) -> bytes:
        raise NotImplementedError


# Round constant i is floor(abs(sin(i + 1)) * 2^32).
_MD5_K = tuple(int(abs(math.sin(i + 1)) * 2**32) for i in range(64))
_MD5_S = (7, 12, 17, 22) * 4 + (5, 9, 14, 20) * 4 + (4, 11, 16, 23) * 4 + (6, 10, 15, 21) * 4


class Md5(_BlockHash):
    """Streaming MD5 (128-bit digest, little-endian length padding)."""

    algorithm = "MD5"
    _length_fmt = "<Q"

    def __init__(self):
        super().__init__()
        self._h = [0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476]

    def _compress(self, block: bytes) -> None:
        m = struct.unpack("<16I", block)
        a, b, c, d = self._h
        for i in range(64):
            if i < 16:
                f = (b & c) | (~b & d)
                g = i
            elif i < 32:
                f = (d & b) | (~d & c)
                g = (5 * i + 1) % 16
            elif i < 48:
                f = b ^ c ^ d
                g = (3 * i + 5) % 16
            else:
                f = c ^ (b | ~d)
                g = (7 * i) % 16
            f = (f + a + _MD5_K[i] + m[g]) & _M32
            a, d, c, b = d, c, b, (b + _rotl32(f, _MD5_S[i])) & _M32
        self._h = [(x + y) & _M32 for x, y in zip(self._h, (a, b, c, d))]

    def _output(self) -> bytes:
        return struct.pack("<4I", *self._h)


class Sha1(_BlockHash):
    """Streaming SHA-1 (160-bit digest, big-endian length padding)."""

    algorithm = "SHA1"
    _length_fmt = ">Q"

    def __init__(self):
        super().__init__()
        self._h = [0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476, 0xC3D2E1F0]

    def _compress(self, block: bytes) -> None:
        w = list(struct.unpack(">16I", block))
        for i in range(16, 80):
            w.append(_rotl32(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1))
        a, b, c, d, e = self._h
        for i in range(80):
            if i < 20:
                f = (b & c) | (~b & d)
                k = 0x5A827999
            elif i < 40:
                f = b ^ c ^ d
                k = 0x6ED9EBA1
            elif i < 60:
                f = (b & c) | (b & d) | (c & d)
                k = 0x8F1BBCDC
            else:
                f = b ^ c ^ d
                k = 0xCA62C1D6
            a, b, c, d, e = (
                (_rotl32(a, 5) + f + e + k + w[i]) & _M32,
                a,
                _rotl32(b, 30),
                c,
                d,
            )
        self._h = [(x + y) & _M32 for x, y in zip(self._h, (a, b, c, d, e))]

    def _output(self) -> bytes:
        return struct.pack(">5I", *self._h)


def md5(message: bytes) -> Digest:
    """One-shot MD5 digest."""
    state = Md5()
    state.update(message)
    return state.finalize()


def sha1(message: bytes) -> Digest:
    """One-shot SHA-1 digest."""
    state = Sha1()
    state.update(message)
    return state.finalize()
