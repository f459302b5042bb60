"""AES-128 and DES block ciphers with CBC mode and PKCS#7 padding.

The AES tables are generated from the GF(2^8) construction at import time;
the DES permutations are compiled into per-byte lookup tables so the Feistel
rounds run on plain ints. Both ciphers expose the same surface (block_size,
encrypt_block, decrypt_block), which is all CBC needs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, PaddingError

# ---------------------------------------------------------------------------
# AES-128


def _gf_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        if a & 0x100:
            a ^= 0x11B
        b >>= 1
    return out


def _build_aes_tables():
    sbox = [0] * 256
    inv = [0] * 256
    # exp/log over generator 3 gives the multiplicative inverses
    exp = [0] * 255
    log = [0] * 256
    x = 1
    for i in range(255):
        exp[i] = x
        log[x] = i
        x = _gf_mul(x, 3)
    for v in range(256):
        u = 0 if v == 0 else exp[255 - log[v]]
        s = u
        for _ in range(4):
            u = ((u << 1) | (u >> 7)) & 0xFF
            s ^= u
        sbox[v] = s ^ 0x63
    for v, s in enumerate(sbox):
        inv[s] = v
    return tuple(sbox), tuple(inv)


_SBOX, _INV_SBOX = _build_aes_tables()
_XT = tuple(_gf_mul(v, 2) for v in range(256))
_MUL9 = tuple(_gf_mul(v, 9) for v in range(256))
_MUL11 = tuple(_gf_mul(v, 11) for v in range(256))
_MUL13 = tuple(_gf_mul(v, 13) for v in range(256))
_MUL14 = tuple(_gf_mul(v, 14) for v in range(256))

# state index 4*col + row; ShiftRows sends column (c + r) % 4 into column c
_SHIFT_IDX = tuple(4 * ((i // 4 + i % 4) % 4) + i % 4 for i in range(16))
_INV_SHIFT_IDX = tuple(4 * ((i // 4 - i % 4) % 4) + i % 4 for i in range(16))

_RCON = (0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36)


def _expand_key_128(key: bytes) -> tuple[tuple[int, ...], ...]:
    words = [list(key[i : i + 4]) for i in range(0, 16, 4)]
    for i in range(4, 44):
        w = list(words[i - 1])
        if i % 4 == 0:
            w = w[1:] + w[:1]
            w = [_SBOX[b] for b in w]
            w[0] ^= _RCON[i // 4 - 1]
        words.append([a ^ b for a, b in zip(words[i - 4], w)])
    return tuple(
        tuple(b for w in words[4 * r : 4 * r + 4] for b in w) for r in range(11)
    )


class AesKey128:
    """AES-128 key with its 11 expanded round keys."""

    block_size = 16

    def __init__(self, key_bytes: bytes):
        if len(key_bytes) != 16:
            raise DomainError("AES-128 key must be exactly 16 bytes")
        self.key_bytes = bytes(key_bytes)
        self.round_keys = _expand_key_128(self.key_bytes)

    def encrypt_block(self, block: bytes) -> bytes:
        return aes_encrypt_block(self, block)

    def decrypt_block(self, block: bytes) -> bytes:
        return aes_decrypt_block(self, block)


def aes_encrypt_block(key: AesKey128, block: bytes) -> bytes:
    """Encrypt one 16-byte block (10 rounds per FIPS-197)."""
    if len(block) != 16:
        raise DomainError("AES block must be exactly 16 bytes")
    rk = key.round_keys
    s = [b ^ k for b, k in zip(block, rk[0])]
    for rnd in range(1, 10):
        t = [_SBOX[s[i]] for i in _SHIFT_IDX]
        k = rk[rnd]
        for c in range(0, 16, 4):
            a0, a1, a2, a3 = t[c], t[c + 1], t[c + 2], t[c + 3]
            s[c] = _XT[a0] ^ _XT[a1] ^ a1 ^ a2 ^ a3 ^ k[c]
            s[c + 1] = a0 ^ _XT[a1] ^ _XT[a2] ^ a2 ^ a3 ^ k[c + 1]
            s[c + 2] = a0 ^ a1 ^ _XT[a2] ^ _XT[a3] ^ a3 ^ k[c + 2]
            s[c + 3] = _XT[a0] ^ a0 ^ a1 ^ a2 ^ _XT[a3] ^ k[c + 3]
    k = rk[10]
    return bytes(_SBOX[s[i]] ^ k[j] for j, i in enumerate(_SHIFT_IDX))


def aes_decrypt_block(key: AesKey128, block: bytes) -> bytes:
    """Exact inverse of aes_encrypt_block."""
    if len(block) != 16:
        raise DomainError("AES block must be exactly 16 bytes")
    rk = key.round_keys
    k = rk[10]
    s = [_INV_SBOX[block[i] ^ k[i]] for i in range(16)]
    s = [s[i] for i in _INV_SHIFT_IDX]
    for rnd in range(9, 0, -1):
        k = rk[rnd]
        s = [b ^ k[i] for i, b in enumerate(s)]
        t = s
        s = [0] * 16
        for c in range(0, 16, 4):
            a0, a1, a2, a3 = t[c], t[c + 1], t[c + 2], t[c + 3]
            s[c] = _MUL14[a0] ^ _MUL11[a1] ^ _MUL13[a2] ^ _MUL9[a3]
            s[c + 1] = _MUL9[a0] ^ _MUL14[a1] ^ _MUL11[a2] ^ _MUL13[a3]
            s[c + 2] = _MUL13[a0] ^ _MUL9[a1] ^ _MUL14[a2] ^ _MUL11[a3]
            s[c + 3] = _MUL11[a0] ^ _MUL13[a1] ^ _MUL9[a2] ^ _MUL14[a3]
        s = [_INV_SBOX[s[i]] for i in _INV_SHIFT_IDX]
    k = rk[0]
    return bytes(b ^ k[i] for i, b in enumerate(s))


# ---------------------------------------------------------------------------
# DES

_IP = (
    58, 50, 42, 34, 26, 18, 10, 2, 60, 52, 44, 36, 28, 20, 12, 4,
    62, 54, 46, 38, 30, 22, 14, 6, 64, 56, 48, 40, 32, 24, 16, 8,
    57, 49, 41, 33, 25, 17, 9, 1, 59, 51, 43, 35, 27, 19, 11, 3,
    61, 53, 45, 37, 29, 21, 13, 5, 63, 55, 47, 39, 31, 23, 15, 7,
)
_FP = (
    40, 8, 48, 16, 56, 24, 64, 32, 39, 7, 47, 15, 55, 23, 63, 31,
    38, 6, 46, 14, 54, 22, 62, 30, 37, 5, 45, 13, 53, 21, 61, 29,
    36, 4, 44, 12, 52, 20, 60, 28, 35, 3, 43, 11, 51, 19, 59, 27,
    34, 2, 42, 10, 50, 18, 58, 26, 33, 1, 41, 9, 49, 17, 57, 25,
)
_E = (
    32, 1, 2, 3, 4, 5, 4, 5, 6, 7, 8, 9,
    8, 9, 10, 11, 12, 13, 12, 13, 14, 15, 16, 17,
    16, 17, 18, 19, 20, 21, 20, 21, 22, 23, 24, 25,
    24, 25, 26, 27, 28, 29, 28, 29, 30, 31, 32, 1,
)
_P = (
    16, 7, 20, 21, 29, 12, 28, 17, 1, 15, 23, 26, 5, 18, 31, 10,
    2, 8, 24, 14, 32, 27, 3, 9, 19, 13, 30, 6, 22, 11, 4, 25,
)
_PC1 = (
    57, 49, 41, 33, 25, 17, 9, 1, 58, 50, 42, 34, 26, 18,
    10, 2, 59, 51, 43, 35, 27, 19, 11, 3, 60, 52, 44, 36,
    63, 55, 47, 39, 31, 23, 15, 7, 62, 54, 46, 38, 30, 22,
    14, 6, 61, 53, 45, 37, 29, 21, 13, 5, 28, 20, 12, 4,
)
_PC2 = (
    14, 17, 11, 24, 1, 5, 3, 28, 15, 6, 21, 10,
    23, 19, 12, 4, 26, 8, 16, 7, 27, 20, 13, 2,
    41, 52, 31, 37, 47, 55, 30, 40, 51, 45, 33, 48,
    44, 49, 39, 56, 34, 53, 46, 42, 50, 36, 29, 32,
)
_SHIFTS = (1, 1, 2, 2, 2, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 1)

_SBOXES = (
    (
        14, 4, 13, 1, 2, 15, 11, 8, 3, 10, 6, 12, 5, 9, 0, 7,
        0, 15, 7, 4, 14, 2, 13, 1, 10, 6, 12, 11, 9, 5, 3, 8,
        4, 1, 14, 8, 13, 6, 2, 11, 15, 12, 9, 7, 3, 10, 5, 0,
        15, 12, 8, 2, 4, 9, 1, 7, 5, 11, 3, 14, 10, 0, 6, 13,
    ),
    (
        15, 1, 8, 14, 6, 11, 3, 4, 9, 7, 2, 13, 12, 0, 5, 10,
        3, 13, 4, 7, 15, 2, 8, 14, 12, 0, 1, 10, 6, 9, 11, 5,
        0, 14, 7, 11, 10, 4, 13, 1, 5, 8, 12, 6, 9, 3, 2, 15,
        13, 8, 10, 1, 3, 15, 4, 2, 11, 6, 7, 12, 0, 5, 14, 9,
    ),
    (
        10, 0, 9, 14, 6, 3, 15, 5, 1, 13, 12, 7, 11, 4, 2, 8,
        13, 7, 0, 9, 3, 4, 6, 10, 2, 8, 5, 14, 12, 11, 15, 1,
        13, 6, 4, 9, 8, 15, 3, 0, 11, 1, 2, 12, 5, 10, 14, 7,
        1, 10, 13, 0, 6, 9, 8, 7, 4, 15, 14, 3, 11, 5, 2, 12,
    ),
    (
        7, 13, 14, 3, 0, 6, 9, 10, 1, 2, 8, 5, 11, 12, 4, 15,
        13, 8, 11, 5, 6, 15, 0, 3, 4, 7, 2, 12, 1, 10, 14, 9,
        10, 6, 9, 0, 12, 11, 7, 13, 15, 1, 3, 14, 5, 2, 8, 4,
        3, 15, 0, 6, 10, 1, 13, 8, 9, 4, 5, 11, 12, 7, 2, 14,
    ),
    (
        2, 12, 4, 1, 7, 10, 11, 6, 8, 5, 3, 15, 13, 0, 14, 9,
        14, 11, 2, 12, 4, 7, 13, 1, 5, 0, 15, 10, 3, 9, 8, 6,
        4, 2, 1, 11, 10, 13, 7, 8, 15, 9, 12, 5, 6, 3, 0, 14,
        11, 8, 12, 7, 1, 14, 2, 13, 6, 15, 0, 9, 10, 4, 5, 3,
    ),
    (
        12, 1, 10, 15, 9, 2, 6, 8, 0, 13, 3, 4, 14, 7, 5, 11,
        10, 15, 4, 2, 7, 12, 9, 5, 6, 1, 13, 14, 0, 11, 3, 8,
        9, 14, 15, 5, 2, 8, 12, 3, 7, 0, 4, 10, 1, 13, 11, 6,
        4, 3, 2, 12, 9, 5, 15, 10, 11, 14, 1, 7, 6, 0, 8, 13,
    ),
    (
        4, 11, 2, 14, 15, 0, 8, 13, 3, 12, 9, 7, 5, 10, 6, 1,
        13, 0, 11, 7, 4, 9, 1, 10, 14, 3, 5, 12, 2, 15, 8, 6,
        1, 4, 11, 13, 12, 3, 7, 14, 10, 15, 6, 8, 0, 5, 9, 2,
        6, 11, 13, 8, 1, 4, 10, 7, 9, 5, 0, 15, 14, 2, 3, 12,
    ),
    (
        13, 2, 8, 4, 6, 15, 11, 1, 10, 9, 3, 14, 5, 0, 12, 7,
        1, 15, 13, 8, 10, 3, 7, 4, 12, 5, 6, 11, 0, 14, 9, 2,
        7, 11, 4, 1, 9, 12, 14, 2, 0, 6, 10, 13, 15, 3, 5, 8,
        2, 1, 14, 7, 4, 10, 8, 13, 15, 12, 9, 0, 3, 5, 6, 11,
    ),
)


def _permute(value: int, width: int, table: tuple[int, ...]) -> int:
    out = 0
    for pos in table:
        out = (out << 1) | ((value >> (width - pos)) & 1)
    return out


def _compile_permutation(table: tuple[int, ...], in_width: int):
    """Per-input-byte lookup tables so a permutation becomes a few ORs."""
    n_bytes = in_width // 8
    out_len = len(table)
    compiled = []
    for byte_index in range(n_bytes):
        entries = [0] * 256
        for val in range(256):
            acc = 0
            for out_pos, src in enumerate(table):
                src_byte, src_bit = divmod(src - 1, 8)
                if src_byte == byte_index and (val >> (7 - src_bit)) & 1:
                    acc |= 1 << (out_len - 1 - out_pos)
            entries[val] = acc
        compiled.append(tuple(entries))
    return tuple(compiled)


_IP_TAB = _compile_permutation(_IP, 64)
_FP_TAB = _compile_permutation(_FP, 64)
_E_TAB = _compile_permutation(_E, 32)

# S-box output routed straight through P: one lookup per 6-bit group
_SP = tuple(
    tuple(
        _permute(
            _SBOXES[i][(((six >> 5 & 1) << 1 | (six & 1)) << 4) | (six >> 1 & 0xF)]
            << (28 - 4 * i),
            32,
            _P,
        )
        for six in range(64)
    )
    for i in range(8)
)


def _apply_compiled(value: int, n_bytes: int, tables) -> int:
    out = 0
    for i in range(n_bytes):
        out |= tables[i][(value >> (8 * (n_bytes - 1 - i))) & 0xFF]
    return out


def _des_subkeys(key64: int) -> tuple[int, ...]:
    cd = _permute(key64, 64, _PC1)
    c = cd >> 28
    d = cd & 0xFFFFFFF
    keys = []
    for shift in _SHIFTS:
        c = ((c << shift) | (c >> (28 - shift))) & 0xFFFFFFF
        d = ((d << shift) | (d >> (28 - shift))) & 0xFFFFFFF
        keys.append(_permute((c << 28) | d, 56, _PC2))
    return tuple(keys)


class DesKey:
    """DES key (64-bit input, 56 effective bits; parity bits ignored)."""

    block_size = 8

    def __init__(self, key_bytes: bytes):
        if len(key_bytes) != 8:
            raise DomainError("DES key must be exactly 8 bytes")
        self.key_bytes = bytes(key_bytes)
        self.subkeys = _des_subkeys(int.from_bytes(self.key_bytes, "big"))

    def encrypt_block(self, block: bytes) -> bytes:
        return des_encrypt_block(self, block)

    def decrypt_block(self, block: bytes) -> bytes:
        return des_decrypt_block(self, block)


def _feistel(r: int, k48: int) -> int:
    x = _apply_compiled(r, 4, _E_TAB) ^ k48
    return (
        _SP[0][x >> 42 & 0x3F]
        | _SP[1][x >> 36 & 0x3F]
        | _SP[2][x >> 30 & 0x3F]
        | _SP[3][x >> 24 & 0x3F]
        | _SP[4][x >> 18 & 0x3F]
        | _SP[5][x >> 12 & 0x3F]
        | _SP[6][x >> 6 & 0x3F]
        | _SP[7][x & 0x3F]
    )


def _des_block(key: DesKey, block: bytes, subkeys) -> bytes:
    if len(block) != 8:
        raise DomainError("DES block must be exactly 8 bytes")
    v = _apply_compiled(int.from_bytes(block, "big"), 8, _IP_TAB)
    left = v >> 32
    right = v & 0xFFFFFFFF
    for k in subkeys:
        left, right = right, left ^ _feistel(right, k)
    out = _apply_compiled((right << 32) | left, 8, _FP_TAB)
    return out.to_bytes(8, "big")


def des_encrypt_block(key: DesKey, block: bytes) -> bytes:
    """Encrypt one 8-byte block (16 Feistel rounds per FIPS-46-3)."""
    return _des_block(key, block, key.subkeys)


def des_decrypt_block(key: DesKey, block: bytes) -> bytes:
    """Decrypt one 8-byte block (subkeys applied in reverse)."""
    return _des_block(key, block, key.subkeys[::-1])


# ---------------------------------------------------------------------------
# CBC mode with PKCS#7


@dataclass(frozen=True)
class CbcCiphertext:
    """IV plus ciphertext body; the body is always at least one block."""

    iv: bytes
    body: bytes


def pkcs7_pad(data: bytes, block_size: int) -> bytes:
    """Append k bytes of value k; always pads (full block when aligned)."""
    k = block_size - len(data) % block_size
    return data + bytes([k]) * k


def pkcs7_unpad(data: bytes, block_size: int) -> bytes:
    """Strip and validate a PKCS#7 tail."""
    if not data or len(data) % block_size != 0:
        raise PaddingError("padded data must be a positive multiple of the block size")
    k = data[-1]
    if k == 0 or k > block_size or data[-k:] != bytes([k]) * k:
        raise PaddingError("invalid PKCS#7 padding")
    return data[:-k]


def cbc_encrypt(key, iv: bytes, plaintext: bytes) -> CbcCiphertext:
    """PKCS#7-pad then chain-encrypt: C_i = E(P_i xor C_{i-1}), C_0 = iv."""
    bs = key.block_size
    if len(iv) != bs:
        raise DomainError(f"IV must be exactly {bs} bytes")
    padded = pkcs7_pad(plaintext, bs)
    out = bytearray()
    prev = iv
    for i in range(0, len(padded), bs):
        block = bytes(a ^ b for a, b in zip(padded[i : i + bs], prev))
        prev = key.encrypt_block(block)
        out += prev
    return CbcCiphertext(iv=bytes(iv), body=bytes(out))


def cbc_decrypt(key, ct: CbcCiphertext) -> bytes:
    """Inverse chaining then PKCS#7 unpad."""
    bs = key.block_size
    if len(ct.iv) != bs:
        raise DomainError(f"IV must be exactly {bs} bytes")
    if not ct.body or len(ct.body) % bs != 0:
        raise DomainError("ciphertext body must be a positive multiple of the block size")
    out = bytearray()
    prev = ct.iv
    for i in range(0, len(ct.body), bs):
        block = ct.body[i : i + bs]
        plain = key.decrypt_block(block)
        out += bytes(a ^ b for a, b in zip(plain, prev))
        prev = block
    return pkcs7_unpad(bytes(out), bs)
