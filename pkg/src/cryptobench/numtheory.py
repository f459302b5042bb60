"""Number-theoretic primitives over Python's arbitrary-precision integers.

All functions operate on nonnegative ints; Python's native bignum is the
arbitrary-precision integer type, so values of 8192 bits and beyond work
unchanged. Every random choice in the library flows through
:class:`SplitMix64`, a tiny deterministic generator that emits the same
stream on every platform for a given seed. SplitMix64 is NOT
cryptographically secure; the library trades secure randomness for
reproducible benchmarks and key material.
"""

from __future__ import annotations

import math

from .errors import DiscreteLogNotFoundError, DomainError, NotInvertibleError

_MASK64 = (1 << 64) - 1


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return tuple(i for i, f in enumerate(flags) if f)


# Trial-division primes; conclusive for candidates below 1009**2.
_SMALL_PRIMES = _sieve(1000)
_SMALL_PRIME_LIMIT = 1009 * 1009


class SplitMix64:
    """Deterministic 64-bit stream (SplitMix64 recurrence).

    state += 0x9E3779B97F4A7C15
    z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output = z ^ (z >> 31)

    Instances are single-owner: clone() before sharing with another consumer.
    """

    __slots__ = ("seed", "_state")

    def __init__(self, seed: int):
        self.seed = seed & _MASK64
        self._state = self.seed

    def next_u64(self) -> int:
        """Next 64-bit output word."""
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_bytes(self, n: int) -> bytes:
        """First n bytes of the stream, each word serialized little-endian."""
        if n < 0:
            raise DomainError("byte count must be nonnegative")
        words = (n + 7) // 8
        buf = b"".join(self.next_u64().to_bytes(8, "little") for _ in range(words))
        return buf[:n]

    def random_bits(self, k: int) -> int:
        """Uniform integer in [0, 2**k)."""
        if k < 0:
            raise DomainError("bit count must be nonnegative")
        if k == 0:
            return 0
        acc = 0
        for shift in range(0, k, 64):
            acc |= self.next_u64() << shift
        return acc & ((1 << k) - 1)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection sampling."""
        if n <= 0:
            raise DomainError("range must be positive")
        k = n.bit_length()
        while True:
            v = self.random_bits(k)
            if v < n:
                return v

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive."""
        if hi < lo:
            raise DomainError("empty interval")
        return lo + self.randrange(hi - lo + 1)

    def clone(self) -> "SplitMix64":
        """Copy with identical internal state."""
        other = SplitMix64(self.seed)
        other._state = self._state
        return other


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """base**exponent mod modulus without materializing base**exponent.

    Rides on CPython's built-in three-argument pow, which performs
    square-and-multiply in O(len(exponent)) squarings.
    """
    if modulus < 1:
        raise DomainError("modulus must be >= 1")
    if base < 0 or exponent < 0:
        raise DomainError("base and exponent must be nonnegative")
    return pow(base, exponent, modulus)


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(0, 0) = 0 by convention."""
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    """Least common multiple of two positive integers."""
    if a <= 0 or b <= 0:
        raise DomainError("lcm requires positive arguments")
    return a * b // math.gcd(a, b)


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def mod_inverse(a: int, modulus: int) -> int:
    """x with a*x = 1 (mod modulus), 0 < x < modulus, via extended Euclid."""
    if modulus <= 1:
        raise DomainError("modulus must be > 1")
    g, x, _ = _extended_gcd(a % modulus, modulus)
    if g != 1:
        raise NotInvertibleError(a, modulus, g)
    return x % modulus


def is_probable_prime(n: int, rounds: int = 40) -> bool:
    """Miller-Rabin with `rounds` random bases after trial division.

    False means certainly composite; True means prime with error
    probability at most 4**-rounds. The bases are drawn from a SplitMix64
    stream seeded from n itself, so the verdict is reproducible across
    runs and platforms.
    """
    if rounds < 1:
        raise DomainError("rounds must be >= 1")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < _SMALL_PRIME_LIMIT:
        return True

    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1

    rng = SplitMix64((n ^ (n >> 64)) & _MASK64)
    for _ in range(rounds):
        a = 2 + rng.randrange(n - 3)
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _survives_trial_division(n: int) -> bool:
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    return True


def _looks_prime(n: int) -> bool:
    """Cheap screen: trial division plus two Miller-Rabin rounds."""
    if not _survives_trial_division(n):
        return False
    if n < _SMALL_PRIME_LIMIT:
        return True
    return is_probable_prime(n, 2)


def gen_prime(bits: int, rng: SplitMix64) -> int:
    """Random prime with exactly `bits` bits (top bit set), 40 MR rounds.

    Candidates are random odd `bits`-bit integers with the top bit forced;
    the search increments by 2 and redraws if it ever leaves the bit range.
    Deterministic for a given rng state.
    """
    if bits < 8:
        raise DomainError("bits must be >= 8")
    while True:
        cand = rng.random_bits(bits) | (1 << (bits - 1)) | 1
        while cand.bit_length() == bits:
            if _looks_prime(cand) and is_probable_prime(cand, 40):
                return cand
            cand += 2


def discrete_log_bsgs(base: int, target: int, modulus: int, order_bound: int) -> int:
    """Smallest m in [0, order_bound) with base**m = target (mod modulus).

    Baby-step giant-step: O(sqrt(order_bound)) multiplications plus one
    modular inversion. The base must be invertible mod modulus and its
    multiplicative order must not exceed order_bound.
    """
    if modulus < 2:
        raise DomainError("modulus must be >= 2")
    if order_bound < 1:
        raise DomainError("order bound must be >= 1")
    base %= modulus
    target %= modulus

    m = math.isqrt(order_bound - 1) + 1
    baby: dict[int, int] = {}
    value = 1
    for j in range(m):
        baby.setdefault(value, j)
        value = value * base % modulus

    factor = mod_inverse(pow(base, m, modulus), modulus)
    gamma = target
    for i in range(m + 1):
        j = baby.get(gamma)
        if j is not None:
            result = i * m + j
            if result < order_bound:
                return result
            break
        gamma = gamma * factor % modulus
    raise DiscreteLogNotFoundError(
        f"no exponent below {order_bound} maps base to target mod {modulus}"
    )
