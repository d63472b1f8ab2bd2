"""Shared test helpers: scripted randomness and independent brute-force oracles.

The oracles here deliberately avoid the library's own code paths (and the
fast stdlib equivalents the library could have used), so every comparison
is a genuine two-route check.
"""

from ascii_rsa.numtheory import RandomSource


class ScriptedSource(RandomSource):
    """Plays back a fixed queue of values, ignoring the requested bit width."""

    def __init__(self, values):
        self._queue = list(values)

    def next_bits(self, k):
        if not self._queue:
            raise AssertionError("scripted randomness exhausted")
        return self._queue.pop(0)


def naive_mod_pow(base, exponent, modulus):
    # one multiplication per exponent step; fine for exponents in the hundreds
    result = 1 % modulus
    for _ in range(exponent):
        result = (result * base) % modulus
    return result


def positional_bytes_to_int(b):
    total = 0
    width = len(b)
    for i, value in enumerate(b):
        total += value * 256 ** (width - 1 - i)
    return total


def is_prime_by_trial_division(n):
    if n < 2:
        return False
    factor = 2
    while factor * factor <= n:
        if n % factor == 0:
            return False
        factor += 1
    return True


def prime_flags_below(limit):
    """Sieve of Eratosthenes: flags[i] is 1 iff i is prime, for i < limit."""
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = b"\x00" * len(range(i * i, limit, i))
    return flags
