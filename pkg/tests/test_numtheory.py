import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ascii_rsa.errors import NotInvertible, ZeroModulus
from ascii_rsa.numtheory import (
    RandomSource,
    gcd,
    is_probable_prime,
    mod_inverse,
    mod_pow,
    random_prime,
)
from support import is_prime_by_trial_division, naive_mod_pow, prime_flags_below


class TestModPow:
    def test_zero_base(self):
        assert mod_pow(0, 5, 99) == 0

    def test_power_of_two(self):
        assert mod_pow(2, 10, 1000) == 24

    def test_small_rsa_exponentiation(self):
        # frozen from the repeated-multiplication oracle below
        assert naive_mod_pow(65, 17, 3233) == 2790
        assert mod_pow(65, 17, 3233) == 2790

    def test_modulus_one(self):
        assert mod_pow(7, 3, 1) == 0

    def test_zero_exponent(self):
        assert mod_pow(123, 0, 17) == 1

    def test_zero_modulus_rejected(self):
        with pytest.raises(ZeroModulus):
            mod_pow(2, 3, 0)

    def test_matches_repeated_multiplication_oracle(self):
        # every base, exp < 50 against every modulus in [2, 97]
        for modulus in range(2, 98):
            for base in range(50):
                acc = 1 % modulus
                for exponent in range(50):
                    assert mod_pow(base, exponent, modulus) == acc
                    acc = (acc * base) % modulus

    @given(
        st.integers(0, 10**30),
        st.integers(0, 10**6),
        st.integers(1, 10**30),
    )
    def test_matches_builtin_pow(self, base, exponent, modulus):
        assert mod_pow(base, exponent, modulus) == pow(base, exponent, modulus)

    @given(
        st.integers(0, 10**9),
        st.integers(0, 500),
        st.integers(0, 500),
        st.integers(2, 10**9),
    )
    def test_exponent_additivity(self, a, e1, e2, m):
        combined = mod_pow(a, e1 + e2, m)
        split = (mod_pow(a, e1, m) * mod_pow(a, e2, m)) % m
        assert combined == split


class TestGcd:
    def test_common_factor(self):
        assert gcd(12, 18) == 6

    def test_zero_right(self):
        assert gcd(7, 0) == 7

    @given(st.integers(0, 10**9))
    def test_unit_left(self, x):
        assert gcd(1, x) == 1

    @given(st.integers(0, 10**15), st.integers(0, 10**15))
    def test_matches_stdlib(self, a, b):
        assert gcd(a, b) == math.gcd(a, b)


class TestModInverse:
    def test_identity(self):
        assert mod_inverse(1, 97) == 1

    def test_brute_force_oracle(self):
        expected = next(x for x in range(1, 3120) if 17 * x % 3120 == 1)
        assert expected == 2753
        assert mod_inverse(17, 3120) == 2753

    def test_golden_private_exponent(self, golden):
        assert mod_inverse(golden.e, golden.phi) == golden.d

    def test_not_invertible(self):
        with pytest.raises(NotInvertible):
            mod_inverse(6, 9)

    def test_zero_not_invertible(self):
        with pytest.raises(NotInvertible):
            mod_inverse(0, 7)

    def test_small_modulus_rejected(self):
        with pytest.raises(ValueError):
            mod_inverse(3, 1)

    @given(st.integers(1, 10**12), st.integers(2, 10**12))
    def test_inverse_property(self, a, m):
        assume(math.gcd(a, m) == 1)
        inverse = mod_inverse(a, m)
        assert 1 <= inverse < m
        assert a * inverse % m == 1


class TestIsProbablePrime:
    def test_tiny_values(self):
        assert is_probable_prime(2)
        assert is_probable_prime(3)
        assert not is_probable_prime(0)
        assert not is_probable_prime(1)
        assert not is_probable_prime(4)

    def test_even_composites(self):
        rng = RandomSource(1)
        for n in (6, 100, 2**64):
            assert not is_probable_prime(n, rng=rng)

    @pytest.mark.parametrize("n", [341, 561, 1105, 1729, 2821])
    def test_pseudoprime_traps(self, n):
        # Fermat pseudoprimes and Carmichael numbers must still be rejected
        assert is_prime_by_trial_division(n) is False
        assert not is_probable_prime(n, rounds=20, rng=RandomSource(7))

    def test_agrees_with_trial_division_on_small_range(self):
        rng = RandomSource(5)
        for n in range(2000):
            assert is_probable_prime(n, rounds=20, rng=rng) == is_prime_by_trial_division(n)

    def test_rounds_must_be_positive(self):
        with pytest.raises(ValueError):
            is_probable_prime(97, rounds=0)

    def test_sieve_helper_sanity(self):
        flags = prime_flags_below(100)
        primes = [i for i in range(100) if flags[i]]
        assert primes[:10] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert len(primes) == 25


class TestRandomPrime:
    def test_two_bits_forces_three(self):
        for seed in range(10):
            assert random_prime(2, rng=RandomSource(seed)) == 3

    @pytest.mark.parametrize("bits", [8, 16, 33, 64, 129])
    def test_exact_bit_length(self, bits):
        for seed in range(5):
            p = random_prime(bits, rounds=10, rng=RandomSource(seed))
            assert p.bit_length() == bits
            assert p % 2 == 1

    def test_sixteen_bit_primes_verified_by_trial_division(self):
        for seed in range(10):
            p = random_prime(16, rng=RandomSource(seed))
            assert is_prime_by_trial_division(p)

    def test_deterministic_under_seed(self):
        assert random_prime(48, rng=RandomSource(99)) == random_prime(48, rng=RandomSource(99))

    def test_passes_independent_primality_check(self):
        p = random_prime(96, rng=RandomSource(3))
        assert is_probable_prime(p, rounds=20, rng=RandomSource(4))

    def test_too_few_bits_rejected(self):
        with pytest.raises(ValueError):
            random_prime(1)


class TestRandomSource:
    def test_seeded_is_deterministic(self):
        a, b = RandomSource(123), RandomSource(123)
        assert [a.next_bits(40) for _ in range(5)] == [b.next_bits(40) for _ in range(5)]

    def test_zero_bits(self):
        assert RandomSource(1).next_bits(0) == 0

    def test_range(self):
        rng = RandomSource(8)
        assert all(0 <= rng.next_bits(9) < 512 for _ in range(200))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            RandomSource(1).next_bits(-1)
