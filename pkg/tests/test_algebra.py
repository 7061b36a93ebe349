"""
Tests for the algebra package: primes, convolution, fields, polynomials
and irreducibility.
"""

from fractions import Fraction

import numpy as np
import pytest
import sympy
from numpy.testing import assert_array_equal

from src.processing_layer.algebra.convolution import NTT_PRIMES, exact_convolve, ntt, select_primes
from src.processing_layer.algebra.fields import ExtensionField, PrimeField
from src.processing_layer.algebra.irreducible import check_irreducible, find_irreducible
from src.processing_layer.algebra.polynomials import DensePolynomial, interpolate, multipoint_eval
from src.processing_layer.algebra.primes import is_prime, next_prime, primes_first
from src.processing_layer.algebra.rational import (
    dot,
    format_rational_vector,
    mat_vec,
    parse_rational,
    parse_rational_vector,
    transpose_mat_vec,
)
from src.processing_layer.errors import (
    ConvolutionOverflowError,
    MessageFormatError,
    ParameterError,
)
from src.processing_layer.proof_core.protocol_enums import Role
from src.processing_layer.proof_core.randomness import RandomStream


def values(poly):
    return [c.value for c in poly.coeffs]


class TestPrimes:
    def test_first_primes(self):
        assert primes_first(5) == [2, 3, 5, 7, 11]
        assert primes_first(1) == [2]
        assert primes_first(25)[-1] == 97

    def test_first_primes_match_sympy(self):
        assert primes_first(500) == list(sympy.primerange(2, sympy.prime(500) + 1))

    def test_zero_primes_rejected(self):
        with pytest.raises(ParameterError):
            primes_first(0)

    @pytest.mark.parametrize("n, expected", [(2, True), (1, False), (0, False), (341, False), (97, True)])
    def test_is_prime_examples(self, n, expected):
        assert is_prime(n) is expected

    def test_is_prime_matches_sympy(self):
        for n in range(2000):
            assert is_prime(n) == sympy.isprime(n)
        for n in (2**61 - 1, 2**61 + 1, 3215031751, 2**64 + 13):
            assert is_prime(n) == sympy.isprime(n)

    def test_next_prime_is_strict(self):
        assert next_prime(7) == 11
        assert next_prime(1) == 2
        assert next_prime(32) == 37


class TestRational:
    def test_parse_and_format(self):
        assert parse_rational("3") == 3
        assert parse_rational("-6/4") == Fraction(-3, 2)
        assert format_rational_vector([Fraction(257, 256), 0, Fraction(-1, 3)]) == "257/256 0 -1/3"

    @pytest.mark.parametrize("token", ["1.5", "1/0", "x", "1/-2", ""])
    def test_bad_tokens(self, token):
        with pytest.raises(MessageFormatError):
            parse_rational(token)

    def test_vector_length_checked(self):
        with pytest.raises(MessageFormatError):
            parse_rational_vector("1 2", 3)

    def test_products(self):
        A = [[1, 2], [3, 4]]
        assert mat_vec(A, [1, Fraction(1, 2)]) == [2, 5]
        assert transpose_mat_vec(A, [1, 1]) == [4, 6]
        assert dot([Fraction(1, 2), 2], [2, 3]) == 7
        with pytest.raises(ValueError):
            mat_vec(A, [1])


class TestConvolution:
    @pytest.mark.parametrize(
        "u, v, expected",
        [([1, 0, 1], [1, 1], [1, 1, 1, 1]), ([1], [1], [1]), ([2, 3], [4, 5], [8, 22, 15])],
    )
    def test_examples(self, u, v, expected):
        assert [int(x) for x in exact_convolve(u, v)] == expected

    def test_matches_numpy(self):
        rng = np.random.default_rng(3)
        for size in (1, 7, 64, 300):
            u = rng.integers(0, 1000, size=size)
            v = rng.integers(0, 1000, size=size + 5)
            assert_array_equal(np.asarray(exact_convolve(u, v), dtype=np.int64), np.convolve(u, v))

    def test_large_coefficients_recombined(self):
        u = [10**9] * 40
        v = [10**9] * 40
        result = exact_convolve(u, v)
        assert int(result[39]) == 40 * 10**18
        assert int(result[0]) == 10**18

    def test_ntt_round_trip(self):
        prime, root, _ = NTT_PRIMES[0]
        data = np.arange(16, dtype=np.int64)
        back = ntt(ntt(data, prime, root), prime, root, invert=True)
        assert_array_equal(back, data)

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            exact_convolve([], [1])
        with pytest.raises(ValueError):
            exact_convolve([-1], [1])

    def test_overflow(self):
        product = NTT_PRIMES[0][0] * NTT_PRIMES[1][0] * NTT_PRIMES[2][0]
        with pytest.raises(ConvolutionOverflowError):
            select_primes(product, 8)


class TestFields:
    def test_prime_field_arithmetic(self):
        F = PrimeField(7)
        assert (F(3) + F(5)).value == 1
        assert (F(3) * F(5)).value == 1
        assert (F(3) / F(5)).value == 2
        assert (F(3).inverse() * F(3)) == F.one()
        with pytest.raises(ZeroDivisionError):
            F.zero().inverse()

    def test_prime_field_needs_prime(self):
        with pytest.raises(ParameterError):
            PrimeField(9)

    def test_extension_field(self):
        F9 = ExtensionField(3, (1, 0, 1))
        i = F9.element([0, 1])
        assert (i * i).coeffs == (2, 0)
        assert F9.order == 9
        for a in range(3):
            for b in range(3):
                if a or b:
                    x = F9.element([a, b])
                    assert x * x.inverse() == F9.one()

    def test_extension_decode_and_subfield(self):
        F = ExtensionField(5, (2, 0, 1))
        assert F.decode("3 0").prime_subfield_value() == 3
        assert F.decode("3 1").prime_subfield_value() is None
        with pytest.raises(ValueError):
            F.decode("5 0")

    def test_extension_rejects_reducible(self):
        with pytest.raises(ParameterError):
            ExtensionField(5, (1, 0, 1))
        with pytest.raises(ParameterError):
            ExtensionField(5, (1, 0, 2))


class TestPolynomials:
    def test_interpolate_line(self):
        F = PrimeField(5)
        assert values(interpolate([(0, 1), (1, 2)], F)) == [1, 1]

    def test_interpolate_constant(self):
        F = PrimeField(5)
        assert values(interpolate([(0, 3)], F)) == [3]

    def test_interpolate_quadratic(self):
        # (0,1), (1,2), (2,0) determine x^2 + 1 over F_5
        F = PrimeField(5)
        poly = interpolate([(0, 1), (1, 2), (2, 0)], F)
        assert values(poly) == [1, 0, 1]
        assert [poly.evaluate(F(x)).value for x in range(3)] == [1, 2, 0]

    def test_interpolate_errors(self):
        F = PrimeField(5)
        with pytest.raises(ParameterError):
            interpolate([], F)
        with pytest.raises(ParameterError):
            interpolate([(1, 1), (1, 2)], F)

    def test_multipoint_examples(self):
        F = PrimeField(5)
        poly = DensePolynomial.from_ints(F, [1, 0, 1])
        assert [v.value for v in multipoint_eval(poly, [F(0), F(1), F(2)])] == [1, 2, 0]
        zero = DensePolynomial.zero(F)
        assert all(v.is_zero() for v in multipoint_eval(zero, [F(1), F(3)]))

    def test_multipoint_matches_horner(self):
        F = PrimeField(97)
        rand = RandomStream(11, Role.PROVER)
        for degree, count in ((7, 8), (60, 100)):
            poly = DensePolynomial.from_ints(F, [rand.randbelow(97) for _ in range(degree + 1)])
            nodes = [F(rand.randbelow(97)) for _ in range(count)]
            assert multipoint_eval(poly, nodes) == [poly.evaluate(x) for x in nodes]

    def test_interpolate_round_trip_large(self):
        F = PrimeField(1009)
        points = [(x, (x * x * 7 + 3) % 1009) for x in range(1, 80)]
        poly = interpolate(points, F)
        assert poly.degree == 2
        assert values(poly) == [3, 0, 7]

    def test_division(self):
        F = PrimeField(7)
        a = DensePolynomial.from_ints(F, [1, 2, 3, 4, 5])
        b = DensePolynomial.from_ints(F, [3, 0, 1])
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree

    def test_multiplication_over_extension(self):
        F9 = ExtensionField(3, (1, 0, 1))
        i = F9.element([0, 1])
        a = DensePolynomial(F9, [i, F9.one()])
        b = DensePolynomial(F9, [-i, F9.one()])
        # (x + i)(x - i) = x^2 + 1
        assert (a * b).coeffs == (F9.one(), F9.zero(), F9.one())


class TestIrreducible:
    @pytest.mark.parametrize(
        "coeffs, p, expected",
        [((1, 0, 1), 3, True), ((0, 0, 1), 3, False), ((1, 0, 1), 5, False), ((2, 0, 1), 5, True)],
    )
    def test_examples(self, coeffs, p, expected):
        assert check_irreducible(coeffs, p) is expected

    def test_matches_sympy(self):
        x = sympy.symbols("x")
        rand = RandomStream(5, Role.VERIFIER)
        for p in (2, 3, 7):
            for degree in (2, 3, 4):
                for _ in range(6):
                    coeffs = [rand.randbelow(p) for _ in range(degree)] + [1]
                    expr = sum(c * x**k for k, c in enumerate(coeffs))
                    expected = sympy.Poly(expr, x, modulus=p).is_irreducible
                    assert check_irreducible(coeffs, p) == expected

    def test_non_monic_rejected(self):
        with pytest.raises(ParameterError):
            check_irreducible((1, 2), 5)
        with pytest.raises(ParameterError):
            check_irreducible((1,), 5)

    def test_find_irreducible(self):
        rand = RandomStream(1, Role.PROVER)
        for p, degree in ((2, 1), (5, 2), (3, 2), (101, 3)):
            f = find_irreducible(p, degree, rand)
            assert len(f) == degree + 1 and f[-1] == 1
            assert check_irreducible(f, p)
