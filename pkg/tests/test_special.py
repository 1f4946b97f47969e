import itertools
import math

import pytest
from scipy.special import eval_genlaguerre

from photoncat import special
from photoncat.errors import OddOrderError

from conftest import BargmannPoly, apply_ladder_word


def brute_force_partitions(elements):
    """All set partitions of a list, by direct recursion (test oracle)."""
    if not elements:
        yield []
        return
    head, rest = elements[0], elements[1:]
    for partial in brute_force_partitions(rest):
        for i in range(len(partial)):
            yield partial[:i] + [partial[i] + [head]] + partial[i + 1 :]
        yield partial + [[head]]


class TestAssocLaguerre:
    def test_degree_zero_is_one(self):
        assert special.assoc_laguerre(0, 5, 3.7) == 1.0

    def test_degree_one(self):
        assert special.assoc_laguerre(1, 1, 0.5) == 1.5

    def test_degree_two_plain(self):
        assert special.assoc_laguerre(2, 0, 1.0) == -0.5

    def test_matches_scipy(self):
        for n in range(0, 25):
            for k in (0, 1, 3, 7):
                for x in (-9.0, -1.0, -0.04, 0.0, 0.5, 4.0, 16.0):
                    ours = special.assoc_laguerre(n, k, x)
                    ref = float(eval_genlaguerre(n, k, x))
                    assert ours == pytest.approx(ref, rel=1e-12, abs=1e-12)

    def test_recurrence_consistency(self):
        for n in range(1, 30):
            for k in range(0, 11):
                for x in (-25.0, -4.0, -0.3, 0.0, 1.7, 12.5, 25.0):
                    lhs = (n + 1) * special.assoc_laguerre(n + 1, k, x)
                    rhs = (2 * n + k + 1 - x) * special.assoc_laguerre(
                        n, k, x
                    ) - (n + k) * special.assoc_laguerre(n - 1, k, x)
                    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)

    def test_rejects_negative_arguments(self):
        with pytest.raises(ValueError):
            special.assoc_laguerre(-1, 0, 1.0)


class TestStirling2:
    def test_empty_partition_convention(self):
        assert special.stirling2(0, 0) == 1

    def test_small_value(self):
        assert special.stirling2(3, 2) == 3

    def test_above_diagonal_is_zero(self):
        assert special.stirling2(2, 5) == 0

    def test_against_partition_enumeration(self):
        # S(5, 3) = 25 by counting partitions of a 5-set into 3 blocks.
        parts = list(brute_force_partitions(list(range(5))))
        assert sum(1 for p in parts if len(p) == 3) == 25
        assert special.stirling2(5, 3) == 25

    def test_row_sums_are_bell_numbers(self):
        for r in range(0, 11):
            bell = sum(1 for _ in brute_force_partitions(list(range(r))))
            assert sum(special.stirling2(r, n) for n in range(r + 1)) == bell


class TestBinomialAndFactorials:
    def test_binomial_values(self):
        assert special.binomial(4, 2) == 6
        assert special.binomial(7, 0) == 1
        assert special.binomial(3, 5) == 0

    def test_double_factorial_values(self):
        assert special.double_factorial(5) == 15
        assert special.double_factorial(-1) == 1
        assert special.double_factorial(6) == 48
        assert special.double_factorial(0) == 1

    def test_double_factorial_rejects_below_minus_one(self):
        with pytest.raises(ValueError):
            special.double_factorial(-2)

    def test_squeezing_threshold(self):
        assert special.squeezing_threshold(2) == 0.5
        assert special.squeezing_threshold(4) == 0.75
        assert special.squeezing_threshold(6) == 1.875

    @pytest.mark.parametrize("l", [0, 1, 3, 5])
    def test_squeezing_threshold_rejects_odd_or_zero(self, l):
        with pytest.raises(OddOrderError):
            special.squeezing_threshold(l)

    def test_threshold_is_rising_half_factorial(self):
        for l in (2, 4, 6, 8, 10):
            rising = 1.0
            for i in range(l // 2):
                rising *= 0.5 + i
            assert special.squeezing_threshold(l) == pytest.approx(rising, rel=1e-15)


class TestOrderingCoeffs:
    def test_canonical_commutator(self):
        oc = special.ordering_coeffs(1, 1)
        assert oc.coeffs == ((0, 1), (1, 1))

    def test_already_normal_ordered(self):
        oc = special.ordering_coeffs(0, 3)
        assert oc.coeffs == ((0, 1),)

    def test_two_two(self):
        oc = special.ordering_coeffs(2, 2)
        assert dict(oc.coeffs) == {0: 1, 1: 4, 2: 2}

    def test_weights_positive(self):
        for p in range(5):
            for q in range(5):
                for _, w in special.ordering_coeffs(p, q).coeffs:
                    assert w > 0

    @pytest.mark.parametrize("p,q", list(itertools.product(range(5), repeat=2)))
    def test_exact_operator_identity(self, p, q):
        # a^p a+^q applied to |j> must equal the normal-ordered expansion,
        # with exact integer coefficients in the Bargmann representation.
        for j in range(13):
            left = apply_ladder_word(j, " ".join(["a"] * p + ["a+"] * q))
            right = BargmannPoly()
            for k, w in special.ordering_coeffs(p, q).coeffs:
                term = apply_ladder_word(j, " ".join(["a+"] * (q - k) + ["a"] * (p - k)))
                right = right + term.scaled(w)
            assert left == right


class TestXPowerExpansion:
    @pytest.mark.parametrize("r", range(0, 7))
    def test_exact_expansion_of_ladder_sum(self, r):
        # (a + a+)^r expanded over all 2^r words must equal the
        # pair-contraction form, exactly, on every |j>.
        for j in range(8):
            left = BargmannPoly()
            for word in itertools.product(("a", "a+"), repeat=r):
                left = left + apply_ladder_word(j, " ".join(word))
            right = BargmannPoly()
            for jj, kk, w in special.xpower_expansion(r):
                term = apply_ladder_word(j, " ".join(["a+"] * jj + ["a"] * kk))
                right = right + term.scaled(w)
            assert left == right

    def test_coherent_quadrature_moments(self):
        g = 0.7

        def moment(j, k):
            return g ** (j + k)

        assert special.quadrature_power(moment, 1) == pytest.approx(
            math.sqrt(2) * g, rel=1e-14
        )
        assert special.quadrature_power(moment, 2) == pytest.approx(
            2 * g * g + 0.5, rel=1e-14
        )
        for l in (2, 4, 6):
            assert special.quadrature_central_power(moment, l) == pytest.approx(
                special.squeezing_threshold(l), rel=1e-12
            )
