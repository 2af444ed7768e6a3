"""The two sum families: closed constant-term route vs brute-force route."""

import pytest

from charsum.charsums import (
    InternalConsistencyError,
    sum_A,
    sum_A_bruteforce,
    sum_B,
    sum_B_bruteforce,
    verify_theorem,
)
from charsum.partition import Partition, enumerate_partitions, make_partition
from charsum.polyring import LaurentPoly, reciprocal_substitution
from charsum.characters import two_row_gen_poly


class TestSumA:
    # expected values frozen from the border-strip oracle before wiring up
    # the coefficient route
    @pytest.mark.parametrize(
        "mu0,n,expected",
        [
            ([2], 2, 2),
            ([3], 3, 2),
            ([], 1, 1),
            ([], 0, 1),
            ([2], 4, 2),
            ([], 2, 2),
        ],
    )
    def test_frozen_values(self, mu0, n, expected):
        p = make_partition(mu0)
        assert sum_A_bruteforce(p, n) == expected
        assert sum_A(p, n) == expected

    def test_catalan_prefix_for_identity_class(self):
        # all-ones class: 1, 1, 2, 5, 14, 42, 132
        got = [sum_A(Partition(), n) for n in range(7)]
        assert got == [1, 1, 2, 5, 14, 42, 132]

    def test_part_one_rejected(self):
        with pytest.raises(ValueError, match="smallest part"):
            sum_A(make_partition([2, 1]), 5)

    def test_n_below_weight_rejected(self):
        with pytest.raises(ValueError, match="below"):
            sum_A(make_partition([3]), 2)


class TestSumB:
    @pytest.mark.parametrize(
        "mu0,n,expected",
        [
            ([2], 2, 2),
            ([3, 2], 5, 4),
            ([3], 3, 3),  # hooks of 3 carry values 1, -1, 1
            ([], 2, 2),
        ],
    )
    def test_frozen_values(self, mu0, n, expected):
        p = make_partition(mu0)
        assert sum_B_bruteforce(p, n) == expected
        assert sum_B(p, n) == expected

    def test_negative_exponent_edge(self):
        # n = |mu0| makes the binomial exponent -2; the series reading must
        # still match brute force
        for mu0 in [[2], [3], [2, 2], [3, 2], [4, 3], [5, 4, 3, 2]]:
            p = make_partition(mu0)
            n = p.weight()
            assert sum_B(p, n) == sum_B_bruteforce(p, n)

    def test_part_one_rejected(self):
        with pytest.raises(ValueError, match="smallest part"):
            sum_B(make_partition([1]), 3)

    def test_n_below_weight_rejected(self):
        with pytest.raises(ValueError, match="below"):
            sum_B(make_partition([3, 2]), 4)


class TestLemmaVsDefinition:
    def test_equivalence_sweep(self):
        # moderate scale here; the acceptance suite runs the full ranges
        for w in range(7):
            for mu0 in enumerate_partitions(w, 2):
                for n in range(w, 13):
                    assert sum_A(mu0, n) == sum_A_bruteforce(mu0, n), (mu0, n)
                    assert sum_B(mu0, n) == sum_B_bruteforce(mu0, n), (mu0, n)

    def test_values_nonnegative(self):
        for w in range(6):
            for mu0 in enumerate_partitions(w, 2):
                for n in range(w, 10):
                    assert sum_A(mu0, n) >= 0
                    assert sum_B(mu0, n) >= 0


class TestDoublingIdentity:
    def test_full_square_sum_is_twice_the_half_range(self):
        # constant term of P(x) P(1/x) equals the sum of all squared
        # coefficients, which double-counts every genuine character square
        for mu0, n in [([], 5), ([2], 6), ([3], 9), ([3, 2], 8), ([2, 2], 10)]:
            p = make_partition(mu0)
            gen = two_row_gen_poly(p, n)
            ct = (LaurentPoly(gen, 0) * reciprocal_substitution(gen)).constant_term()
            assert ct == sum(c * c for c in gen.coeffs)
            assert ct == 2 * sum_A(p, n)


class TestVerifyTheorem:
    def test_smallest_identity_pair(self):
        report = verify_theorem(make_partition([3]), 3, 10)
        assert report.all_hold
        assert report.mu0_prime == make_partition([3, 2])
        assert report.rows[0] == (3, 2, 4)

    def test_larger_instance(self):
        report = verify_theorem(make_partition([5, 4, 3, 2]), 14, 20)
        assert report.all_hold
        assert report.mu0_prime == make_partition([8, 5, 3])

    def test_rejects_non_theorem_form_naming_reason(self):
        with pytest.raises(ValueError, match="duplicate even part"):
            verify_theorem(make_partition([2, 2]), 4, 10)

    def test_rejects_bad_range(self):
        with pytest.raises(ValueError):
            verify_theorem(make_partition([3]), 2, 10)
        with pytest.raises(ValueError):
            verify_theorem(make_partition([3]), 10, 3)

    def test_json_shape(self):
        d = verify_theorem(make_partition([3]), 3, 4).to_json_dict()
        assert d == {
            "mu0": "3",
            "mu0_prime": "3,2",
            "rows": [
                {"n": 3, "A": "2", "B": "4", "holds": True},
                {"n": 4, "A": "2", "B": "4", "holds": True},
            ],
            "all_hold": True,
        }
        assert all(isinstance(r["A"], str) for r in d["rows"])


class TestInternalConsistency:
    def test_error_type_is_distinct(self):
        assert issubclass(InternalConsistencyError, RuntimeError)
        assert not issubclass(InternalConsistencyError, ValueError)


def one_plus_x_pow(e):
    from charsum.polyring import IntPoly, binomial_coeff

    return IntPoly([binomial_coeff(e, k) for k in range(e + 1)])


def squared_run(lo, t):
    """prod_{j=lo}^{t-1} (1 + x^(2^j))^2."""
    from charsum.polyring import IntPoly, ONE

    out = ONE
    for j in range(lo, t):
        f = IntPoly([1] + [0] * (2**j - 1) + [1])
        out = out * f * f
    return out


class TestProofStepIdentities:
    def test_factor_transfer(self):
        # (1+x)^(2E) * prod_{j>=1}^2 equals (1+x)^(2(E-1)) * prod_{j>=0}^2:
        # the squared j=0 factor is exactly the transferred (1+x)^2
        for t in range(1, 7):
            for e in (1, 3, 8, 40):
                lhs = one_plus_x_pow(2 * e) * squared_run(1, t)
                rhs = one_plus_x_pow(2 * (e - 1)) * squared_run(0, t)
                assert lhs == rhs, (t, e)

    def test_euler_substitution_preserves_two_row_value(self):
        from charsum.polyring import IntPoly, ONE_MINUS_X

        cases = [(1, (3,)), (2, (3,)), (3, (5, 3)), (4, ()), (5, ())]
        for t, odds in cases:
            run = [2**j for j in range(1, t)]
            mu0 = make_partition(list(odds) + run)
            w = mu0.weight()
            n_min = max(w, 2**t - 1 + sum(odds))
            for n in range(n_min, min(n_min + 3, 41)):
                direct = ONE_MINUS_X * ONE_MINUS_X * one_plus_x_pow(2 * (n - w))
                for a in mu0.parts:
                    f = IntPoly([1] + [0] * (a - 1) + [1])
                    direct = direct * f * f
                telescoped = IntPoly([1] + [0] * (2**t - 1) + [-1])
                telescoped = telescoped * telescoped
                telescoped = telescoped * one_plus_x_pow(2 * (n - sum(odds) - 1 - sum(run)))
                for a in odds:
                    f = IntPoly([1] + [0] * (a - 1) + [1])
                    telescoped = telescoped * f * f
                assert direct == telescoped, (t, odds, n)
                assert sum_A(mu0, n) == -direct.coeff(n + 1) // 2
