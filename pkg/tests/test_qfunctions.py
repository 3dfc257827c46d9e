"""Power-sum arithmetic, change of basis, and the Q-function routes.

The change of basis is checked against direct polynomial expansion in
finitely many variables, and q_k against its closed-form power-sum
coefficients, so the two Q-function routes are anchored independently of
each other.
"""

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bartab.partitions import Partition, StrictPartition, centralizer_order, generate_partitions
from bartab.qfunctions import (
    DegreePolynomial,
    PowerSumPolynomial,
    min_degree,
    monomial_to_powersum,
    principal_specialization,
    q_function,
    q_lambda_inductive,
    q_pair,
    schur_expansion,
    verify_degree_bounds,
)

POOL = [la for n in range(0, 6) for la in generate_partitions(n)]
coefficients = st.fractions(min_value=-4, max_value=4, max_denominator=6)
polynomials = st.lists(st.tuples(st.sampled_from(POOL), coefficients), max_size=5).map(
    PowerSumPolynomial
)


class TestPowerSumPolynomial:
    def test_construction_merges_and_drops_zeros(self):
        f = PowerSumPolynomial([((2,), 1), ((2,), -1), ((1, 1), Fraction(1, 2))])
        assert f.support() == [Partition((1, 1))]
        assert f.coefficient((2,)) == 0
        assert f.coefficient(Partition((1, 1))) == Fraction(1, 2)

    def test_constants(self):
        assert PowerSumPolynomial.zero().is_zero()
        assert not PowerSumPolynomial.zero()
        one = PowerSumPolynomial.one()
        assert one.coefficient(Partition()) == 1
        assert str(one) == "1"
        assert str(PowerSumPolynomial.zero()) == "0"

    def test_terms_sorted_reverse_lexicographically(self):
        f = PowerSumPolynomial({(1, 1, 1): 1, (3,): 1, (2, 1): 1})
        assert [pi.parts for pi in f.support()] == [(3,), (2, 1), (1, 1, 1)]

    def test_basis_product_concatenates_indices(self):
        p21 = PowerSumPolynomial.basis((2, 1))
        p3 = PowerSumPolynomial.basis((3,))
        assert p21 * p3 == PowerSumPolynomial.basis((3, 2, 1))

    def test_scalar_multiplication(self):
        f = PowerSumPolynomial.basis((2,))
        assert (3 * f).coefficient((2,)) == 3
        assert (f * Fraction(1, 2)).coefficient((2,)) == Fraction(1, 2)
        assert (0 * f).is_zero()

    def test_str_form(self):
        f = q_lambda_inductive(StrictPartition((5, 1)))
        assert str(f) == "-4/5 p_{5,1} - 4/9 p_{3,3} + 8/9 p_{3,1,1,1} + 16/45 p_{1,1,1,1,1,1}"

    def test_equality_and_hash(self):
        f = PowerSumPolynomial({(2, 1): Fraction(1, 3)})
        g = PowerSumPolynomial([((2, 1), Fraction(2, 3)), ((2, 1), Fraction(-1, 3))])
        assert f == g
        assert hash(f) == hash(g)
        assert f != PowerSumPolynomial.zero()

    @given(polynomials, polynomials, polynomials)
    def test_ring_laws(self, f, g, h):
        assert f + g == g + f
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h

    @given(polynomials)
    def test_identities_and_negation(self, f):
        assert f + PowerSumPolynomial.zero() == f
        assert f * PowerSumPolynomial.one() == f
        assert (f - f).is_zero()
        assert -(-f) == f


class TestDegreePolynomial:
    def test_trailing_zeros_trimmed(self):
        f = DegreePolynomial([1, 0, 2, 0, 0])
        assert f.coefficients == (Fraction(1), Fraction(0), Fraction(2))
        assert f.degree() == 2

    def test_zero(self):
        z = DegreePolynomial([0, 0])
        assert z.is_zero()
        assert z.degree() == -1
        assert z.order() is None
        assert z.divisible_by(5)
        assert str(z) == "0"

    def test_order_and_divisibility(self):
        f = DegreePolynomial([0, 0, 3, 1])
        assert f.order() == 2
        assert f.divisible_by(2)
        assert not f.divisible_by(3)

    def test_arithmetic(self):
        f = DegreePolynomial([1, 1])
        g = DegreePolynomial([-1, 1])
        assert f + g == DegreePolynomial([0, 2])
        assert f * g == DegreePolynomial([-1, 0, 1])

    def test_str_form(self):
        assert str(DegreePolynomial([0, 1])) == "1 t"
        assert str(DegreePolynomial([Fraction(-3, 2)])) == "-3/2"
        assert str(DegreePolynomial([0, 0, -1, 0, 2])) == "2 t^4 - 1 t^2"


def _expand_monomial(parts: tuple[int, ...], nvars: int) -> dict[tuple[int, ...], Fraction]:
    """m_parts as an honest polynomial in nvars variables."""
    padded = parts + (0,) * (nvars - len(parts))
    return {expo: Fraction(1) for expo in set(permutations(padded))}


def _expand_powersum(f: PowerSumPolynomial, nvars: int) -> dict[tuple[int, ...], Fraction]:
    total: dict[tuple[int, ...], Fraction] = {}
    for pi, c in f.terms():
        partial = {(0,) * nvars: c}
        for r in pi.parts:
            merged: dict[tuple[int, ...], Fraction] = {}
            for expo, a in partial.items():
                for i in range(nvars):
                    key = expo[:i] + (expo[i] + r,) + expo[i + 1 :]
                    merged[key] = merged.get(key, Fraction(0)) + a
            partial = merged
        for expo, a in partial.items():
            total[expo] = total.get(expo, Fraction(0)) + a
    return {expo: a for expo, a in total.items() if a}


class TestMonomialChangeOfBasis:
    def test_small_expansions(self):
        assert str(monomial_to_powersum(Partition((2,)))) == "1 p_{2}"
        assert str(monomial_to_powersum(Partition((1, 1)))) == "-1/2 p_{2} + 1/2 p_{1,1}"
        assert str(monomial_to_powersum(Partition((2, 1)))) == "-1 p_{3} + 1 p_{2,1}"
        assert monomial_to_powersum(Partition()) == PowerSumPolynomial.one()

    def test_against_variable_expansion(self):
        # enough variables to separate every monomial of the weight
        for d in range(0, 7):
            for la in generate_partitions(d):
                image = monomial_to_powersum(la)
                assert _expand_powersum(image, d or 1) == _expand_monomial(la.parts, d or 1)

    def test_degree_bound(self):
        with pytest.raises(ValueError):
            monomial_to_powersum(Partition((15,)))
        assert monomial_to_powersum(Partition((6,)), degree_bound=6)


class TestQFunction:
    def test_edges(self):
        assert q_function(-3).is_zero()
        assert q_function(0) == PowerSumPolynomial.one()

    def test_small_values(self):
        assert str(q_function(1)) == "2 p_{1}"
        assert str(q_function(2)) == "2 p_{1,1}"
        assert str(q_function(3)) == "2/3 p_{3} + 4/3 p_{1,1,1}"

    def test_closed_form_coefficients(self):
        # coefficient of p_pi is 2**len(pi) over the centralizer order,
        # supported exactly on the all-odd classes
        for k in range(0, 11):
            f = q_function(k)
            odd = generate_partitions(k, "all-odd")
            assert f.support() == odd
            for pi in odd:
                assert f.coefficient(pi) == Fraction(2 ** len(pi), centralizer_order(pi))

    def test_degree_bound(self):
        with pytest.raises(ValueError):
            q_function(15)


class TestQPair:
    def test_reduces_to_single_row(self):
        for a in range(1, 9):
            assert q_pair(a, 0) == q_function(a)

    def test_small_pair(self):
        assert str(q_pair(2, 1)) == "-4/3 p_{3} + 4/3 p_{1,1,1}"

    def test_preconditions(self):
        with pytest.raises(ValueError):
            q_pair(2, 2)
        with pytest.raises(ValueError):
            q_pair(1, -1)
        with pytest.raises(ValueError):
            q_pair(9, 8)


class TestInductiveRoute:
    def test_edges(self):
        assert q_lambda_inductive(StrictPartition(())) == PowerSumPolynomial.one()
        for k in range(1, 9):
            assert q_lambda_inductive(StrictPartition((k,))) == q_function(k)

    def test_two_row_frozen(self):
        f = q_lambda_inductive(StrictPartition((5, 1)))
        assert len(f.support()) == 4
        assert f.coefficient((5, 1)) == Fraction(-4, 5)
        assert f.coefficient((3, 3)) == Fraction(-4, 9)
        assert f.coefficient((3, 1, 1, 1)) == Fraction(8, 9)
        assert f.coefficient((1, 1, 1, 1, 1, 1)) == Fraction(16, 45)

    def test_three_row_frozen(self):
        f = q_lambda_inductive(StrictPartition((3, 2, 1)))
        assert str(f) == "8/5 p_{5,1} - 8/9 p_{3,3} - 8/9 p_{3,1,1,1} + 8/45 p_{1,1,1,1,1,1}"

    def test_support_is_all_odd_and_homogeneous(self):
        for n in range(0, 10):
            odd = set(generate_partitions(n, "all-odd"))
            for lam in generate_partitions(n, "distinct"):
                support = q_lambda_inductive(lam).support()
                assert set(support) <= odd
                assert all(pi.weight == n for pi in support)

    def test_accepts_plain_partition(self):
        assert q_lambda_inductive(Partition((2, 1))) == q_lambda_inductive(StrictPartition((2, 1)))

    def test_degree_bound(self):
        with pytest.raises(ValueError):
            q_lambda_inductive(StrictPartition((8, 7)))
        with pytest.raises(ValueError):
            q_lambda_inductive(StrictPartition((4, 2)), degree_bound=5)


class TestCharacterRoute:
    def test_empty_shape(self):
        assert schur_expansion(StrictPartition(())) == PowerSumPolynomial.one()

    def test_agrees_with_inductive_route(self):
        for n in range(0, 11):
            for lam in generate_partitions(n, "distinct"):
                assert schur_expansion(lam) == q_lambda_inductive(lam), lam

    def test_degree_bound(self):
        with pytest.raises(ValueError):
            schur_expansion(StrictPartition((9, 6)))


class TestSpecialization:
    def test_two_row_frozen(self):
        spec = principal_specialization(q_lambda_inductive(StrictPartition((5, 1))))
        assert str(spec) == "16/45 t^6 + 8/9 t^4 - 56/45 t^2"
        assert spec.order() == 2

    def test_constants(self):
        assert principal_specialization(PowerSumPolynomial.zero()).is_zero()
        assert principal_specialization(PowerSumPolynomial.one()) == DegreePolynomial([1])

    @given(polynomials, polynomials)
    def test_ring_homomorphism(self, f, g):
        ps = principal_specialization
        assert ps(f + g) == ps(f) + ps(g)
        assert ps(f * g) == ps(f) * ps(g)


class TestMinDegree:
    def test_values(self):
        assert min_degree(PowerSumPolynomial.one()) == 0
        assert min_degree(q_function(1)) == 1
        assert min_degree(q_lambda_inductive(StrictPartition((5, 1)))) == 2

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            min_degree(PowerSumPolynomial.zero())


class TestDegreeBounds:
    def test_report_shape(self):
        report = verify_degree_bounds(6)
        assert report.n == 6
        assert [r.shape.parts for r in report.records] == [(6,), (5, 1), (4, 2), (3, 2, 1)]
        by_shape = {r.shape.parts: r for r in report.records}
        assert by_shape[(5, 1)].srank == 2
        assert by_shape[(5, 1)].min_degree == 2

    def test_holds_through_ten(self):
        for n in range(0, 11):
            report = verify_degree_bounds(n)
            assert report.corollaries_ok
            assert report.conjecture_ok
            for r in report.records:
                assert r.equality == (r.min_degree == r.srank)

    def test_empty_weight(self):
        report = verify_degree_bounds(0)
        assert report.corollaries_ok and report.conjecture_ok
        assert report.records[0].min_degree == 0
