import pytest

from bninv import (
    QPolynomial,
    distribution,
    fmaj,
    identity,
    insertion_sum_check,
    inv_total,
    longest_element,
    phi,
    poincare,
    poly_eval_at_one,
    poly_mul,
    q_bracket,
    verify_equidistribution,
)
from bninv import group_order, inversion_table
from helpers import iter_group, window


def test_qpolynomial_form():
    assert QPolynomial.from_coeffs([1, 2, 0, 0]).coeffs == (1, 2)
    assert QPolynomial.from_coeffs([]).is_zero
    assert QPolynomial.from_counts({}).is_zero
    assert QPolynomial.from_counts({3: 2, 0: 1}).coeffs == (1, 0, 0, 2)
    assert QPolynomial.monomial(3).coeffs == (0, 0, 0, 1)
    with pytest.raises(ValueError, match="trailing zero"):
        QPolynomial((1, 0))
    with pytest.raises(ValueError, match="nonnegative"):
        QPolynomial((1, -2))


def test_qpolynomial_arithmetic():
    a = QPolynomial.from_coeffs([1, 1])
    assert poly_mul(a, a).coeffs == (1, 2, 1)
    assert (a * a) == poly_mul(a, a)
    assert (a + QPolynomial.monomial(1)).coeffs == (1, 2)
    assert poly_mul(a, QPolynomial(())).is_zero
    assert poly_eval_at_one(poincare(3)) == 48
    assert QPolynomial(()).degree == -1
    assert poincare(2).coefficient(3) == 2
    assert poincare(2).coefficient(99) == 0


def test_qpolynomial_str():
    assert str(QPolynomial(())) == "0"
    assert str(QPolynomial((5,))) == "5"
    assert str(QPolynomial.monomial(1)) == "q"
    assert str(QPolynomial.monomial(4)) == "q^4"
    assert str(poincare(2)) == "1 + 2q + 2q^2 + 2q^3 + q^4"


def test_q_bracket():
    assert q_bracket(1).coeffs == (1,)
    assert q_bracket(4).coeffs == (1, 1, 1, 1)
    with pytest.raises(ValueError):
        q_bracket(0)


def test_poincare_shape():
    assert poincare(1).coeffs == (1, 1)
    for n in range(1, 13):
        poly = poincare(n)
        assert poly.degree == n * n
        assert poly_eval_at_one(poly) == group_order(n)
        assert poly.coeffs == poly.coeffs[::-1]  # palindromic
    with pytest.raises(ValueError):
        poincare(0)


def test_distribution_small():
    assert distribution(1, "neg").coeffs == (1, 1)
    assert distribution(2, "inv").coeffs == (1, 2, 2, 2, 1)
    assert distribution(2, "fmaj") == poincare(2)
    assert distribution(1, "maj_b").coeffs == (2,)


def test_distribution_accepts_callable():
    assert distribution(2, inv_total) == distribution(2, "inv")


def test_distribution_unknown_statistic():
    with pytest.raises(ValueError, match="unknown statistic"):
        distribution(2, "nope")


def test_distribution_guard():
    with pytest.raises(ValueError, match="enumeration guard"):
        distribution(9, "inv")
    with pytest.raises(ValueError, match="enumeration guard"):
        distribution(5, "inv", max_n=4)
    assert distribution(5, "inv", max_n=5) == poincare(5)


def test_inv_matches_root_count_distribution():
    for n in range(1, 5):
        assert distribution(n, "inv") == distribution(n, "length_oracle")


def test_phi_fixture_rows():
    assert phi(window(3, -2, 1)) == window(2, 3, 1)
    assert phi(window(2, -3, 1)) == window(-3, 2, 1)
    assert phi(window(-1, -2, -3)) == window(-3, -2, -1)
    assert phi(identity(4)) == identity(4)


def test_phi_permutes_group_b4():
    images = {phi(w) for w in iter_group(4)}
    assert len(images) == 384


def test_phi_transport_b4():
    for w in iter_group(4):
        assert fmaj(phi(w)) == inv_total(w)


def test_insertion_sum_identity():
    assert insertion_sum_check(identity(1)) == q_bracket(4)
    pi = window(-3, 1, 2, -4, -5)
    assert insertion_sum_check(pi) == poly_mul(q_bracket(12), QPolynomial.monomial(19))
    for small in iter_group(3):
        expected = poly_mul(q_bracket(8), QPolynomial.monomial(inv_total(small)))
        assert insertion_sum_check(small) == expected


def test_verify_equidistribution():
    report = verify_equidistribution(3)
    assert report.passed
    assert report.distributions_match and report.transport_ok
    assert report.counterexample is None
    assert report.inv_distribution == report.fmaj_distribution == poincare(3)
    tiny = verify_equidistribution(1)
    assert tiny.passed
    assert tiny.inv_distribution.coeffs == (1, 1)


def test_verify_guard():
    with pytest.raises(ValueError, match="enumeration guard"):
        verify_equidistribution(9)


def test_table_reverse_is_exponent_vector():
    # the transport reuses the reversed inversion table as exponents
    from bninv import sigma_decompose

    for w in iter_group(3):
        assert sigma_decompose(phi(w)).exponents == tuple(
            reversed(inversion_table(w).entries)
        )
