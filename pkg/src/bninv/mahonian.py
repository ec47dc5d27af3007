"""Dense q-polynomials and the distribution identities they certify.

A statistic's histogram over the whole rank-n group is recorded as a
polynomial in q (coefficient of q^k = number of elements with value k).
Both the total inversion count and the flag-major index produce the
product of the even brackets [2]_q [4]_q ... [2n]_q, and the transport map
:func:`phi` realizes the equality pointwise.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from . import roots, stats
from .group import SigmaExponents, SignedPermutation, format_window, sigma_compose
from .ranking import enumerate_group
from .stats import insert_value, inv_total, inversion_table

DEFAULT_MAX_N = 8


@dataclass(frozen=True)
class QPolynomial:
    """Coefficients indexed by exponent; canonical form has no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if coeffs and coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient; use from_coeffs to normalize")
        if any(c < 0 for c in coeffs):
            raise ValueError("coefficients must be nonnegative")

    @classmethod
    def from_coeffs(cls, seq: Iterable[int]) -> QPolynomial:
        coeffs = list(seq)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return cls(tuple(coeffs))

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> QPolynomial:
        if not counts:
            return cls(())
        coeffs = [0] * (max(counts) + 1)
        for k, c in counts.items():
            coeffs[k] = c
        return cls.from_coeffs(coeffs)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> QPolynomial:
        return cls.from_coeffs([0] * exponent + [coeff])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: QPolynomial) -> QPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return QPolynomial.from_coeffs(out)

    def __mul__(self, other: QPolynomial) -> QPolynomial:
        return poly_mul(self, other)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                power = "q" if k == 1 else f"q^{k}"
                terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms)


def q_bracket(m: int) -> QPolynomial:
    """1 + q + ... + q^(m-1)."""
    if m < 1:
        raise ValueError("bracket argument must be a positive integer")
    return QPolynomial((1,) * m)


def poly_mul(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    if a.is_zero or b.is_zero:
        return QPolynomial(())
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            out[i + j] += ca * cb
    return QPolynomial(tuple(out))


def poly_eval_at_one(a: QPolynomial) -> int:
    return sum(a.coeffs)


def poincare(n: int) -> QPolynomial:
    """The product [2]_q [4]_q ... [2n]_q; degree n^2, value 2^n n! at q = 1."""
    if n < 1:
        raise ValueError("rank must be a positive integer")
    result = QPolynomial((1,))
    for i in range(1, n + 1):
        result = poly_mul(result, q_bracket(2 * i))
    return result


STATISTICS: dict[str, Callable[[SignedPermutation], int]] = {
    "inv": stats.inv_total,
    "fmaj": stats.fmaj,
    "maj_b": stats.maj_b,
    "neg": stats.neg,
    "length_oracle": roots.length_oracle,
}


def check_enumeration_guard(n: int, max_n: int = DEFAULT_MAX_N) -> None:
    """Refuse full-group sweeps beyond max_n; callers override it knowingly."""
    if n > max_n:
        raise ValueError(
            f"n={n} exceeds the enumeration guard ({max_n}); "
            "raise the guard explicitly to sweep a group this large"
        )


def distribution(
    n: int,
    statistic: str | Callable[[SignedPermutation], int] = "inv",
    *,
    max_n: int = DEFAULT_MAX_N,
) -> QPolynomial:
    """Histogram of a statistic over the whole rank-n group."""
    check_enumeration_guard(n, max_n)
    if isinstance(statistic, str):
        try:
            fn = STATISTICS[statistic]
        except KeyError:
            raise ValueError(
                f"unknown statistic {statistic!r}; choose from {sorted(STATISTICS)}"
            ) from None
    else:
        fn = statistic
    return QPolynomial.from_counts(Counter(fn(w) for w in enumerate_group(n)))


def phi(w: SignedPermutation) -> SignedPermutation:
    """Transport along inversion tables: the reversed table, reused as the
    exponent vector of the cyclic-generator normal form.

    Permutes the group and carries the total inversion count to the
    flag-major index: fmaj(phi(w)) = inv_total(w).
    """
    entries = inversion_table(w).entries
    return sigma_compose(SigmaExponents(tuple(reversed(entries))))


def insertion_sum_check(pi: SignedPermutation) -> QPolynomial:
    """Sum of q^(inv) over all one-rank-up insertions into pi.

    Inserting +-(n+1) into each of the n+1 spaces of a rank-n window gives
    2(n+1) elements.  The per-sign sums are compared with their closed
    forms ([n+1]_q and q^(n+1) [n+1]_q, shifted by inv of pi) before the
    total is returned; the total therefore equals [2(n+1)]_q q^(inv of pi).
    """
    n = pi.n + 1
    base = inv_total(pi)
    pos_counts: Counter[int] = Counter()
    neg_counts: Counter[int] = Counter()
    for space in range(n):
        pos_counts[inv_total(insert_value(pi, n, space))] += 1
        neg_counts[inv_total(insert_value(pi, -n, space))] += 1
    pos_poly = QPolynomial.from_counts(pos_counts)
    neg_poly = QPolynomial.from_counts(neg_counts)
    if pos_poly != poly_mul(q_bracket(n), QPolynomial.monomial(base)):
        raise ArithmeticError(f"positive insertions break the split identity at {pi}")
    if neg_poly != poly_mul(q_bracket(n), QPolynomial.monomial(base + n)):
        raise ArithmeticError(f"negative insertions break the split identity at {pi}")
    return pos_poly + neg_poly


@dataclass(frozen=True)
class EquidistributionReport:
    """Outcome of one exhaustive equidistribution sweep."""

    n: int
    inv_distribution: QPolynomial
    fmaj_distribution: QPolynomial
    poincare_polynomial: QPolynomial
    distributions_match: bool
    transport_ok: bool
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.distributions_match and self.transport_ok


def verify_equidistribution(n: int, *, max_n: int = DEFAULT_MAX_N) -> EquidistributionReport:
    """Compare the inv and fmaj histograms with the bracket product, and
    confirm pointwise that phi carries inv to fmaj, over the whole group."""
    check_enumeration_guard(n, max_n)
    inv_counts: Counter[int] = Counter()
    fmaj_counts: Counter[int] = Counter()
    transport_ok = True
    counterexample = None
    for w in enumerate_group(n):
        iv = inv_total(w)
        inv_counts[iv] += 1
        fmaj_counts[stats.fmaj(w)] += 1
        if transport_ok and stats.fmaj(phi(w)) != iv:
            transport_ok = False
            counterexample = format_window(w)
    inv_poly = QPolynomial.from_counts(inv_counts)
    fmaj_poly = QPolynomial.from_counts(fmaj_counts)
    target = poincare(n)
    return EquidistributionReport(
        n=n,
        inv_distribution=inv_poly,
        fmaj_distribution=fmaj_poly,
        poincare_polynomial=target,
        distributions_match=inv_poly == fmaj_poly == target,
        transport_ok=transport_ok,
        counterexample=counterexample,
    )
