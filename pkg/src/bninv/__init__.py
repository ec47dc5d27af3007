"""Exact statistics, ranking and mixed-radix numerals for signed permutations.

The group of signed permutations of {1..n} is handled with plain integer
arithmetic throughout: window algebra and normal forms (`group`), the
type-B root system used as a counting oracle (`roots`), inversion tables
and descent statistics (`stats`), the mixed-radix number system whose
place weights are 2^i i! (`radix`), the rank bijection onto [1, 2^n n!]
(`ranking`), and q-polynomial distribution identities (`mahonian`).
"""

from .group import (
    SigmaExponents,
    SignVector,
    SignedPermutation,
    SnPermutation,
    compose,
    decompose_beta_r,
    format_window,
    generator_s,
    generator_t,
    identity,
    inverse,
    longest_element,
    parse_window,
    recompose,
    sigma,
    sigma_compose,
    sigma_decompose,
    sigma_power,
)
from .mahonian import (
    DEFAULT_MAX_N,
    EquidistributionReport,
    QPolynomial,
    STATISTICS,
    check_enumeration_guard,
    distribution,
    insertion_sum_check,
    phi,
    poincare,
    poly_eval_at_one,
    poly_mul,
    q_bracket,
    verify_equidistribution,
)
from .radix import (
    BnDigits,
    base_weight,
    decode,
    digits_from_table,
    encode,
    table_from_digits,
)
from .ranking import enumerate_group, group_order, rank, unrank
from .roots import Root, act, inv_i_oracle, length_oracle, positive_roots, psi_subset
from .stats import (
    InversionTable,
    descent_set_b,
    fmaj,
    insert_value,
    inv_i_closed,
    inv_total,
    inversion_table,
    maj_b,
    neg,
    signed_order_key,
    sn_descents,
    sn_inv,
    sn_maj,
)

__version__ = "0.1.0"

__all__ = [
    "BnDigits",
    "DEFAULT_MAX_N",
    "EquidistributionReport",
    "InversionTable",
    "QPolynomial",
    "Root",
    "STATISTICS",
    "SigmaExponents",
    "SignVector",
    "SignedPermutation",
    "SnPermutation",
    "act",
    "base_weight",
    "check_enumeration_guard",
    "compose",
    "decode",
    "decompose_beta_r",
    "descent_set_b",
    "digits_from_table",
    "distribution",
    "encode",
    "enumerate_group",
    "fmaj",
    "format_window",
    "generator_s",
    "generator_t",
    "group_order",
    "identity",
    "insert_value",
    "insertion_sum_check",
    "inv_i_closed",
    "inv_i_oracle",
    "inv_total",
    "inverse",
    "inversion_table",
    "length_oracle",
    "longest_element",
    "maj_b",
    "neg",
    "parse_window",
    "phi",
    "poincare",
    "poly_eval_at_one",
    "poly_mul",
    "positive_roots",
    "psi_subset",
    "q_bracket",
    "rank",
    "recompose",
    "sigma",
    "sigma_compose",
    "sigma_decompose",
    "sigma_power",
    "signed_order_key",
    "sn_descents",
    "sn_inv",
    "sn_maj",
    "table_from_digits",
    "unrank",
    "verify_equidistribution",
]
