"""Mixed-radix numerals with place weights 2^i * i! and digit i at most 2i+1.

Digit d_0 is least significant.  Because digits routinely exceed 9, the
text form lists them most significant first, separated by colons.  Every
nonnegative integer has exactly one digit vector per length, and reversing
an inversion table gives the digit vector of the element's rank.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial

from .stats import InversionTable

_DIGIT_RE = re.compile(r"\d+")


@dataclass(frozen=True)
class BnDigits:
    """Digit vector (d_0, ..., d_{n-1}), least significant first."""

    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        digits = tuple(self.digits)
        object.__setattr__(self, "digits", digits)
        if not digits:
            raise ValueError("empty digit vector")
        for i, d in enumerate(digits):
            if not 0 <= d <= 2 * i + 1:
                raise ValueError(f"digit {d} at place {i} outside [0, {2 * i + 1}]")

    @property
    def n(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return ":".join(str(d) for d in reversed(self.digits))

    @classmethod
    def parse(cls, text: str) -> BnDigits:
        """Parse the colon-separated text form (most significant digit first)."""
        tokens = [t.strip() for t in text.strip().split(":")]
        values = []
        for tok in tokens:
            if not _DIGIT_RE.fullmatch(tok):
                raise ValueError(f"malformed digit {tok!r}")
            values.append(int(tok))
        return cls(tuple(reversed(values)))


def base_weight(i: int) -> int:
    """Weight of place i: 2^i * i!."""
    if i < 0:
        raise ValueError("place index must be nonnegative")
    return (1 << i) * factorial(i)


def encode(x: int, n: int | None = None) -> BnDigits:
    """Digits of x, by repeated division with moduli 2, 4, 6, ...

    With n given, the result is zero-padded to exactly n digits and x must
    be below 2^n * n!.  Without n, the shortest digit vector is returned
    (a single zero digit for x = 0).
    """
    if x < 0:
        raise ValueError("only nonnegative integers can be encoded")
    digits = []
    q = x
    m = 2
    while q > 0:
        q, d = divmod(q, m)
        digits.append(d)
        m += 2
    if not digits:
        digits.append(0)
    if n is not None:
        if n < 1:
            raise ValueError("digit count must be a positive integer")
        if len(digits) > n:
            raise ValueError(f"{x} does not fit in {n} digits (needs {len(digits)})")
        digits.extend([0] * (n - len(digits)))
    return BnDigits(tuple(digits))


def decode(d: BnDigits) -> int:
    """Weighted digit sum."""
    return sum(digit * base_weight(i) for i, digit in enumerate(d.digits))


def digits_from_table(t: InversionTable) -> BnDigits:
    """Reverse the table: entry i lands at place n - i, bounds agreeing as 2i+1."""
    return BnDigits(tuple(reversed(t.entries)))


def table_from_digits(d: BnDigits) -> InversionTable:
    return InversionTable(tuple(reversed(d.digits)))
