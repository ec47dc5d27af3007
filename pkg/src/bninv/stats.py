"""Per-position inversion counts, descent statistics, and insertions.

The closed forms here read everything off the window; the root-counting
oracles they must agree with live in `roots` and the two are only brought
together in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group import SignedPermutation, SnPermutation


@dataclass(frozen=True)
class InversionTable:
    """Entries (inv_1, ..., inv_n) with 0 <= inv_i <= 2(n - i) + 1."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if n == 0:
            raise ValueError("empty inversion table")
        for i, e in enumerate(entries, start=1):
            bound = 2 * (n - i) + 1
            if not 0 <= e <= bound:
                raise ValueError(f"entry {e} at position {i} outside [0, {bound}]")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return ":".join(str(e) for e in self.entries)


def inv_i_closed(w: SignedPermutation, i: int) -> int:
    """Slice-i inversion count, computed from the window alone.

    Write p = n + 1 - i for the pivot position and b = |w_p|.  A positive
    pivot entry counts the larger absolute values to its left.  A negative
    pivot entry counts 1 for its own coordinate root, 2 per smaller
    absolute value to its left, and 1 per larger.
    """
    n = w.n
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range [1, {n}]")
    p = n + 1 - i
    pivot = w.window[p - 1]
    b = abs(pivot)
    smaller = larger = 0
    for v in w.window[: p - 1]:
        if abs(v) > b:
            larger += 1
        else:
            smaller += 1
    if pivot > 0:
        return larger
    return 1 + 2 * smaller + larger


def inversion_table(w: SignedPermutation) -> InversionTable:
    return InversionTable(tuple(inv_i_closed(w, i) for i in range(1, w.n + 1)))


def inv_total(w: SignedPermutation) -> int:
    """Total inversion count; equals the word length over the standard generators."""
    return sum(inversion_table(w).entries)


def insert_value(pi: SignedPermutation, signed_value: int, space: int) -> SignedPermutation:
    """Splice +-(n+1) into one of the n+1 spaces of a rank-n window.

    Space 0 is in front of the window; space i > 0 sits immediately after
    the i-th entry.
    """
    target = pi.n + 1
    if abs(signed_value) != target:
        raise ValueError(f"inserted value must have magnitude {target}, got {signed_value}")
    if not 0 <= space <= pi.n:
        raise ValueError(f"space {space} out of range [0, {pi.n}]")
    win = pi.window
    return SignedPermutation(win[:space] + (signed_value,) + win[space:])


def neg(w: SignedPermutation) -> int:
    """Number of negative window entries."""
    return sum(1 for v in w.window if v < 0)


def signed_order_key(v: int):
    """Sort key realizing the order -1 < -2 < ... < -n < 1 < 2 < ... < n."""
    return (0, -v) if v < 0 else (1, v)


def descent_set_b(w: SignedPermutation) -> set[int]:
    """Positions i where w_i > w_{i+1} in the signed order."""
    win = w.window
    return {
        i
        for i in range(1, w.n)
        if signed_order_key(win[i - 1]) > signed_order_key(win[i])
    }


def maj_b(w: SignedPermutation) -> int:
    """Sum of the signed-order descent positions."""
    return sum(descent_set_b(w))


def fmaj(w: SignedPermutation) -> int:
    """Flag-major index: twice the signed major index plus the negation count.

    Also equals the exponent sum of the cyclic-generator normal form; that
    equality is pinned down in the tests rather than assumed here.
    """
    return 2 * maj_b(w) + neg(w)


def sn_inv(beta: SnPermutation) -> int:
    vals = beta.values
    n = len(vals)
    return sum(1 for a in range(n) for b in range(a + 1, n) if vals[a] > vals[b])


def sn_descents(beta: SnPermutation) -> set[int]:
    vals = beta.values
    return {i for i in range(1, beta.n) if vals[i - 1] > vals[i]}


def sn_maj(beta: SnPermutation) -> int:
    return sum(sn_descents(beta))
