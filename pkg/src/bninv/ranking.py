"""Rank bijection between signed permutations and [1, 2^n * n!].

The inversion table of an element, reversed and read as a mixed-radix
numeral, is its zero-based rank.  Unranking rebuilds the window right to
left: digit d_{p-1} indexes into the ordered list of still-available
values n > n-1 > ... > 1 > -1 > -2 > ... > -n, and a chosen value is
removed together with its negative.
"""

from __future__ import annotations

from math import factorial
from typing import Iterator

from .group import SignedPermutation
from .radix import decode, digits_from_table, encode
from .stats import inversion_table


def group_order(n: int) -> int:
    """2^n * n!."""
    if n < 1:
        raise ValueError("rank must be a positive integer")
    return (1 << n) * factorial(n)


def rank(w: SignedPermutation) -> int:
    """1-based position of w in the order induced by inversion tables."""
    return decode(digits_from_table(inversion_table(w))) + 1


def _initial_candidates(n: int) -> list[int]:
    return list(range(n, 0, -1)) + list(range(-1, -n - 1, -1))


def unrank(n: int, k: int) -> SignedPermutation:
    """The element of rank k among the rank-n signed permutations."""
    order = group_order(n)
    if not 1 <= k <= order:
        raise ValueError(f"rank {k} out of range [1, {order}]")
    digits = encode(k - 1, n).digits
    cands = _initial_candidates(n)
    window = [0] * n
    for p in range(n, 0, -1):
        v = cands[digits[p - 1]]
        window[p - 1] = v
        cands.remove(v)
        cands.remove(-v)
    return SignedPermutation(tuple(window))


def enumerate_group(
    n: int, start_rank: int = 1, stop_rank: int | None = None
) -> Iterator[SignedPermutation]:
    """Yield elements in rank order, from start_rank through stop_rank.

    Successive windows come from odometer increments on the digit vector,
    reusing the candidate lists of the untouched digit prefix, which is far
    cheaper than unranking every rank from scratch.  Disjoint rank
    subranges may be swept independently and concatenated; the stream is
    identical to calling unrank on each rank in turn.
    """
    order = group_order(n)
    stop = order if stop_rank is None else stop_rank
    if not 1 <= start_rank <= order:
        raise ValueError(f"start rank {start_rank} out of range [1, {order}]")
    if stop > order:
        raise ValueError(f"stop rank {stop} out of range [1, {order}]")
    if stop < start_rank:
        return
    digits = list(encode(start_rank - 1, n).digits)
    window = [0] * n
    # before[p-1] holds the candidate list as it was prior to choosing position p
    before: list[list[int]] = [[] for _ in range(n)]
    cands = _initial_candidates(n)
    for p in range(n, 0, -1):
        before[p - 1] = list(cands)
        v = cands[digits[p - 1]]
        window[p - 1] = v
        cands.remove(v)
        cands.remove(-v)
    yield SignedPermutation(tuple(window))
    for _ in range(stop - start_rank):
        j = 0
        while digits[j] == 2 * j + 1:
            digits[j] = 0
            j += 1
        digits[j] += 1
        cands = list(before[j])
        for p in range(j + 1, 0, -1):
            if p <= j:
                before[p - 1] = list(cands)
            v = cands[digits[p - 1]]
            window[p - 1] = v
            cands.remove(v)
            cands.remove(-v)
        yield SignedPermutation(tuple(window))
