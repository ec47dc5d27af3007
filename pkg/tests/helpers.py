"""Shared brute-force helpers, deliberately independent of the ranking code."""

import itertools

from bninv import SignedPermutation


def iter_group(n):
    """Every rank-n signed permutation, by direct product of S_n and signs."""
    for values in itertools.permutations(range(1, n + 1)):
        for mask in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(tuple(s * v for s, v in zip(mask, values)))


def window(*entries):
    return SignedPermutation(tuple(entries))
