"""The rank-n type-B root system and root-counting oracles.

The roots are the vectors +-e_l and +-e_j +- e_i with j > i.  A signed
permutation acts linearly through w(e_i) = sign(w_i) e_|w_i|.  The length
of w counts the positive roots whose image is negative; slicing the
positive system by its largest-index coordinate splits that count into the
per-position statistics checked against the closed forms in `stats`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .group import SignedPermutation


@dataclass(frozen=True)
class Root:
    """A root, stored as (index, coefficient) pairs, larger index first."""

    n: int
    coords: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        coords = tuple((int(i), int(c)) for i, c in self.coords)
        object.__setattr__(self, "coords", coords)
        if self.n < 1:
            raise ValueError("rank must be a positive integer")
        if len(coords) not in (1, 2):
            raise ValueError("a root has one or two coordinates")
        for idx, coeff in coords:
            if not 1 <= idx <= self.n:
                raise ValueError(f"coordinate index {idx} out of range [1, {self.n}]")
            if coeff not in (-1, 1):
                raise ValueError("root coefficients must be +1 or -1")
        if len(coords) == 2 and coords[0][0] <= coords[1][0]:
            raise ValueError("two-coordinate roots store the larger index first")

    @classmethod
    def single(cls, n: int, index: int, coeff: int = 1) -> Root:
        return cls(n, ((index, coeff),))

    @classmethod
    def pair(cls, n: int, j: int, cj: int, i: int, ci: int) -> Root:
        if i == j:
            raise ValueError("two-coordinate roots need distinct indices")
        if j < i:
            j, cj, i, ci = i, ci, j, cj
        return cls(n, ((j, cj), (i, ci)))

    @property
    def is_negative(self) -> bool:
        """True when the leading (larger-index) coefficient is -1."""
        return self.coords[0][1] < 0

    def __neg__(self) -> Root:
        return Root(self.n, tuple((i, -c) for i, c in self.coords))


@lru_cache(maxsize=None)
def positive_roots(n: int) -> frozenset[Root]:
    """All e_l together with e_j - e_i and e_j + e_i for i < j; n^2 roots."""
    if n < 1:
        raise ValueError("rank must be a positive integer")
    roots = [Root.single(n, l) for l in range(1, n + 1)]
    for j in range(2, n + 1):
        for i in range(1, j):
            roots.append(Root.pair(n, j, 1, i, -1))
            roots.append(Root.pair(n, j, 1, i, 1))
    return frozenset(roots)


@lru_cache(maxsize=None)
def psi_subset(n: int, i: int) -> frozenset[Root]:
    """The positive roots whose largest coordinate index is p = n + 1 - i.

    These are e_p and e_p -+ e_j for j < p, so the slice has 2(n - i) + 1
    elements, and the slices for i = 1..n partition the positive system.
    """
    if n < 1:
        raise ValueError("rank must be a positive integer")
    if not 1 <= i <= n:
        raise ValueError(f"slice index {i} out of range [1, {n}]")
    p = n + 1 - i
    roots = [Root.single(n, p)]
    for j in range(1, p):
        roots.append(Root.pair(n, p, 1, j, -1))
        roots.append(Root.pair(n, p, 1, j, 1))
    return frozenset(roots)


def act(w: SignedPermutation, root: Root) -> Root:
    """Image of a root under w(e_i) = sign(w_i) e_|w_i|, in canonical form."""
    if w.n != root.n:
        raise ValueError(f"rank mismatch: {w.n} != {root.n}")
    mapped = []
    for idx, coeff in root.coords:
        v = w.window[idx - 1]
        mapped.append((abs(v), coeff if v > 0 else -coeff))
    mapped.sort(reverse=True)
    return Root(w.n, tuple(mapped))


def length_oracle(w: SignedPermutation) -> int:
    """Number of positive roots sent to negative roots by w."""
    return sum(1 for r in positive_roots(w.n) if act(w, r).is_negative)


def inv_i_oracle(w: SignedPermutation, i: int) -> int:
    """Number of slice-i positive roots sent negative by w."""
    return sum(1 for r in psi_subset(w.n, i) if act(w, r).is_negative)
