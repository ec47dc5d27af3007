"""Signed permutations of {1..n}: window notation, generators, decompositions.

A signed permutation is written as its window (w_1, ..., w_n): the absolute
values form a permutation of [1, n] and each entry carries a sign.  Maps
compose on the left, (f * g)(i) = f(g(i)), and every map is extended to
negative arguments by f(-i) = -f(i).  Two normal forms are provided: the
split into an unsigned permutation plus a sign vector, and the unique
product of powers of the cyclic generators returned by :func:`sigma`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_INT_RE = re.compile(r"[+-]?\d+")


@dataclass(frozen=True)
class SignedPermutation:
    """Window notation (w_1, ..., w_n); |w_i| ranges over [1, n] exactly once."""

    window: tuple[int, ...]

    def __post_init__(self) -> None:
        window = tuple(self.window)
        object.__setattr__(self, "window", window)
        n = len(window)
        if n == 0:
            raise ValueError("empty window: rank must be at least 1")
        seen = set()
        for v in window:
            if v == 0:
                raise ValueError("zero entry in window")
            if not -n <= v <= n:
                raise ValueError(f"entry {v} out of range for rank {n}")
            if abs(v) in seen:
                raise ValueError(f"duplicate absolute value {abs(v)} in window")
            seen.add(abs(v))

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        """Apply to i, using w(-i) = -w(i) for negative arguments."""
        if i > 0:
            return self.window[i - 1]
        return -self.window[-i - 1]

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return compose(self, other)

    def __str__(self) -> str:
        return format_window(self)


@dataclass(frozen=True)
class SnPermutation:
    """One-line notation for an ordinary permutation of [1, n]."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise ValueError("empty permutation")
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError("values are not a permutation of [1, n]")

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class SignVector:
    """One bit per position, 1 where the window entry is negated."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(self.bits)
        object.__setattr__(self, "bits", bits)
        if not bits:
            raise ValueError("empty sign vector")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("sign vector entries must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class SigmaExponents:
    """Exponents (k_0, ..., k_{n-1}) of the cyclic-generator normal form."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exponents = tuple(self.exponents)
        object.__setattr__(self, "exponents", exponents)
        if not exponents:
            raise ValueError("empty exponent vector")
        for i, k in enumerate(exponents):
            if not 0 <= k <= 2 * i + 1:
                raise ValueError(f"exponent {k} at index {i} outside [0, {2 * i + 1}]")

    @property
    def n(self) -> int:
        return len(self.exponents)


def _check_rank(n: int) -> None:
    if n < 1:
        raise ValueError("rank must be a positive integer")


def identity(n: int) -> SignedPermutation:
    """The identity element of rank n."""
    _check_rank(n)
    return SignedPermutation(tuple(range(1, n + 1)))


def compose(f: SignedPermutation, g: SignedPermutation) -> SignedPermutation:
    """(f * g)(i) = f(g(i)); the sign of g_i rides along via f(-i) = -f(i)."""
    if f.n != g.n:
        raise ValueError(f"rank mismatch: {f.n} != {g.n}")
    return SignedPermutation(tuple(f(v) for v in g.window))


def inverse(w: SignedPermutation) -> SignedPermutation:
    out = [0] * w.n
    for pos, v in enumerate(w.window, start=1):
        out[abs(v) - 1] = pos if v > 0 else -pos
    return SignedPermutation(tuple(out))


def generator_t(n: int, k: int) -> SignedPermutation:
    """Negate entry k, fix everything else."""
    _check_rank(n)
    if not 1 <= k <= n:
        raise ValueError(f"t-generator index {k} out of range [1, {n}]")
    return SignedPermutation(tuple(-v if v == k else v for v in range(1, n + 1)))


def generator_s(n: int, i: int) -> SignedPermutation:
    """Swap entries i and i+1."""
    _check_rank(n)
    if not 1 <= i <= n - 1:
        raise ValueError(f"s-generator index {i} out of range [1, {n - 1}]")
    win = list(range(1, n + 1))
    win[i - 1], win[i] = win[i], win[i - 1]
    return SignedPermutation(tuple(win))


def _cycle_step(v: int, delta: int, m: int) -> int:
    # position of v in the cycle (1, 2, ..., m, -1, -2, ..., -m), shifted by delta
    t = v - 1 if v > 0 else m - v - 1
    t = (t + delta) % (2 * m)
    return t + 1 if t < m else m - t - 1


def sigma(n: int, i: int) -> SignedPermutation:
    """The i-th cyclic generator, with window (-(i+1), 1, ..., i, i+2, ..., n)."""
    return sigma_power(n, i, 1)


def sigma_power(n: int, i: int, k: int) -> SignedPermutation:
    """The k-th power of sigma(n, i), read off its cycle structure.

    sigma(n, i) moves each of the 2(i+1) values 1, ..., i+1, -1, ..., -(i+1)
    one step back along that cycle and fixes larger magnitudes, so a power
    is a plain shift.  The order of the generator is 2(i+1).
    """
    _check_rank(n)
    if not 0 <= i <= n - 1:
        raise ValueError(f"sigma index {i} out of range [0, {n - 1}]")
    m = i + 1
    window = [_cycle_step(p, -k, m) if p <= m else p for p in range(1, n + 1)]
    return SignedPermutation(tuple(window))


def decompose_beta_r(w: SignedPermutation) -> tuple[SnPermutation, SignVector]:
    """Split w into its unsigned permutation and the vector of negated positions."""
    beta = SnPermutation(tuple(abs(v) for v in w.window))
    bits = SignVector(tuple(1 if v < 0 else 0 for v in w.window))
    return beta, bits


def recompose(beta: SnPermutation, bits: SignVector) -> SignedPermutation:
    if beta.n != bits.n:
        raise ValueError(f"rank mismatch: {beta.n} != {bits.n}")
    return SignedPermutation(
        tuple(-v if b else v for v, b in zip(beta.values, bits.bits))
    )


def sigma_compose(exponents: SigmaExponents) -> SignedPermutation:
    """The product sigma_{n-1}^{k_{n-1}} * ... * sigma_1^{k_1} * sigma_0^{k_0}."""
    n = exponents.n
    result = identity(n)
    for i, k in enumerate(exponents.exponents):
        if k:
            result = compose(sigma_power(n, i, k), result)
    return result


def sigma_decompose(w: SignedPermutation) -> SigmaExponents:
    """Exponents of the unique cyclic-generator normal form of w.

    Peels top down: the 2m powers of sigma(m, m-1) send m to 2m distinct
    values, so the last window entry of a rank-m element pins k_{m-1}.
    Cancelling that power leaves an element fixing m, and the loop recurses
    on the first m-1 entries.
    """
    win = list(w.window)
    exps = [0] * w.n
    for m in range(w.n, 0, -1):
        v = win[m - 1]
        exps[m - 1] = m - v if v > 0 else 2 * m + v
        k = exps[m - 1]
        win = [_cycle_step(u, k, m) for u in win[: m - 1]]
    return SigmaExponents(tuple(exps))


def longest_element(n: int) -> SignedPermutation:
    """The central involution (-1, -2, ..., -n)."""
    _check_rank(n)
    return SignedPermutation(tuple(range(-1, -n - 1, -1)))


def parse_window(text: str) -> SignedPermutation:
    """Parse a comma-separated window such as "2,-5,-3,-1,4".

    Whitespace around the text or around individual entries is tolerated;
    anything else is rejected.
    """
    tokens = [t.strip() for t in text.strip().split(",")]
    if tokens == [""]:
        raise ValueError("empty window text")
    entries = []
    for tok in tokens:
        if not _INT_RE.fullmatch(tok):
            raise ValueError(f"malformed window entry {tok!r}")
        entries.append(int(tok))
    return SignedPermutation(tuple(entries))


def format_window(w: SignedPermutation) -> str:
    """Canonical text form: comma-separated entries, no spaces, no brackets."""
    return ",".join(str(v) for v in w.window)
