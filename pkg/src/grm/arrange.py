"""L-arrangements: blocks of parallel hyperplanes in independent directions.

The zero count of such an arrangement depends only on its type, the multiset
of block sizes. Concrete arrangements are realised with axis directions.
"""
from dataclasses import dataclass
from math import prod

import numpy as np

from .errors import DegreeOutOfRange, ExchangeNotApplicable, InvalidType
from .ffield import make_field
from .grmcode import linear_product
from .mpoly import DEFAULT_BUDGET, grid_chunks

EXCHANGES = ("T1", "T2", "T3", "T4")


@dataclass(frozen=True)
class ArrangementType:
    block_sizes: tuple
    q: int
    n: int

    def __post_init__(self):
        sizes = tuple(sorted(self.block_sizes, reverse=True))
        object.__setattr__(self, "block_sizes", sizes)
        if not 1 <= len(sizes) <= self.n:
            raise InvalidType(f"{len(sizes)} blocks, need 1..{self.n}")
        if any(not 1 <= s <= self.q - 1 for s in sizes):
            raise InvalidType(f"block sizes {sizes} must lie in 1..{self.q - 1}")

    @property
    def block_count(self):
        return len(self.block_sizes)

    @property
    def degree(self):
        return sum(self.block_sizes)


@dataclass(frozen=True)
class Arrangement:
    """Blocks of hyperplanes ``X_direction = c`` for c in ``constants``."""
    blocks: tuple
    q: int
    n: int

    def __post_init__(self):
        dirs = [d for d, _ in self.blocks]
        if len(set(dirs)) != len(dirs) or any(not 1 <= d <= self.n for d in dirs):
            raise InvalidType(f"directions {dirs} must be distinct in 1..{self.n}")
        for _, cs in self.blocks:
            if len(set(cs)) != len(cs) or any(not 0 <= c < self.q for c in cs):
                raise InvalidType(f"constants {cs} must be distinct field elements")

    @classmethod
    def realize(cls, t):
        """Axis-aligned realisation of a type: block i uses X_i = 0, 1, ..."""
        return cls(tuple((i + 1, tuple(range(s))) for i, s in enumerate(t.block_sizes)), t.q, t.n)

    def type(self):
        return ArrangementType(tuple(len(cs) for _, cs in self.blocks), self.q, self.n)

    def polynomial(self):
        F = make_field(self.q)
        return linear_product(F, self.n, [(i, c) for i, cs in self.blocks for c in cs])


def n_points_type(t):
    """q^n - q^(n-k) prod(q - d_i)."""
    q, n = t.q, t.n
    return q**n - q ** (n - t.block_count) * prod(q - s for s in t.block_sizes)


def n_points_grid(arr, budget=DEFAULT_BUDGET):
    """Size of the union of the hyperplanes, by enumerating GF(q)^n."""
    total = 0
    for coords in grid_chunks(arr.q, arr.n, budget):
        hit = np.zeros(len(coords), dtype=bool)
        for direction, cs in arr.blocks:
            hit |= np.isin(coords[:, direction - 1], cs)
        total += int(np.count_nonzero(hit))
    return total


def maximal_type(q, n, d):
    a, b = divmod(d, q - 1)
    return ArrangementType((q - 1,) * a + ((b,) if b else ()), q, n)


def is_maximal_type(t, d):
    q = t.q
    a, b = divmod(d, q - 1)
    return t.degree == d and t.block_sizes == (q - 1,) * a + ((b,) if b else ())


def _exchange_sizes(q, n, a, b, kind):
    if kind == "T1":
        if not (1 <= a <= n - 1 and 0 <= b < q - 2):
            raise ExchangeNotApplicable(f"T1 needs 1 <= a <= n-1 and 0 <= b < q-2 (a={a}, b={b})")
        return (q - 1,) * (a - 1) + (q - 2, b + 1)
    if kind == "T2":
        if not (1 <= a < n - 1 and 1 <= b < q - 1):
            raise ExchangeNotApplicable(f"T2 needs 1 <= a < n-1 and 1 <= b < q-1 (a={a}, b={b})")
        return (q - 1,) * (a - 1) + (q - 2, b, 1)
    if kind == "T3":
        if not (1 <= a < n - 1 and 2 <= b < q - 1):
            raise ExchangeNotApplicable(f"T3 needs 1 <= a < n-1 and 2 <= b < q-1 (a={a}, b={b})")
        return (q - 1,) * a + (b - 1, 1)
    if kind == "T4":
        if not (1 <= a < n - 1 and b == 1):
            raise ExchangeNotApplicable(f"T4 needs 1 <= a < n-1 and b = 1 (a={a}, b={b})")
        return (q - 1,) * a
    raise ValueError(f"unknown exchange {kind!r}")


def exchange_type(q, n, d, kind):
    a, b = divmod(d, q - 1)
    # q - 2 = 0 blocks cannot occur: every exchange needs q >= 3
    if q < 3:
        raise ExchangeNotApplicable("exchanges need q >= 3")
    return ArrangementType(_exchange_sizes(q, n, a, b, kind), q, n)


def apply_exchange(q, n, d, kind):
    """Type produced by exchange ``kind`` on the maximal configuration,
    its zero count and the gap N_1 - N."""
    t = exchange_type(q, n, d, kind)
    N = n_points_type(t)
    return t, N, n_points_type(maximal_type(q, n, d)) - N


def enumerate_types(q, n, max_degree):
    """Every ArrangementType with total degree <= max_degree (canonical, each once)."""
    out = []

    def rec(prefix, cap, left):
        if prefix:
            out.append(ArrangementType(tuple(prefix), q, n))
        if len(prefix) == n:
            return
        for s in range(min(cap, left), 0, -1):
            prefix.append(s)
            rec(prefix, s, left - s)
            prefix.pop()

    rec([], q - 1, max_degree)
    return out


def exchange_kind_of(t, d):
    """Names of the exchanges whose type equals t."""
    kinds = []
    for kind in EXCHANGES:
        try:
            if exchange_type(t.q, t.n, d, kind) == t:
                kinds.append(kind)
        except ExchangeNotApplicable:
            pass
    return kinds


@dataclass(frozen=True)
class BestNonMaximal:
    type: ArrangementType
    n2prime: int
    w2prime: int
    kinds: tuple
    maximizers: tuple


def best_nonmaximal_type(q, n, d):
    """Exhaustive search over types of degree <= d, maximal type excluded.

    Ties are broken towards the lexicographically largest block-size tuple.
    """
    if q < 3 or n < 3 or not q <= d <= (n - 1) * (q - 1):
        raise DegreeOutOfRange(f"(q, n, d) = ({q}, {n}, {d}) outside q>=3, n>=3, q<=d<=(n-1)(q-1)")
    best_n, best = -1, []
    for t in enumerate_types(q, n, d):
        if is_maximal_type(t, d):
            continue
        N = n_points_type(t)
        if N > best_n:
            best_n, best = N, [t]
        elif N == best_n:
            best.append(t)
    best.sort(key=lambda t: t.block_sizes, reverse=True)
    top = best[0]
    return BestNonMaximal(top, best_n, q**n - best_n, tuple(exchange_kind_of(top, d)), tuple(best))


def n2prime_table(q, n, d):
    """Closed-form (N'_2, exchange) from the case table for the best exchanged arrangement."""
    a, b = divmod(d, q - 1)
    if q == 3:
        if b == 0:
            return q**n - 2 * q ** (n - a - 1) * (q - 1), "T1"
        if b == 1 and a < n - 1:
            return q**n - 2 * q ** (n - a - 2) * (q - 1) ** 2, "T2"
    else:
        if 1 <= a < n - 1 and 2 <= b < q - 1:
            return q**n - q ** (n - a - 2) * (q - 1) * (q - b + 1), "T3"
        if 1 <= a < n - 1 and b == 1:
            return q**n - q ** (n - a), "T4"
        if 1 <= a <= n - 1 and b == 0:
            return q**n - 2 * q ** (n - a - 1) * (q - b - 1), "T1"
    raise DegreeOutOfRange(f"no case-table entry for (q, n, d) = ({q}, {n}, {d})")
