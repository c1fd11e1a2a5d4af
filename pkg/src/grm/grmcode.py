"""Parameters and second weights of generalized Reed-Muller codes RM_q(d, n)."""
from dataclasses import dataclass
from math import comb

from .errors import DegreeOutOfRange, RegimeNotCovered
from .ffield import make_field
from .mpoly import MultiPoly


def binom(x, y):
    """Binomial coefficient, zero whenever an argument is negative or y > x."""
    if x < 0 or y < 0 or y > x:
        return 0
    return comb(x, y)


@dataclass(frozen=True)
class GrmParams:
    q: int
    n: int
    d: int
    a: int
    b: int
    m: int
    k: int
    w1: int


@dataclass(frozen=True)
class SecondWeightResult:
    regime: str
    value: int = None
    lo: int = None
    hi: int = None

    @property
    def exact(self):
        return self.value is not None

    def as_dict(self):
        if self.exact:
            return {"kind": "exact", "value": self.value}
        return {"kind": "interval", "lo": self.lo, "hi": self.hi}


def _check_range(q, n, d):
    make_field(q)
    if n < 1:
        raise DegreeOutOfRange(f"n = {n} must be at least 1")
    if not 1 <= d < n * (q - 1):
        raise DegreeOutOfRange(f"d = {d} outside 1 <= d < n(q-1) = {n * (q - 1)}")


def dimension_formula(q, n, d):
    return sum((-1) ** j * binom(n, j) * binom(t - j * q + n - 1, t - j * q)
               for t in range(d + 1) for j in range(n + 1))


def grm_params(q, n, d):
    _check_range(q, n, d)
    a, b = divmod(d, q - 1)
    return GrmParams(q, n, d, a, b, q**n, dimension_formula(q, n, d),
                     (q - b) * q ** (n - a - 1))


def dimension_oracle(q, n, d):
    """Count exponent vectors in [0, q-1]^n with total at most d, by a DP over variables."""
    counts = [1] + [0] * d
    for _ in range(n):
        nxt = [0] * (d + 1)
        for s, c in enumerate(counts):
            if c:
                for e in range(min(q - 1, d - s) + 1):
                    nxt[s + e] += c
        counts = nxt
    return sum(counts)


def second_weight(q, n, d):
    """Second weight of RM_q(d, n) in every regime with a known formula.

    For d = a(q-1) + 1 with q >= 3, n >= 3 only an interval is known.
    """
    _check_range(q, n, d)
    a, b = divmod(d, q - 1)
    if d == 1:
        return SecondWeightResult("d=1", value=q**n)
    if q == 2:
        if d <= n - 2:
            return SecondWeightResult("q=2", value=3 * 2 ** (n - d - 1))
        raise RegimeNotCovered(f"q=2, d={d} >= n-1 has no recorded second-weight formula")
    if d < q:
        if n < 2:
            raise RegimeNotCovered("d < q formula needs n >= 2")
        return SecondWeightResult("d<q", value=q**n - d * q ** (n - 1) + (d - 1) * q ** (n - 2))
    if n < 3:
        raise RegimeNotCovered(f"n = {n} with d >= q is not covered")
    if d > (n - 1) * (q - 1):
        raise RegimeNotCovered(f"d = {d} > (n-1)(q-1) is not covered")
    if b == 0:
        return SecondWeightResult("b=0", value=2 * q ** (n - a - 1) * (q - 1))
    if b == 1:
        if a < n - 2:
            lo = q ** (n - a) - q ** (n - a - 1) + q ** (n - a - 2) - q ** (n - a - 3)
        else:
            lo = q**2 - 2
        return SecondWeightResult("b=1-interval", lo=lo, hi=q ** (n - a))
    return SecondWeightResult("2<=b<q-1", value=q ** (n - a - 2) * (q - 1) * (q - b + 1))


def linear_product(field, n, factors):
    """Product of ``X_var - c`` over ``factors`` = [(var, c), ...] (var is 1-based)."""
    F = field
    by_var = {}
    for var, c in factors:
        by_var.setdefault(var, []).append(c)
    out = MultiPoly.constant(F, n, 1)
    # univariate products first keeps the intermediate term counts small
    for var in sorted(by_var):
        g = MultiPoly.constant(F, n, 1)
        x = MultiPoly.variable(F, n, var)
        for c in by_var[var]:
            g = g * (x - MultiPoly.constant(F, n, c))
        out = out * g
    return out


def maximal_config_poly(q, n, d):
    """A minimum-weight codeword: a full blocks of q-1 hyperplanes and one block of b."""
    _check_range(q, n, d)
    a, b = divmod(d, q - 1)
    if a + (1 if b else 0) > n:
        raise DegreeOutOfRange(f"d = {d} needs more than n = {n} directions")
    factors = [(i, c) for i in range(1, a + 1) for c in range(q - 1)]
    factors += [(a + 1, c) for c in range(b)]
    return linear_product(make_field(q), n, factors)
