"""Arithmetic in small finite fields GF(q).

Elements are plain ints in ``range(q)``. For an extension field GF(p^e) the
index, written in base p, gives the coefficients of the element in the basis
1, t, t^2, ... with the constant coefficient as the least significant digit.
"""
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import DivisionByZero, UnsupportedCardinality

SUPPORTED = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27)

# irreducible moduli, coefficients listed from the constant term upwards
MODULI = {
    4: (1, 1, 1),         # x^2 + x + 1
    8: (1, 1, 0, 1),      # x^3 + x + 1
    9: (2, 1, 1),         # x^2 + x + 2
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1
    25: (2, 1, 1),        # x^2 + x + 2
    27: (1, 2, 0, 1),     # x^3 + 2x + 1
}


def _prime_power(q):
    if q < 2:
        return None
    p = next(k for k in range(2, q + 1) if q % k == 0)
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    return (p, e) if r == 1 else None


def _digits(x, p, e):
    return [(x // p**i) % p for i in range(e)]


def _undigits(ds, p):
    return sum(c * p**i for i, c in enumerate(ds))


def _poly_mulmod(u, v, p, modulus):
    e = len(modulus) - 1
    prod = [0] * (2 * e - 1)
    for i, x in enumerate(u):
        if x:
            for j, y in enumerate(v):
                prod[i + j] = (prod[i + j] + x * y) % p
    # modulus is monic; fold high coefficients down
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            for i in range(e + 1):
                prod[k - e + i] = (prod[k - e + i] - c * modulus[i]) % p
    return prod[:e]


@dataclass(frozen=True)
class FieldSpec:
    q: int
    p: int
    e: int
    modulus: tuple = ()
    add_table: np.ndarray = field(repr=False, compare=False, default=None)
    mul_table: np.ndarray = field(repr=False, compare=False, default=None)
    neg_table: np.ndarray = field(repr=False, compare=False, default=None)
    inv_table: np.ndarray = field(repr=False, compare=False, default=None)

    def __hash__(self):
        return hash(self.q)

    def add(self, a, b):
        return int(self.add_table[a, b])

    def sub(self, a, b):
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def neg(self, a):
        return int(self.neg_table[a])

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return int(self.inv_table[a])

    def elements(self):
        return range(self.q)

    def element_str(self, a):
        if self.e == 1:
            return str(a)
        ds = _digits(a, self.p, self.e)
        parts = []
        for i in range(self.e - 1, -1, -1):
            c = ds[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(parts) or "0"


@lru_cache(maxsize=None)
def make_field(q):
    q = int(q)
    pe = _prime_power(q)
    if pe is None or q not in SUPPORTED:
        raise UnsupportedCardinality(f"GF({q}) is not supported; choose from {SUPPORTED}")
    p, e = pe
    if e == 1:
        r = np.arange(q)
        add = (r[:, None] + r[None, :]) % q
        mul = (r[:, None] * r[None, :]) % q
        modulus = ()
    else:
        modulus = MODULI[q]
        digs = [_digits(x, p, e) for x in range(q)]
        add = np.array([[_undigits([(u + v) % p for u, v in zip(digs[x], digs[y])], p)
                         for y in range(q)] for x in range(q)])
        mul = np.array([[_undigits(_poly_mulmod(digs[x], digs[y], p, modulus), p)
                         for y in range(q)] for x in range(q)])
    add = add.astype(np.int64)
    mul = mul.astype(np.int64)
    neg = np.argmin(add, axis=1).astype(np.int64)      # add[a, neg[a]] == 0
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
    for t in (add, mul, neg, inv):
        t.setflags(write=False)
    return FieldSpec(q, p, e, tuple(modulus), add, mul, neg, inv)


def field_arith(spec, op, a, b=None):
    """Dispatch one of add/sub/mul/inv/neg by name."""
    if op in ("inv", "neg"):
        return getattr(spec, op)(a)
    if op not in ("add", "sub", "mul"):
        raise ValueError(f"unknown field operation {op!r}")
    return getattr(spec, op)(a, b)


def generator(spec):
    """Smallest element whose powers run through every nonzero element."""
    for g in range(1, spec.q):
        seen, x = set(), 1
        for _ in range(spec.q - 1):
            x = spec.mul(x, g)
            seen.add(x)
        if len(seen) == spec.q - 1:
            return g
    raise AssertionError(f"GF({spec.q}) multiplicative group is not cyclic")
