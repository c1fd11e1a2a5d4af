"""Multivariate polynomials over GF(q) with graded-lex term order.

A monomial is a tuple of exponents ``(a1, ..., an)``. Graded-lex compares
total degree first, then the first differing exponent, so ``X1 > X2 > ...``
and the sort key of a monomial is simply ``(sum(m), m)``.
"""
import itertools
import re
from dataclasses import dataclass
from functools import total_ordering

import numpy as np

from .errors import (BudgetExceeded, CoefficientOutOfRange, LengthMismatch,
                     PolySyntaxError, VariableOutOfRange, ZeroPolynomial)

DEFAULT_BUDGET = 10**8
_CHUNK = 1 << 16


@total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial; below every integer, refuses arithmetic."""

    def __lt__(self, other):
        return not isinstance(other, _MinusInfinity)

    def __eq__(self, other):
        return isinstance(other, _MinusInfinity)

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()


def grlex_key(m):
    return (sum(m), tuple(m))


def monomial_str(m):
    parts = []
    for i, e in enumerate(m, 1):
        if e == 1:
            parts.append(f"X{i}")
        elif e > 1:
            parts.append(f"X{i}^{e}")
    return "*".join(parts) or "1"


def divides(m1, m2):
    return all(x <= y for x, y in zip(m1, m2))


def mono_lcm(m1, m2):
    return tuple(max(x, y) for x, y in zip(m1, m2))


def mono_mul(m1, m2):
    return tuple(x + y for x, y in zip(m1, m2))


def mono_div(m1, m2):
    return tuple(x - y for x, y in zip(m1, m2))


class MultiPoly:
    """Immutable polynomial; ``terms`` holds ``(coef, monomial)`` in strictly
    decreasing graded-lex order with every coefficient nonzero."""

    __slots__ = ("field", "n", "terms")

    def __init__(self, field, n, coeffs=None):
        # coeffs: mapping monomial -> field element; zeros are dropped
        terms = []
        if coeffs:
            for m, c in coeffs.items():
                if len(m) != n:
                    raise LengthMismatch(f"monomial {m} has {len(m)} exponents, expected {n}")
                if c:
                    terms.append((c, tuple(m)))
        terms.sort(key=lambda t: grlex_key(t[1]), reverse=True)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", tuple(terms))

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def zero(cls, field, n):
        return cls(field, n)

    @classmethod
    def constant(cls, field, n, c):
        return cls(field, n, {(0,) * n: c})

    @classmethod
    def monomial(cls, field, n, m, c=1):
        return cls(field, n, {tuple(m): c})

    @classmethod
    def variable(cls, field, n, i):
        """The variable X_i (1-based)."""
        m = [0] * n
        m[i - 1] = 1
        return cls(field, n, {tuple(m): 1})

    def as_dict(self):
        return {m: c for c, m in self.terms}

    def is_zero(self):
        return not self.terms

    def degree(self):
        if not self.terms:
            return MINUS_INFINITY
        return sum(self.terms[0][1])

    def lt(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        return self.terms[0]

    def lm(self):
        return self.lt()[1]

    def lc(self):
        return self.lt()[0]

    def _check(self, other):
        if self.n != other.n or self.field.q != other.field.q:
            raise LengthMismatch("polynomials live in different rings")

    def __add__(self, other):
        self._check(other)
        F = self.field
        acc = self.as_dict()
        for c, m in other.terms:
            acc[m] = F.add(acc.get(m, 0), c)
        return MultiPoly(F, self.n, acc)

    def __neg__(self):
        F = self.field
        return MultiPoly(F, self.n, {m: F.neg(c) for c, m in self.terms})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        if isinstance(other, int):
            return MultiPoly(F, self.n, {m: F.mul(c, other) for c, m in self.terms})
        self._check(other)
        acc = {}
        for c1, m1 in self.terms:
            for c2, m2 in other.terms:
                m = mono_mul(m1, m2)
                acc[m] = F.add(acc.get(m, 0), F.mul(c1, c2))
        return MultiPoly(F, self.n, acc)

    def mul_term(self, c, m):
        """Multiply by the single term c*X^m."""
        F = self.field
        return MultiPoly(F, self.n, {mono_mul(m, mm): F.mul(c, cc) for cc, mm in self.terms})

    def monic(self):
        if not self.terms:
            return self
        return self * self.field.inv(self.lc())

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.n == other.n
                and self.field.q == other.field.q and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field.q, self.n, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for c, m in self.terms:
            ms = monomial_str(m)
            if ms == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(ms)
            else:
                parts.append(f"{c}*{ms}")
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly(GF({self.field.q}), n={self.n}, {self})"


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|X(\d+)|(\^)|(\*)|([+-]))")


def _tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            ch = text[pos:].lstrip()[:1]
            at = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {ch!r}", at)
        start = pos + len(mt.group(0)) - len(mt.group(0).lstrip())
        if mt.group(1) is not None:
            out.append(("int", int(mt.group(1)), start))
        elif mt.group(2) is not None:
            out.append(("var", int(mt.group(2)), start))
        elif mt.group(3):
            out.append(("^", None, start))
        elif mt.group(4):
            out.append(("*", None, start))
        else:
            out.append(("sign", mt.group(5), start))
        pos = mt.end()
    return out


def parse_poly(text, n, field):
    """Parse the ASCII grammar ``2*X1^2*X2 + X3 + 1`` into a canonical MultiPoly.

    Coefficients are element indices in ``0..q-1``; ``-`` negates in the field.
    """
    toks = _tokenize(text)
    if not toks:
        raise PolySyntaxError("empty polynomial", 0)
    F = field
    acc = {}
    i = 0

    def peek(kind):
        return i < len(toks) and toks[i][0] == kind

    def where():
        return toks[i][2] if i < len(toks) else len(text.rstrip())

    negate = False
    if peek("sign"):
        negate = toks[i][1] == "-"
        i += 1
    while True:
        coef = 1
        exps = [0] * n
        have_factor = False
        if peek("int"):
            coef = toks[i][1]
            if coef >= F.q:
                raise CoefficientOutOfRange(f"coefficient {coef} outside 0..{F.q - 1}")
            i += 1
            if peek("*"):
                i += 1
            else:
                have_factor = None  # bare constant term
        if have_factor is not None:
            while True:
                if not peek("var"):
                    raise PolySyntaxError("expected a variable X<index>", where())
                idx = toks[i][1]
                if idx < 1 or idx > n:
                    raise VariableOutOfRange(f"X{idx} outside X1..X{n}")
                i += 1
                e = 1
                if peek("^"):
                    i += 1
                    if not peek("int"):
                        raise PolySyntaxError("expected an exponent", where())
                    e = toks[i][1]
                    i += 1
                exps[idx - 1] += e
                if peek("*"):
                    i += 1
                    continue
                break
        if negate:
            coef = F.neg(coef)
        m = tuple(exps)
        acc[m] = F.add(acc.get(m, 0), coef)
        if i == len(toks):
            break
        if not peek("sign"):
            raise PolySyntaxError("expected '+' or '-'", where())
        negate = toks[i][1] == "-"
        i += 1
        if i == len(toks):
            raise PolySyntaxError("dangling operator", where())
    return MultiPoly(F, n, acc)


# ---------------------------------------------------------------- functions on GF(q)^n

def reduce_exponent(e, q):
    return e if e < q else (e - 1) % (q - 1) + 1


def reduce_poly(f):
    """Rewrite with every partial degree <= q-1 using X^q = X."""
    q = f.field.q
    F = f.field
    acc = {}
    for c, m in f.terms:
        r = tuple(reduce_exponent(e, q) for e in m)
        acc[r] = F.add(acc.get(r, 0), c)
    return MultiPoly(F, f.n, acc)


def field_power(field, x, e):
    r = 1
    for _ in range(e):
        r = field.mul(r, x)
    return r


def evaluate(f, point):
    if len(point) != f.n:
        raise LengthMismatch(f"point has {len(point)} coordinates, expected {f.n}")
    F = f.field
    total = 0
    for c, m in f.terms:
        v = c
        for x, e in zip(point, m):
            if e:
                v = F.mul(v, field_power(F, x, e))
        total = F.add(total, v)
    return total


def leading_monomial(f):
    """(coefficient, monomial) of the graded-lex largest term."""
    return f.lt()


def power_table(field, max_exp):
    """``T[x, e] = x**e`` for x in GF(q), 0 <= e <= max_exp."""
    T = np.zeros((field.q, max_exp + 1), dtype=np.int64)
    T[:, 0] = 1
    for e in range(1, max_exp + 1):
        T[:, e] = field.mul_table[np.arange(field.q), T[:, e - 1]]
    return T


def grid_chunks(q, n, budget=DEFAULT_BUDGET, chunk=_CHUNK):
    """Yield coordinate blocks of GF(q)^n in row-major order (X1 slowest)."""
    total = q**n
    if total > budget:
        raise BudgetExceeded(f"q^n = {total} exceeds the enumeration budget {budget}")
    weights = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (idx[:, None] // weights[None, :]) % q


def evaluate_grid(f, coords):
    """Values of f at each row of ``coords`` (shape (P, n))."""
    F = f.field
    out = np.zeros(len(coords), dtype=np.int64)
    if not f.terms:
        return out
    T = power_table(F, max(max(m) for _, m in f.terms))
    for c, m in f.terms:
        v = np.full(len(coords), c, dtype=np.int64)
        for i, e in enumerate(m):
            if e:
                v = F.mul_table[v, T[coords[:, i], e]]
        out = F.add_table[out, v]
    return out


def coefficient_tensor(f):
    """Dense array C with C[e1, ..., en] the coefficient of X^e in reduce_poly(f)."""
    q = f.field.q
    C = np.zeros((q,) * f.n, dtype=np.int64)
    for c, m in reduce_poly(f).terms:
        C[m] = c
    return C


def function_table(f, budget=DEFAULT_BUDGET):
    """Values of f at every point of GF(q)^n, flattened in row-major order.

    Evaluates one variable at a time on the dense coefficient tensor, so the
    cost is n * q^(n+1) table lookups instead of (#terms) * q^n.
    """
    F, q, n = f.field, f.field.q, f.n
    if q**n > budget:
        raise BudgetExceeded(f"q^n = {q**n} exceeds the enumeration budget {budget}")
    T = coefficient_tensor(f)
    P = power_table(F, q - 1)                      # P[x, e] = x^e
    for axis in range(n):
        T = np.moveaxis(T, axis, -1)
        if F.e == 1:
            T = (T @ P.T) % q
        else:
            out = np.zeros_like(T)
            for x in range(q):
                acc = np.zeros(T.shape[:-1], dtype=np.int64)
                for e in range(q):
                    acc = F.add_table[acc, F.mul_table[T[..., e], P[x, e]]]
                out[..., x] = acc
            T = out
        T = np.moveaxis(T, -1, axis)
    return T.reshape(-1)


@dataclass(frozen=True)
class HypersurfaceCount:
    zeros: int
    weight: int
    q: int
    n: int


def count_points(f, budget=DEFAULT_BUDGET):
    """Zeros N(f) of f on GF(q)^n and the codeword weight q^n - N(f)."""
    q, n = f.field.q, f.n
    zeros = int(np.count_nonzero(function_table(f, budget) == 0))
    return HypersurfaceCount(zeros, q**n - zeros, q, n)


def reduced_monomials(q, n, max_degree=None):
    """All monomials with partial degrees <= q-1 (and total <= max_degree), grlex descending."""
    ms = itertools.product(range(q), repeat=n)
    if max_degree is not None:
        ms = (m for m in ms if sum(m) <= max_degree)
    return sorted(ms, key=grlex_key, reverse=True)


def monomial_value_matrix(field, n, monomials, budget=DEFAULT_BUDGET):
    """Row j holds X^monomials[j] evaluated at every grid point (row-major order)."""
    coords = np.concatenate(list(grid_chunks(field.q, n, budget)))
    T = power_table(field, max((max(m) for m in monomials), default=0))
    M = np.ones((len(monomials), len(coords)), dtype=np.int64)
    for j, m in enumerate(monomials):
        for i, e in enumerate(m):
            if e:
                M[j] = field.mul_table[M[j], T[coords[:, i], e]]
    return M


def batch_weights(field, value_matrix, coeffs, chunk=512):
    """Weights of the codewords ``sum_j coeffs[s, j] * row_j`` for every sample s."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    out = np.empty(len(coeffs), dtype=np.int64)
    for s in range(0, len(coeffs), chunk):
        block = coeffs[s:s + chunk]
        acc = np.zeros((len(block), value_matrix.shape[1]), dtype=np.int64)
        for j in range(value_matrix.shape[0]):
            acc = field.add_table[acc, field.mul_table[block[:, j][:, None], value_matrix[j][None, :]]]
        out[s:s + chunk] = np.count_nonzero(acc, axis=1)
    return out
