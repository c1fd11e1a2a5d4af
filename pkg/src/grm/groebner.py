"""Graded-lex Groebner machinery over GF(q).

Division, S-polynomials, the Buchberger criterion and completion, footprint
counting and the footprint-based weight bound. Internally polynomials are
handled as ``{monomial: coef}`` dicts; the public surface takes MultiPoly.
"""
from collections import deque
from dataclasses import dataclass
from math import prod

import numpy as np

from .errors import (BudgetExceeded, InvalidExponent, IterationCapExceeded,
                     LengthMismatch, ZeroPolynomial)
from .mpoly import (DEFAULT_BUDGET, MultiPoly, divides, evaluate_grid,
                    grid_chunks, grlex_key, mono_div, mono_lcm, mono_mul)

DEFAULT_ITERATION_CAP = 10_000


def grlex_less(m1, m2):
    """True iff m1 precedes m2 in graded-lex order (strict)."""
    if len(m1) != len(m2):
        raise LengthMismatch(f"monomials of lengths {len(m1)} and {len(m2)}")
    return grlex_key(m1) < grlex_key(m2)


def _lead(p):
    m = max(p, key=grlex_key)
    return m, p[m]


def _sub_scaled(field, p, c, shift, g):
    """p -= c * X^shift * g, in place on the dict p."""
    for gm, gc in g.items():
        m = mono_mul(shift, gm)
        v = field.sub(p.get(m, 0), field.mul(c, gc))
        if v:
            p[m] = v
        else:
            p.pop(m, None)


def _divide(field, f, divisors, with_quotients=True):
    leads = [_lead(g) for g in divisors]
    quotients = [{} for _ in divisors]
    p = dict(f)
    r = {}
    while p:
        m, c = _lead(p)
        for i, (gm, gc) in enumerate(leads):
            if divides(gm, m):
                shift = mono_div(m, gm)
                coef = field.mul(c, field.inv(gc))
                if with_quotients:
                    quotients[i][shift] = field.add(quotients[i].get(shift, 0), coef)
                _sub_scaled(field, p, coef, shift, divisors[i])
                break
        else:
            r[m] = c
            del p[m]
    return quotients, r


def _as_dicts(polys):
    return [g.as_dict() for g in polys]


def _ring(polys):
    if not polys:
        raise ValueError("need at least one polynomial")
    F, n = polys[0].field, polys[0].n
    for g in polys:
        if g.n != n or g.field.q != F.q:
            raise LengthMismatch("polynomials live in different rings")
    return F, n


def divide(f, divisors):
    """Division of f by the ordered list ``divisors``.

    Returns ``(quotients, remainder)`` with ``f = sum(a_i * f_i) + r``; no
    monomial of r is divisible by any divisor's leading monomial. When several
    leading monomials divide, the lowest list index wins.
    """
    F, n = _ring([f, *divisors])
    if any(g.is_zero() for g in divisors):
        raise ZeroPolynomial("division by the zero polynomial")
    qs, r = _divide(F, f.as_dict(), _as_dicts(divisors))
    return [MultiPoly(F, n, a) for a in qs], MultiPoly(F, n, r)


def _spoly(field, f, g):
    fm, fc = _lead(f)
    gm, gc = _lead(g)
    L = mono_lcm(fm, gm)
    s = {}
    _sub_scaled(field, s, field.neg(field.inv(fc)), mono_div(L, fm), f)
    _sub_scaled(field, s, field.inv(gc), mono_div(L, gm), g)
    return s


def s_polynomial(f, g):
    """(L/lt f)*f - (L/lt g)*g with L = lcm(lm f, lm g)."""
    F, n = _ring([f, g])
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("S-polynomial of the zero polynomial")
    return MultiPoly(F, n, _spoly(F, f.as_dict(), g.as_dict()))


def coprime(m1, m2):
    return all(not (x and y) for x, y in zip(m1, m2))


def is_groebner(basis, skip_coprime=True):
    """Buchberger criterion: every S-polynomial reduces to 0 modulo the list."""
    F, _ = _ring(basis)
    gs = _as_dicts(basis)
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            if skip_coprime and coprime(_lead(gs[i])[0], _lead(gs[j])[0]):
                continue
            _, r = _divide(F, _spoly(F, gs[i], gs[j]), gs, with_quotients=False)
            if r:
                return False
    return True


def _monic(field, p):
    _, c = _lead(p)
    inv = field.inv(c)
    return {m: field.mul(v, inv) for m, v in p.items()}


def _interreduce(field, gs):
    gs = sorted(gs, key=lambda g: grlex_key(_lead(g)[0]))
    # minimal basis: drop members whose leading monomial is divisible by another's
    kept = []
    for g in gs:
        lm = _lead(g)[0]
        if not any(divides(_lead(h)[0], lm) for h in kept):
            kept.append(g)
    out = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1:]
        lm, lc = _lead(g)
        rest = {m: c for m, c in g.items() if m != lm}
        _, r = _divide(field, rest, others, with_quotients=False) if others and rest else (None, rest)
        r[lm] = lc
        out.append(_monic(field, r))
    return out


def buchberger(basis, iteration_cap=DEFAULT_ITERATION_CAP):
    """Complete ``basis`` to the reduced monic Groebner basis of the same ideal.

    Pairs are processed first-in first-out; pairs with coprime leading
    monomials are skipped. The result is sorted by increasing leading monomial.
    """
    F, n = _ring(basis)
    gs = [g.as_dict() for g in basis if not g.is_zero()]
    if not gs:
        raise ZeroPolynomial("basis has no nonzero member")
    pairs = deque((i, j) for j in range(len(gs)) for i in range(j))
    steps = 0
    while pairs:
        steps += 1
        if steps > iteration_cap:
            raise IterationCapExceeded(f"more than {iteration_cap} S-pair reductions")
        i, j = pairs.popleft()
        if coprime(_lead(gs[i])[0], _lead(gs[j])[0]):
            continue
        _, r = _divide(F, _spoly(F, gs[i], gs[j]), gs, with_quotients=False)
        if r:
            gs.append(_monic(F, r))
            k = len(gs) - 1
            pairs.extend((t, k) for t in range(k))
    return [MultiPoly(F, n, g) for g in _interreduce(F, gs)]


def field_equations(field, n):
    """X_i^q - X_i for i = 1..n."""
    q = field.q
    out = []
    for i in range(n):
        hi = tuple(q if k == i else 0 for k in range(n))
        lo = tuple(1 if k == i else 0 for k in range(n))
        out.append(MultiPoly(field, n, {hi: 1, lo: field.neg(1)}))
    return out


@dataclass(frozen=True)
class FootprintReport:
    generators_lm: tuple
    delta_size: int
    box_bound: int


def footprint_size(lms, q, n, budget=DEFAULT_BUDGET):
    """Count exponent vectors in [0, q-1]^n divisible by none of ``lms``.

    Restricting to the box is the same as adding X_i^q to the generators.
    """
    lms = [tuple(m) for m in lms]
    for m in lms:
        if len(m) != n:
            raise LengthMismatch(f"monomial {m} is not in {n} variables")
    delta = 0
    for coords in grid_chunks(q, n, budget):
        hit = np.zeros(len(coords), dtype=bool)
        for m in lms:
            hit |= np.all(coords >= np.array(m), axis=1)
        delta += int(np.count_nonzero(~hit))
    return FootprintReport(tuple(lms), delta, q)


def ideal_footprint(polys, budget=DEFAULT_BUDGET, iteration_cap=DEFAULT_ITERATION_CAP):
    """Groebner basis of <polys, X_i^q - X_i> and the size of its footprint."""
    F, n = _ring(polys)
    if F.q**n > budget:
        raise BudgetExceeded(f"q^n = {F.q**n} exceeds the enumeration budget {budget}")
    G = buchberger([*polys, *field_equations(F, n)], iteration_cap)
    return G, footprint_size([g.lm() for g in G], F.q, n, budget)


def rational_points(basis, budget=DEFAULT_BUDGET):
    """Number of points of GF(q)^n where every polynomial of ``basis`` vanishes."""
    F, n = _ring(basis)
    count = 0
    for coords in grid_chunks(F.q, n, budget):
        ok = np.ones(len(coords), dtype=bool)
        for g in basis:
            ok &= evaluate_grid(g, coords) == 0
        count += int(np.count_nonzero(ok))
    return count


def weight_lower_bound(u, q, n, d, extra=None):
    """Weight bound read off the footprint of a leading monomial X^u.

    Without ``extra`` this is prod(q - u_i). With ``extra`` = exponents of a
    second leading monomial M it is the inclusion-exclusion count
    ``(q-b) q^(n-a-1) + prod(q - alpha_i) - (q - gamma) prod_{i>a+1}(q - alpha_i)``
    with gamma = max(b, alpha_{a+1}).
    """
    u = tuple(u)
    if len(u) != n:
        raise LengthMismatch(f"exponent vector has {len(u)} entries, expected {n}")
    for e in u:
        if e < 0 or e >= q:
            raise InvalidExponent(f"exponent {e} outside 0..{q - 1}")
    if extra is None:
        return prod(q - e for e in u)
    alpha = tuple(extra)
    if len(alpha) != n:
        raise LengthMismatch(f"M has {len(alpha)} exponents, expected {n}")
    for e in alpha:
        if e < 0 or e >= q:
            raise InvalidExponent(f"exponent {e} of M outside 0..{q - 1}")
    a, b = divmod(d, q - 1)
    if a >= n:
        raise InvalidExponent(f"d = {d} leaves no variable after the full blocks")
    if all(e == q - 1 for e in alpha[:a]) and alpha[a] >= b:
        raise InvalidExponent("M is divisible by X1^(q-1)...Xa^(q-1)X(a+1)^b")
    gamma = max(b, alpha[a])
    w1 = (q - b) * q ** (n - a - 1)
    return w1 + prod(q - e for e in alpha) - (q - gamma) * prod(q - e for e in alpha[a + 1:])
