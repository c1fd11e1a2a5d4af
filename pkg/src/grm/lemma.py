"""The exponent-sequence minimisation bounding the second weight from below.

For admissible sequences alpha (the set V) the objective is

    P1 - P2 = prod_i (q - alpha_i) - (q - gamma) * prod_{i >= a+2} (q - alpha_i)

with gamma = max(alpha_{a+1}, b). ``brute_force_min`` enumerates V;
``closed_form_mu`` is the four-case table.
"""
import itertools
from dataclasses import dataclass
from math import prod

import numpy as np

from .errors import BudgetExceeded, NotInV, ParameterOutOfRange, StructureMismatch
from .mpoly import DEFAULT_BUDGET, grid_chunks

MINIMIZER_CAP = 10_000


@dataclass(frozen=True)
class LemmaInstance:
    q: int
    n: int
    d: int

    def __post_init__(self):
        q, n, d = self.q, self.n, self.d
        if q < 3 or n < 3 or not q <= d <= (n - 1) * (q - 1):
            raise ParameterOutOfRange(
                f"(q, n, d) = ({q}, {n}, {d}) outside q>=3, n>=3, q<=d<=(n-1)(q-1)")

    @property
    def a(self):
        return self.d // (self.q - 1)

    @property
    def b(self):
        return self.d % (self.q - 1)

    @property
    def K(self):
        return self.d + 1 if self.b == 0 else self.d + self.q - self.b


def violated_constraint(alpha, inst):
    """Name of the first membership rule of V that alpha breaks, or None."""
    q, n, a, b = inst.q, inst.n, inst.a, inst.b
    if len(alpha) != n:
        return "length"
    if any(not 0 <= x <= q - 1 for x in alpha):
        return "range"
    if sum(alpha) > inst.K:
        return "budget"
    if all(x == q - 1 for x in alpha[:a]) and alpha[a] >= b:
        return "head"
    return None


def in_v(alpha, inst):
    return violated_constraint(alpha, inst) is None


def _raw_objective(alpha, q, a, b):
    gamma = max(alpha[a], b)
    return prod(q - x for x in alpha) - (q - gamma) * prod(q - x for x in alpha[a + 1:])


def objective(alpha, inst):
    alpha = tuple(alpha)
    why = violated_constraint(alpha, inst)
    if why is not None:
        raise NotInV(f"{alpha} is not admissible ({why})", why)
    return _raw_objective(alpha, inst.q, inst.a, inst.b)


def _box_objective(coords, inst):
    """Vectorised objective and membership mask over rows of ``coords``."""
    q, a, b = inst.q, inst.a, inst.b
    f = q - coords
    p1 = np.prod(f, axis=1)
    gamma = np.maximum(coords[:, a], b)
    p2 = (q - gamma) * np.prod(f[:, a + 1:], axis=1)
    head_full = np.all(coords[:, :a] == q - 1, axis=1)
    member = (coords.sum(axis=1) <= inst.K) & ~(head_full & (coords[:, a] >= b))
    return p1 - p2, member


@dataclass(frozen=True)
class MinResult:
    mu: int
    minimizers: tuple
    truncated: bool
    size_v: int


def brute_force_min(inst, budget=DEFAULT_BUDGET, cap=MINIMIZER_CAP):
    """Exhaustive minimum over V; minimizers listed in lexicographic order."""
    if inst.q**inst.n > budget:
        raise BudgetExceeded(f"q^n = {inst.q ** inst.n} exceeds the enumeration budget {budget}")
    mu, mins, size_v, truncated = None, [], 0, False
    for coords in grid_chunks(inst.q, inst.n, budget):
        val, member = _box_objective(coords, inst)
        size_v += int(np.count_nonzero(member))
        if not member.any():
            continue
        low = int(val[member].min())
        rows = coords[member & (val == low)]
        if mu is None or low < mu:
            mu, mins, truncated = low, [], False
        if low == mu:
            for r in rows:
                if len(mins) >= cap:
                    truncated = True
                    break
                mins.append(tuple(int(x) for x in r))
    return MinResult(mu, tuple(mins), truncated, size_v)


def closed_form_mu(inst):
    q, n, a, b = inst.q, inst.n, inst.a, inst.b
    if b == 0:
        return (q - 2) * q ** (n - a - 1)
    if b == 1:
        if a < n - 2:
            return (q - 1) * q ** (n - a - 3)
        return (q - 2) * q ** (n - a - 2)
    return (b - 1) * q ** (n - a - 2)


def canonical_order(alpha, inst):
    """Sort the head non-increasing; sort the tail from a+2 (alpha_{a+1} < b)
    or from a+1 (alpha_{a+1} >= b) non-increasing."""
    a, b = inst.a, inst.b
    head = sorted(alpha[:a], reverse=True)
    if alpha[a] < b:
        return tuple(head + [alpha[a]] + sorted(alpha[a + 1:], reverse=True))
    return tuple(head + sorted(alpha[a:], reverse=True))


def canonical_shapes(inst):
    """The minimiser shapes described for each case, as (name, sequence) pairs."""
    q, n, a, b = inst.q, inst.n, inst.a, inst.b

    def pad(seq):
        return tuple(seq) + (0,) * (n - len(seq))

    full = [q - 1] * a
    dented = [q - 1] * (a - 1) + [q - 2]
    shapes = []
    if b == 0:
        shapes.append(("b=0", pad(dented + [2])))
    elif b == 1:
        if a + 3 <= n:
            shapes.append(("b=1, alpha_{a+1}=0", pad(full + [0, q - 1, 1])))
        shapes.append(("b=1, alpha_{a+1}>=b", pad(dented + [q - 1, 2])))
    else:
        shapes.append(("2<=b, alpha_{a+1}=1", pad(full + [1, q - 1])))
        if a + 3 <= n:
            shapes.append(("2<=b, alpha_{a+1}=0", pad(full + [0, q - 1, 1])))
        shapes.append(("2<=b, alpha_{a+1}>=b", pad(dented + [q - 1, 2])))
    return shapes


@dataclass(frozen=True)
class StructureReport:
    shape: str
    witness: tuple
    mu: int
    minimizer_count: int
    truncated: bool


def check_minimizer_structure(inst, budget=DEFAULT_BUDGET):
    """Match the brute-force minimisers, canonically reordered, against the listed shapes."""
    res = brute_force_min(inst, budget)
    canon = {canonical_order(m, inst) for m in res.minimizers}
    for name, seq in canonical_shapes(inst):
        if seq in canon:
            return StructureReport(name, seq, res.mu, len(res.minimizers), res.truncated)
    raise StructureMismatch(
        f"no minimiser of {inst} has a canonical shape; minimisers: {sorted(canon)[:5]}")


# -------------------------------------------------------------- structural properties
# Each check enumerates V and returns a list of counterexamples (empty = holds).

def admissible(inst):
    return [a for a in _box(inst) if in_v(a, inst)]


def _box(inst):
    return itertools.product(range(inst.q), repeat=inst.n)


def _val(alpha, inst):
    return _raw_objective(alpha, inst.q, inst.a, inst.b)


def _swap(alpha, i, j):
    s = list(alpha)
    s[i], s[j] = s[j], s[i]
    return tuple(s)


def check_fct1(inst, V=None):
    """Objective is invariant under the permutations that preserve its formula."""
    V = admissible(inst) if V is None else V
    a, b, n = inst.a, inst.b, inst.n
    bad = []
    for alpha in V:
        v = _val(alpha, inst)
        perms = {tuple(p) + alpha[a:] for p in itertools.permutations(alpha[:a])}
        if alpha[a] < b:
            perms |= {alpha[:a + 1] + tuple(p) for p in itertools.permutations(alpha[a + 1:])}
        else:
            perms |= {_swap(alpha, a, i) for i in range(a + 1, n) if alpha[i] >= b}
        bad += [(alpha, p) for p in perms if _val(p, inst) != v]
    return bad


def check_fct2(inst, V=None):
    """Raising one coordinate inside V strictly lowers the objective."""
    V = admissible(inst) if V is None else V
    bad = []
    for alpha in V:
        for i in range(inst.n):
            up = alpha[:i] + (alpha[i] + 1,) + alpha[i + 1:]
            if in_v(up, inst) and not _val(up, inst) < _val(alpha, inst):
                bad.append((alpha, up))
    return bad


def check_fct3(inst):
    """Some minimiser uses the whole budget: sum(alpha) = K."""
    res = brute_force_min(inst)
    return [] if any(sum(m) == inst.K for m in res.minimizers) else list(res.minimizers)


def check_fct4(inst, V=None):
    """Swapping a head entry with a larger later entry never raises the objective."""
    V = admissible(inst) if V is None else V
    a, n = inst.a, inst.n
    bad = []
    for alpha in V:
        for i in range(a):
            for j in range(a, n):
                if alpha[j] > alpha[i]:
                    s = _swap(alpha, i, j)
                    if in_v(s, inst) and _val(s, inst) > _val(alpha, inst):
                        bad.append((alpha, s))
    return bad


def _fct5_case(i, j, alpha, inst):
    a, b = inst.a, inst.b
    # 0-based: head is 0..a-1, position a is alpha_{a+1}, tail a+1..n-1
    return ((0 <= j < i <= a - 1)
            or (a + 1 <= j < i)
            or (alpha[a] >= b and a <= j < i)
            or (j <= a - 1 and i >= a + 1))


def check_fct5(inst, V=None):
    """Moving one unit from a smaller entry to a larger one strictly lowers the objective."""
    V = admissible(inst) if V is None else V
    q, n = inst.q, inst.n
    bad = []
    for alpha in V:
        for i in range(n):
            for j in range(n):
                if i == j or not (1 <= alpha[i] <= alpha[j] <= q - 2):
                    continue
                if not _fct5_case(i, j, alpha, inst):
                    continue
                s = list(alpha)
                s[i] -= 1
                s[j] += 1
                s = tuple(s)
                if in_v(s, inst) and not _val(s, inst) < _val(alpha, inst):
                    bad.append((alpha, s))
    return bad
