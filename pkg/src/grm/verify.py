"""Sweep suites comparing every closed form against an independent oracle.

Each suite returns a list of ``Check`` records; a suite passes when every
record does. All comparisons are exact integer equalities or inequalities.
"""
import itertools
from dataclasses import asdict, dataclass

import numpy as np

from . import arrange, grmcode, lemma
from .errors import ExchangeNotApplicable
from .ffield import make_field
from .groebner import ideal_footprint, rational_points
from .mpoly import (DEFAULT_BUDGET, MultiPoly, batch_weights, count_points,
                    grlex_key, monomial_value_matrix, reduced_monomials)
from .rng import SplitMix64

LEMMA_Q = (3, 4, 5, 7, 8, 9)
LEMMA_N = (3, 4, 5)
DIMENSION_Q = (2, 3, 4, 5, 7, 8, 9)
DEFAULT_SEED = 42


@dataclass
class SweepConfig:
    q_set: tuple = LEMMA_Q
    n_set: tuple = LEMMA_N
    d_policy: object = "all-valid"
    seed: int = DEFAULT_SEED
    budget: int = DEFAULT_BUDGET
    samples: int = 10_000
    output_format: str = "json"
    output_path: str = None


@dataclass
class Check:
    task: str
    inputs: dict
    computed: object
    oracle: object
    passed: bool

    def as_dict(self):
        return asdict(self)


def _degrees(cfg, lo, hi):
    if cfg.d_policy == "all-valid":
        return range(lo, hi + 1)
    return [d for d in cfg.d_policy if lo <= d <= hi]


def lemma_cells(cfg):
    for q in cfg.q_set:
        for n in cfg.n_set:
            if q >= 3 and n >= 3:
                for d in _degrees(cfg, q, (n - 1) * (q - 1)):
                    yield q, n, d


# ------------------------------------------------------------------ suites

def suite_lemma(cfg, mu_fn=None):
    mu_fn = mu_fn or lemma.closed_form_mu
    out = []
    for q, n, d in lemma_cells(cfg):
        inst = lemma.LemmaInstance(q, n, d)
        res = lemma.brute_force_min(inst, cfg.budget)
        mu = mu_fn(inst)
        out.append(Check("lemma.mu", {"q": q, "n": n, "d": d}, mu, res.mu, mu == res.mu))
    return out


def suite_structure(cfg, fct_q=(3, 4), fct_n=(3, 4)):
    out = []
    for q, n, d in lemma_cells(cfg):
        inst = lemma.LemmaInstance(q, n, d)
        try:
            rep = lemma.check_minimizer_structure(inst, cfg.budget)
            out.append(Check("lemma.shape", {"q": q, "n": n, "d": d},
                             rep.shape, list(rep.witness), True))
        except lemma.StructureMismatch:
            res = lemma.brute_force_min(inst, cfg.budget)
            out.append(Check("lemma.shape", {"q": q, "n": n, "d": d}, None,
                             [list(m) for m in res.minimizers[:8]], False))
    for q in fct_q:
        for n in fct_n:
            for d in range(q, (n - 1) * (q - 1) + 1):
                inst = lemma.LemmaInstance(q, n, d)
                V = lemma.admissible(inst)
                for name, fn in (("fct1", lemma.check_fct1), ("fct2", lemma.check_fct2),
                                 ("fct4", lemma.check_fct4), ("fct5", lemma.check_fct5)):
                    bad = fn(inst, V)
                    out.append(Check(f"lemma.{name}", {"q": q, "n": n, "d": d},
                                     len(bad), 0, not bad))
                bad = lemma.check_fct3(inst)
                out.append(Check("lemma.fct3", {"q": q, "n": n, "d": d},
                                 [list(m) for m in bad[:8]], [], not bad))
    return out


def suite_arrangements(cfg, q_set=None, n_set=None):
    out = []
    for q in q_set or cfg.q_set:
        for n in n_set or cfg.n_set:
            if q < 3:
                continue
            for t in arrange.enumerate_types(q, n, n * (q - 1)):
                formula = arrange.n_points_type(t)
                grid = arrange.n_points_grid(arrange.Arrangement.realize(t), cfg.budget)
                out.append(Check("arrange.formula", {"q": q, "n": n, "blocks": list(t.block_sizes)},
                                 formula, grid, formula == grid))
    return out


def exchange_identities(q, n, d):
    """Every closed form and comparison formula that applies at (q, n, d).

    Yields (name, value from the type formula, closed form, strict positivity claimed).
    """
    a, b = divmod(d, q - 1)
    N = {}
    for kind in arrange.EXCHANGES:
        try:
            N[kind] = arrange.apply_exchange(q, n, d, kind)[1]
        except ExchangeNotApplicable:
            pass
    N1 = q**n - (q - b) * q ** (n - a - 1)
    p = lambda e: q**e
    if "T1" in N:
        yield "N(T1)", N["T1"], q**n - 2 * p(n - a - 1) * (q - b - 1), False
        yield "N1-N(T1)", N1 - N["T1"], p(n - a - 1) * (q - b - 2), True
    if "T2" in N:
        yield "N(T2)", N["T2"], q**n - 2 * p(n - a - 2) * (q - 1) * (q - b), False
        yield "N1-N(T2)", N1 - N["T2"], p(n - a - 2) * (q - b) * (q - 2), True
    if "T1" in N and "T2" in N and 1 <= a <= n - 2 and 1 <= b < q - 2:
        yield "N(T1)-N(T2)", N["T1"] - N["T2"], 2 * p(n - a - 2) * b, True
    if "T3" in N:
        yield "N(T3)", N["T3"], q**n - p(n - a - 2) * (q - 1) * (q - b + 1), False
        yield "N1-N(T3)", N1 - N["T3"], p(n - a - 2) * (b - 1), True
    if "T3" in N and "T1" in N and 2 <= b < q - 2:
        yield "N(T3)-N(T1)", N["T3"] - N["T1"], p(n - a - 2) * (q * q - (b + 2) * q - b + 1), True
    if "T3" in N and "T2" in N and b == q - 2:
        yield "N(T3)-N(T2)", N["T3"] - N["T2"], p(n - a - 2) * (q - 1), True
    if "T4" in N:
        yield "N(T4)", N["T4"], q**n - p(n - a), False
        yield "N1-N(T4)", N1 - N["T4"], p(n - a - 1), True
    if "T2" in N and "T4" in N and q == 3:
        yield "N(T2)-N(T4)", N["T2"] - N["T4"], 3 ** (n - a - 2), False
    if "T1" in N and "T4" in N and q >= 4:
        yield "N(T4)-N(T1)", N["T4"] - N["T1"], p(n - a - 1) * (q - 4), False


def suite_exchanges(cfg):
    out = []
    for q, n, d in lemma_cells(cfg):
        for name, got, want, positive in exchange_identities(q, n, d):
            ok = got == want and (got > 0 if positive else True)
            out.append(Check(f"exchange.{name}", {"q": q, "n": n, "d": d}, got, want, ok))
    return out


def suite_n2prime(cfg):
    out = []
    for q, n, d in lemma_cells(cfg):
        best = arrange.best_nonmaximal_type(q, n, d)
        table, kind = arrange.n2prime_table(q, n, d)
        inputs = {"q": q, "n": n, "d": d}
        out.append(Check("n2prime.table", inputs, best.n2prime, table, best.n2prime == table))
        # no non-maximal type beats the best exchanged one
        _, n_kind, _ = arrange.apply_exchange(q, n, d, kind)
        beaten = [t.block_sizes for t in arrange.enumerate_types(q, n, d)
                  if not arrange.is_maximal_type(t, d) and arrange.n_points_type(t) > n_kind]
        out.append(Check("n2prime.hyper", inputs, len(beaten), 0, not beaten))
    return out


def suite_bridge(cfg, mu_fn=None):
    mu_fn = mu_fn or lemma.closed_form_mu
    out = []
    for q, n, d in lemma_cells(cfg):
        inputs = {"q": q, "n": n, "d": d}
        sw = grmcode.second_weight(q, n, d)
        p = grmcode.grm_params(q, n, d)
        mu = mu_fn(lemma.LemmaInstance(q, n, d))
        a = p.a
        if sw.exact:
            n2 = arrange.best_nonmaximal_type(q, n, d).n2prime
            out.append(Check("bridge.w2_vs_arrangement", inputs, sw.value, q**n - n2, sw.value == q**n - n2))
            out.append(Check("bridge.w2_vs_mu", inputs, sw.value, mu + p.w1, sw.value == mu + p.w1))
        else:
            out.append(Check("bridge.lo_vs_mu", inputs, sw.lo, mu + p.w1, sw.lo == mu + p.w1))
            out.append(Check("bridge.hi", inputs, sw.hi, q ** (n - a), sw.hi == q ** (n - a)))
            if a == n - 2:
                out.append(Check("bridge.lo_a=n-2", inputs, sw.lo, q * q - 2, sw.lo == q * q - 2))
    return out


def suite_dimension(cfg, q_set=DIMENSION_Q, n_max=5):
    out = []
    for q in q_set:
        for n in range(1, n_max + 1):
            for d in range(1, n * (q - 1)):
                k = grmcode.grm_params(q, n, d).k
                o = grmcode.dimension_oracle(q, n, d)
                out.append(Check("dimension", {"q": q, "n": n, "d": d}, k, o, k == o))
    return out


def suite_witness(cfg, q_set=DIMENSION_Q, n_max=5, max_grid=10**6):
    out = []
    for q in q_set:
        for n in range(1, n_max + 1):
            if q**n > min(max_grid, cfg.budget):
                continue
            for d in range(1, n * (q - 1)):
                f = grmcode.maximal_config_poly(q, n, d)
                w = count_points(f, cfg.budget).weight
                w1 = grmcode.grm_params(q, n, d).w1
                out.append(Check("witness.w1", {"q": q, "n": n, "d": d}, w, w1, w == w1))
    return out


# ------------------------------------------------------------------ random polynomials

def random_reduced_coeffs(rng, q, monomials, d):
    """One coefficient per monomial; redraw until some degree-d coefficient is nonzero."""
    top = [j for j, m in enumerate(monomials) if sum(m) == d]
    while True:
        cs = [rng.below(q) for _ in monomials]
        if any(cs[j] for j in top):
            return cs


def random_poly(rng, field, n, max_degree):
    """Coefficients drawn for every monomial of total degree <= max_degree (not reduced)."""
    monos = sorted((m for m in itertools.product(range(max_degree + 1), repeat=n)
                    if sum(m) <= max_degree), key=grlex_key, reverse=True)
    while True:
        f = MultiPoly(field, n, {m: rng.below(field.q) for m in monos})
        if not f.is_zero():
            return f


def sample_weights(q, n, d, samples, seed, budget=DEFAULT_BUDGET):
    F = make_field(q)
    monos = reduced_monomials(q, n, d)
    rng = SplitMix64(seed)
    coeffs = np.array([random_reduced_coeffs(rng, q, monos, d) for _ in range(samples)],
                      dtype=np.int64)
    return batch_weights(F, monomial_value_matrix(F, n, monos, budget), coeffs)


def suite_sampling(cfg, cells=((3, 3, 4), (4, 3, 5))):
    out = []
    for q, n, d in cells:
        inputs = {"q": q, "n": n, "d": d, "seed": cfg.seed, "samples": cfg.samples}
        sw = grmcode.second_weight(q, n, d)
        w1 = grmcode.grm_params(q, n, d).w1
        w2 = sw.value if sw.exact else sw.lo
        ws = sample_weights(q, n, d, cfg.samples, cfg.seed, cfg.budget)
        gap = [int(w) for w in ws if w != 0 and w != w1 and w < w2]
        out.append(Check("sampling.gap", inputs, len(gap), 0, not gap))
        if sw.exact and q >= 3 and n >= 3 and q <= d <= (n - 1) * (q - 1):
            _, kind = arrange.n2prime_table(q, n, d)
            t = arrange.exchange_type(q, n, d, kind)
            f = arrange.Arrangement.realize(t).polynomial()
            w = count_points(f, cfg.budget).weight
            out.append(Check("sampling.attained", {**inputs, "kind": kind,
                                                   "blocks": list(t.block_sizes)},
                             w, w2, w == w2))
    return out


def suite_footprint(cfg, q=3, n_set=(2, 3), count=100, max_degree=4):
    F = make_field(q)
    rng = SplitMix64(cfg.seed)
    out = []
    for n in n_set:
        for s in range(count):
            f = random_poly(rng, F, n, max_degree)
            _, rep = ideal_footprint([f], cfg.budget)
            pts = rational_points([f], cfg.budget)
            out.append(Check("footprint.points", {"q": q, "n": n, "sample": s, "poly": str(f)},
                             rep.delta_size, pts, rep.delta_size == pts))
    return out


SUITES = {
    "lemma": suite_lemma,
    "structure": suite_structure,
    "arrangements": suite_arrangements,
    "exchanges": suite_exchanges,
    "n2prime": suite_n2prime,
    "bridge": suite_bridge,
    "dimension": suite_dimension,
    "witness": suite_witness,
    "sampling": suite_sampling,
    "footprint": suite_footprint,
}


def run_suite(name, cfg):
    if name == "all":
        return [c for key in SUITES for c in SUITES[key](cfg)]
    return SUITES[name](cfg)
