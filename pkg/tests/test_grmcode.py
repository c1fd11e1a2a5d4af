import itertools

import numpy as np
import pytest

from grm.errors import DegreeOutOfRange, RegimeNotCovered, UnsupportedCardinality
from grm.ffield import make_field
from grm.grmcode import (dimension_formula, dimension_oracle, grm_params,
                         maximal_config_poly, second_weight)
from grm.mpoly import (batch_weights, count_points, monomial_value_matrix, parse_poly,
                       reduced_monomials)
from grm.rng import SplitMix64
from grm.verify import random_reduced_coeffs, sample_weights


def all_weights(q, n, d):
    """Sorted distinct weights of RM_q(d, n) by enumerating every codeword."""
    F = make_field(q)
    monos = reduced_monomials(q, n, d)
    M = monomial_value_matrix(F, n, monos)
    coeffs = np.array(list(itertools.product(range(q), repeat=len(monos))), dtype=np.int64)
    return sorted(set(int(w) for w in batch_weights(F, M, coeffs)))


def test_params_examples():
    p = grm_params(3, 3, 4)
    assert (p.a, p.b, p.m, p.k, p.w1) == (2, 0, 27, 23, 3)
    p = grm_params(4, 3, 5)
    assert (p.a, p.b, p.m, p.w1) == (1, 2, 64, 8)
    assert p.k == dimension_oracle(4, 3, 5)
    with pytest.raises(DegreeOutOfRange):
        grm_params(3, 3, 6)
    with pytest.raises(DegreeOutOfRange):
        grm_params(3, 3, 0)
    with pytest.raises(UnsupportedCardinality):
        grm_params(6, 3, 2)


def test_dimension_oracle_examples():
    assert dimension_oracle(3, 3, 4) == 23
    assert dimension_oracle(5, 4, 0) == 1
    assert dimension_oracle(2, 3, 3) == 8


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dimension_three_ways(q, n):
    for d in range(1, n * (q - 1)):
        brute = sum(1 for e in itertools.product(range(q), repeat=n) if sum(e) <= d)
        assert dimension_formula(q, n, d) == dimension_oracle(q, n, d) == brute


def test_w1_is_true_minimum_on_small_codes():
    for q, n, d in [(2, 3, 1), (2, 4, 2), (3, 2, 1), (3, 2, 2), (3, 2, 3), (4, 2, 2), (3, 3, 2)]:
        ws = all_weights(q, n, d)
        assert ws[1] == grm_params(q, n, d).w1


@pytest.mark.parametrize("q,n,d,regime", [
    (3, 2, 1, "d=1"), (5, 2, 1, "d=1"), (2, 3, 1, "d=1"),
    (2, 4, 2, "q=2"), (2, 5, 2, "q=2"),
    (3, 2, 2, "d<q"), (4, 2, 2, "d<q"), (3, 3, 2, "d<q"), (4, 2, 3, "d<q"),
])
def test_second_weight_against_full_enumeration(q, n, d, regime):
    sw = second_weight(q, n, d)
    assert sw.regime == regime and sw.exact
    assert all_weights(q, n, d)[2] == sw.value


def test_d_less_than_q_formula_sign():
    # q^n - d q^(n-1) - (d-1) q^(n-2) would drop below the minimum distance
    q, n, d = 4, 2, 3
    assert q**n - d * q ** (n - 1) - (d - 1) * q ** (n - 2) < grm_params(q, n, d).w1
    assert second_weight(q, n, d).value == q**n - d * q ** (n - 1) + (d - 1) * q ** (n - 2)


def test_second_weight_examples():
    assert second_weight(4, 3, 5).as_dict() == {"kind": "exact", "value": 9}
    sw = second_weight(3, 4, 3)
    assert sw.as_dict() == {"kind": "interval", "lo": 20, "hi": 27}
    assert sw.regime == "b=1-interval"
    assert second_weight(3, 3, 4).value == 4
    sw = second_weight(4, 3, 4)
    assert (sw.lo, sw.hi) == (14, 16)


@pytest.mark.parametrize("q,n,d", [(2, 4, 3), (3, 2, 3), (3, 3, 5), (4, 3, 7), (5, 2, 6)])
def test_regime_not_covered(q, n, d):
    with pytest.raises(RegimeNotCovered):
        second_weight(q, n, d)


@pytest.mark.parametrize("q", [3, 4, 5, 7])
@pytest.mark.parametrize("n", [3, 4, 5])
def test_second_weight_exceeds_w1(q, n):
    for d in range(1, (n - 1) * (q - 1) + 1):
        sw = second_weight(q, n, d)
        w1 = grm_params(q, n, d).w1
        assert (sw.value if sw.exact else sw.lo) > w1
        if not sw.exact:
            assert sw.lo <= sw.hi == q ** (n - d // (q - 1))


def test_maximal_config_examples(gf3):
    f = maximal_config_poly(3, 3, 4)
    g = parse_poly("X1", 3, gf3) * parse_poly("X1 - 1", 3, gf3) \
        * parse_poly("X2", 3, gf3) * parse_poly("X2 - 1", 3, gf3)
    assert f == g and count_points(f).weight == 3
    f = maximal_config_poly(3, 3, 3)
    assert f == parse_poly("X1", 3, gf3) * parse_poly("X1 - 1", 3, gf3) * parse_poly("X2", 3, gf3)
    assert count_points(f).weight == 6
    f = maximal_config_poly(5, 3, 4)
    assert f.degree() == 4 and count_points(f).weight == 25 == grm_params(5, 3, 4).w1


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_maximal_config_weight_is_w1(q, n):
    for d in range(1, n * (q - 1)):
        f = maximal_config_poly(q, n, d)
        assert f.degree() == d
        assert count_points(f).weight == grm_params(q, n, d).w1


def test_random_coefficients_have_full_degree():
    q, n, d = 3, 3, 4
    monos = reduced_monomials(q, n, d)
    rng = SplitMix64(9)
    for _ in range(200):
        cs = random_reduced_coeffs(rng, q, monos, d)
        assert any(c for c, m in zip(cs, monos) if sum(m) == d)


@pytest.mark.parametrize("q,n,d", [(3, 3, 4), (4, 3, 5)])
def test_sampled_weights_avoid_the_gap(q, n, d):
    ws = sample_weights(q, n, d, 500, seed=3)
    w1, w2 = grm_params(q, n, d).w1, second_weight(q, n, d).value
    assert all(w == 0 or w == w1 or w >= w2 for w in ws)
    assert sample_weights(q, n, d, 50, seed=3).tolist() == ws[:50].tolist()
