import itertools

import pytest

from grm.errors import DivisionByZero, UnsupportedCardinality
from grm.ffield import SUPPORTED, field_arith, generator, make_field


def test_prime_field():
    F = make_field(3)
    assert (F.q, F.p, F.e, F.modulus) == (3, 3, 1, ())


def test_gf4_modulus():
    F = make_field(4)
    assert (F.q, F.p, F.e) == (4, 2, 2)
    assert F.modulus == (1, 1, 1)


def test_gf4_modulus_is_only_irreducible_quadratic():
    # monic quadratics x^2 + c1 x + c0 over GF(2) without a root in GF(2)
    irreducible = [(c0, c1, 1) for c0 in range(2) for c1 in range(2)
                   if all((x * x + c1 * x + c0) % 2 for x in range(2))]
    assert irreducible == [make_field(4).modulus]


@pytest.mark.parametrize("q", [1, 6, 10, 12, 17, 32, 49])
def test_unsupported(q):
    with pytest.raises(UnsupportedCardinality):
        make_field(q)


def test_examples():
    assert field_arith(make_field(3), "add", 2, 2) == 1
    t = 2  # digits (0, 1): the class of x
    assert field_arith(make_field(4), "mul", t, t) == 3  # t + 1
    assert field_arith(make_field(5), "inv", 2) == 3


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        make_field(7).inv(0)


@pytest.mark.parametrize("q", SUPPORTED)
def test_field_axioms_exhaustive(q):
    F = make_field(q)
    E = range(q)
    for a, b in itertools.product(E, E):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.sub(F.add(a, b), b) == a
    for a in E:
        assert F.add(a, 0) == a and F.mul(a, 1) == a and F.mul(a, 0) == 0
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
            assert F.inv(F.inv(a)) == a
    for a, b, c in itertools.product(E, E, E):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("q", SUPPORTED)
def test_multiplicative_group_cyclic(q):
    F = make_field(q)
    g = generator(F)
    powers, x = [], 1
    for _ in range(q - 1):
        x = F.mul(x, g)
        powers.append(x)
    assert sorted(powers) == list(range(1, q))


@pytest.mark.parametrize("q", [q for q in SUPPORTED if make_field(q).e > 1])
def test_extension_addition_is_digitwise(q):
    F = make_field(q)
    for a, b in itertools.product(range(q), range(q)):
        da = [(a // F.p**i) % F.p for i in range(F.e)]
        db = [(b // F.p**i) % F.p for i in range(F.e)]
        assert F.add(a, b) == sum(((x + y) % F.p) * F.p**i for i, (x, y) in enumerate(zip(da, db)))


def test_element_str():
    F = make_field(9)
    assert F.element_str(0) == "0"
    assert F.element_str(1) == "1"
    assert F.element_str(3) == "t"
    assert F.element_str(7) == "2t+1"
