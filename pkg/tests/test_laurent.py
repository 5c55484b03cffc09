import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vbraid.laurent import ONE, T, T_INV, ZERO, LaurentPoly, lp_add, lp_is_unit, lp_mul


def poly(d):
    return LaurentPoly(d)


polys = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-20, max_value=20),
    max_size=6,
).map(LaurentPoly)


class TestAdd:
    def test_cancellation(self):
        assert lp_add(poly({0: 1, 1: -1}), T) == ONE

    def test_additive_identity(self):
        one_minus_t = poly({0: 1, 1: -1})
        assert lp_add(ZERO, one_minus_t) == one_minus_t

    def test_partial_cancellation(self):
        assert lp_add(poly({-1: 1, 1: 1}), poly({1: -1})) == T_INV


class TestMul:
    def test_unit_times_inverse(self):
        assert lp_mul(poly({1: -1}), poly({-1: -1})) == ONE

    def test_multiplicative_identity(self):
        one_minus_t = poly({0: 1, 1: -1})
        assert lp_mul(one_minus_t, ONE) == one_minus_t

    def test_square(self):
        # (1 - t)^2 = 1 - 2t + t^2, convolved by hand
        one_minus_t = poly({0: 1, 1: -1})
        assert lp_mul(one_minus_t, one_minus_t) == poly({0: 1, 1: -2, 2: 1})


class TestIsUnit:
    def test_minus_t(self):
        assert lp_is_unit(poly({1: -1})) == (-1, 1)

    def test_one(self):
        assert lp_is_unit(ONE) == (1, 0)

    def test_two_terms_not_a_unit(self):
        assert lp_is_unit(poly({0: 1, 1: -1})) is None

    def test_non_unit_coefficient(self):
        assert lp_is_unit(poly({3: 2})) is None

    def test_unit_times_its_inverse_is_one(self):
        rng = random.Random(7)
        for _ in range(50):
            s, k = rng.choice((1, -1)), rng.randrange(-5, 6)
            a = LaurentPoly.t_power(k, s)
            sk = lp_is_unit(a)
            assert sk == (s, k)
            assert lp_mul(a, LaurentPoly.t_power(-k, s)) == ONE


def test_canonical_form_never_stores_zero():
    rng = random.Random(1)
    for _ in range(200):
        a = LaurentPoly({rng.randrange(-5, 6): rng.randrange(-3, 4) for _ in range(4)})
        b = LaurentPoly({rng.randrange(-5, 6): rng.randrange(-3, 4) for _ in range(4)})
        for result in (a + b, a * b, -a, a - b):
            assert all(c != 0 for c in result.terms.values())


def test_ring_axioms_randomized():
    rng = random.Random(2)

    def rand():
        return LaurentPoly(
            {rng.randrange(-4, 5): rng.randrange(-9, 10) for _ in range(rng.randrange(5))}
        )

    for _ in range(1000):
        a, b, c = rand(), rand(), rand()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a


@given(polys, polys)
def test_product_degree_span(a, b):
    if a.is_zero() or b.is_zero():
        assert (a * b).is_zero()
    else:
        p = a * b
        if not p.is_zero():
            span = p.max_degree() - p.min_degree()
            assert span <= (a.max_degree() - a.min_degree()) + (
                b.max_degree() - b.min_degree()
            )


@given(polys)
def test_json_round_trip(a):
    assert LaurentPoly.from_json(a.to_json()) == a


def test_json_encoding_shape():
    one_minus_t = poly({0: 1, 1: -1})
    assert json.loads(one_minus_t.to_json()) == {"0": "1", "1": "-1"}


def test_str_forms():
    assert str(ZERO) == "0"
    assert str(poly({0: 1, 1: -1})) == "1 + -1*t^1"
    assert str(poly({-2: 3})) == "3*t^-2"


def test_exact_div():
    a = poly({0: 1, 1: -2, 2: 1})
    b = poly({0: 1, 1: -1})
    assert a.exact_div(b) == b
    with pytest.raises(ValueError):
        poly({0: 1, 1: 1}).exact_div(poly({0: 2}))
    with pytest.raises(ZeroDivisionError):
        ONE.exact_div(ZERO)


def test_pow():
    assert T**3 == poly({3: 1})
    assert poly({1: -1}) ** -2 == poly({-2: 1})
    assert poly({1: -1}) ** -3 == poly({-3: -1})
    with pytest.raises(ValueError):
        poly({0: 1, 1: 1}) ** -1
