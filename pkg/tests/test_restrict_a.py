"""Restriction coefficients on ordinary Grassmannians."""

import random
from fractions import Fraction

import pytest

from eqpieri.errors import InputError
from eqpieri.polyring import Polynomial
from eqpieri.restrict_a import (
    has_middle_difference,
    instance_value,
    middle_difference_possible,
    restriction_coefficient,
    restriction_coefficient_symfn,
    restriction_instance,
    schur_identity_check,
)
from eqpieri.schubert import Space, enumerate_symbols, leq, special_symbol


def t(i, n):
    return Polynomial.variable(i, n)


def test_frozen_values_on_gr68():
    space = Space("A", 6, 8)
    assert restriction_coefficient(space, (1, 3, 4, 6, 7, 8), 2) == (
        t(2, 8) - t(1, 8)
    ) * (t(5, 8) - t(1, 8))
    assert restriction_coefficient(space, (1, 3, 5, 6, 7, 8), 2) == (
        t(2, 8) - t(1, 8)
    ) * (t(4, 8) - t(1, 8))
    assert restriction_coefficient(space, (1, 2, 3, 5, 6, 8), 2) == (
        t(4, 8) - t(1, 8)
    ) * (t(7, 8) - t(1, 8))
    assert restriction_coefficient(space, (1, 2, 3, 4, 6, 8), 2) == (
        t(5, 8) - t(1, 8)
    ) * (t(7, 8) - t(1, 8))


def test_frozen_value_on_gr47():
    space = Space("A", 4, 7)
    assert restriction_coefficient(space, (1, 3, 4, 6), 2) == (
        t(5, 7) - t(1, 7)
    ) * (t(7, 7) - t(1, 7))


def test_instance_shape():
    inst = restriction_instance(Space("A", 2, 6), (2, 3), 2)
    assert inst.I1 == (1, 2, 3) and inst.I2 == (4, 5, 6)
    assert inst.a == (2, 3) and inst.b == (4, 5, 6) and inst.r == 2
    value = instance_value(inst)
    assert len(value.terms) > 0 and value.is_homogeneous() and value.degree() == 2
    with pytest.raises(InputError):
        restriction_instance(Space("C", 2, 3), (2, 3), 2)
    with pytest.raises(InputError):
        restriction_instance(Space("A", 2, 6), (2, 3), 0)


def test_edge_cases():
    space = Space("A", 2, 6)
    assert restriction_coefficient(space, (2, 3), 0) == Polynomial.one(6)
    assert restriction_coefficient(space, (2, 3), -1) == Polynomial.zero(6)
    assert restriction_coefficient(space, (2, 3), 5).is_zero  # beyond N - m
    # point not below the special symbol
    assert restriction_coefficient(space, (5, 6), 1).is_zero
    empty = Space("A", 0, 5)
    assert restriction_coefficient(empty, (), 0) == Polynomial.one(5)
    assert restriction_coefficient(empty, (), 2).is_zero


def test_support_matches_order_with_special_symbol():
    for N in range(2, 8):
        for m in range(1, N + 1):
            space = Space("A", m, N)
            for p in range(1, N - m + 1):
                s_p = special_symbol(space, p)[0]
                for nu in enumerate_symbols(space):
                    value = restriction_coefficient(space, nu, p)
                    assert value.is_zero == (not leq(space, nu, s_p))
                    if not value.is_zero:
                        assert value.is_homogeneous() and value.degree() == p


def test_subword_and_symmetric_function_forms_agree():
    for N in range(2, 8):
        for m in range(1, N + 1):
            space = Space("A", m, N)
            for p in range(1, min(3, N - m) + 1):
                for nu in enumerate_symbols(space):
                    assert restriction_coefficient(
                        space, nu, p
                    ) == restriction_coefficient_symfn(space, nu, p)


def test_values_positive_at_increasing_points():
    # every factor t_j - t_i has i < j, so any increasing point is positive
    space = Space("A", 3, 7)
    point = list(range(1, 8))
    for nu in enumerate_symbols(space):
        for p in range(1, 5):
            value = restriction_coefficient(space, nu, p)
            if not value.is_zero:
                assert value.evaluate(point) > 0


def test_matches_fixed_point_integration_numerically():
    # compare against the localization form: sum over j of
    # prod(t_b - t_{a_j}) / prod(t_{a_i} - t_{a_j}), at random points
    rng = random.Random(2024)
    for _ in range(40):
        N = rng.randint(3, 8)
        m = rng.randint(1, N - 1)
        space = Space("A", m, N)
        nu = tuple(sorted(rng.sample(range(1, N + 1), m)))
        p = rng.randint(1, N - m)
        point = rng.sample(range(-30, 31), N)
        inst = restriction_instance(space, nu, p)
        lhs = Fraction(0)
        for j in inst.a:
            num = Fraction(1)
            for i in inst.b:
                num *= point[i - 1] - point[j - 1]
            den = Fraction(1)
            for i in inst.a:
                if i != j:
                    den *= point[i - 1] - point[j - 1]
            lhs += num / den
        assert lhs == instance_value(inst).evaluate(point)


def test_schur_identity_random():
    rng = random.Random(11)
    for _ in range(50):
        r = rng.randint(1, 5)
        p = rng.randint(0, 5)
        xs = rng.sample(range(-20, 21), r)
        ys = [rng.randint(-20, 20) for _ in range(p + r - 1)]
        assert schur_identity_check(xs, ys)
    with pytest.raises(InputError):
        schur_identity_check([1, 1], [2, 3])


def test_middle_difference_guard():
    # exhaustive agreement between the scan and its closed form
    for N in (4, 6, 8):
        for m in range(1, N):
            space = Space("A", m, N)
            for nu in enumerate_symbols(space):
                for p in range(1, N - m + 1):
                    inst = restriction_instance(space, nu, p)
                    assert has_middle_difference(inst) == middle_difference_possible(
                        inst
                    ), (N, m, nu, p)
    # a concrete occurrence: Gr(1,4), nu = {2}, p = 2
    inst = restriction_instance(Space("A", 1, 4), (2,), 2)
    assert inst.a == (2,) and inst.b[0] == 3
    assert has_middle_difference(inst)
