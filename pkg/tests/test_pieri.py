"""Structure coefficients: worked values, invariants, and branch behavior."""

import os

import pytest

from eqpieri.diagram import arrow, build
from eqpieri.errors import InputError
from eqpieri.gkm import GkmEngine
from eqpieri.pieri import (
    compute_pieri,
    family_twist_images,
    pieri_coefficient,
    pieri_expansion,
    positivity_certificate,
    specialization_images,
    swap_wall_letters,
)
from eqpieri.polyring import Polynomial
from eqpieri.schubert import (
    Space,
    codim,
    enumerate_symbols,
    pieri_bound,
    special_symbol,
)

GR38 = Space("A", 3, 8)
SG38 = Space("C", 3, 4)
SG26 = Space("C", 2, 3)
OG27 = Space("B", 2, 3)
OG26 = Space("D", 2, 3)
OG28 = Space("D", 2, 4)
OG18 = Space("D", 1, 4)


def t(i, n):
    return Polynomial.variable(i, n)


def test_ordinary_grassmannian_worked_value():
    value = pieri_coefficient(GR38, (1, 4, 8), (1, 3, 6), 5)
    assert value == (t(2, 8) - t(1, 8)) * (t(5, 8) - t(1, 8))


def test_symplectic_worked_value_and_terms():
    result = compute_pieri(SG38, (2, 4, 8), (1, 3, 5), 5)
    assert result.value == Polynomial.constant(4, 4) * t(1, 4) * t(1, 4)
    assert [term.subset for term in result.terms] == [(), (2,), (4,), (2, 4)]
    x = [None] + [t(i, 8) for i in range(1, 9)]
    expected = {
        (): (x[1] - x[5]) * (x[1] - x[7]),
        (2,): (x[1] - x[2]) * (x[1] - x[5]),
        (4,): (x[1] - x[4]) * (x[1] - x[7]),
        (2, 4): (x[1] - x[2]) * (x[1] - x[4]),
    }
    for term in result.terms:
        assert term.unspecialized == expected[term.subset]


def test_odd_orthogonal_halving_worked_value():
    result = compute_pieri(OG27, (3, 6), (1, 6), 3)
    assert result.value == t(1, 3) * t(3, 3) + t(1, 3) * t(1, 3)
    assert result.diagram.branch == "halving"
    assert result.diagram.nu_plus() == (1, 3, 4, 6)


def test_even_orthogonal_restriction_worked_value():
    result = compute_pieri(OG18, (2,), (1,), 4)
    x = [None] + [t(i, 4) for i in range(1, 5)]
    expected = (-x[1] - x[2]) * (
        (-x[4] - x[2]) * (x[4] - x[2]) + (-x[2] - x[1]) * (-x[3] - x[1])
    )
    assert result.value == expected
    assert result.diagram.branch == "orthogonal_restriction"
    assert result.diagram.m_prime == 2


def test_values_are_homogeneous_of_the_expected_degree():
    for space in (SG26, OG26):
        symbols = enumerate_symbols(space)
        for lam in symbols:
            for mu in symbols:
                for p in range(1, pieri_bound(space) + 1):
                    value = pieri_coefficient(space, lam, mu, p)
                    if value.is_zero:
                        continue
                    assert value.is_homogeneous()
                    assert value.degree() == codim(space, lam) + p - codim(space, mu)


def test_symplectic_classical_coefficients_count_subsets():
    # at t = 0 and top degree the coefficient is 2^(#Q)
    space = SG26
    symbols = enumerate_symbols(space)
    for lam in symbols:
        for mu in symbols:
            if not arrow(space, lam, mu):
                continue
            for p in range(1, pieri_bound(space) + 1):
                if codim(space, mu) != codim(space, lam) + p:
                    continue
                value = pieri_coefficient(space, lam, mu, p)
                d = build(space, lam, mu, p)
                assert value.constant_term() == 2 ** len(d.Q)


def test_second_family_matches_the_twisted_swap():
    # the tilde coefficient is the t_n -> -t_n twist of the swapped plain one
    space = OG28
    p = 2
    for lam, mu in (((4, 8), (3, 7)), ((5, 8), (2, 8)), ((3, 7), (2, 5)), ((2, 6), (1, 5))):
        plain = pieri_coefficient(
            space, swap_wall_letters(space, lam), swap_wall_letters(space, mu), p
        )
        tilde = pieri_coefficient(space, lam, mu, p, tilde=True)
        assert tilde == plain.substitute(family_twist_images(space.n))


def test_second_family_expansion_matches_the_oracle():
    # multiplying by the class of the opposite family, checked by localization
    space = OG26
    p = space.n - space.m
    s_tilde = swap_wall_letters(space, special_symbol(space, p)[0])
    engine = GkmEngine(space)
    for lam in enumerate_symbols(space):
        expansion = engine.product_expansion(lam, s_tilde)
        computed = pieri_expansion(space, lam, p, tilde=True)
        assert computed == {mu: v for mu, v in expansion.items() if not v.is_zero}


def test_critical_degree_family_sensitivity():
    # at p = n - m the two families see different Schubert classes
    assert pieri_coefficient(OG28, (4, 8), (3, 7), 2).is_zero
    assert pieri_coefficient(OG28, (4, 8), (3, 7), 2, tilde=True) == Polynomial.one(4)
    assert pieri_coefficient(OG28, (4, 8), (2, 8), 2) == Polynomial.one(4)
    assert pieri_coefficient(OG28, (4, 8), (4, 8), 2) == (
        t(2, 4) * t(3, 4)
        + t(2, 4) * t(4, 4)
        + t(3, 4) * t(4, 4)
        + t(4, 4) * t(4, 4)
    )


def test_halving_branch_is_always_exact():
    # every halving-branch pair on OG(2,7) specializes to an even polynomial
    space = OG27
    symbols = enumerate_symbols(space)
    seen = 0
    for lam in symbols:
        for mu in symbols:
            if not arrow(space, lam, mu):
                continue
            for p in range(1, pieri_bound(space) + 1):
                if codim(space, mu) > codim(space, lam) + p:
                    continue
                d = build(space, lam, mu, p)
                if d.branch != "halving":
                    continue
                pieri_coefficient(space, lam, mu, p)  # would raise if odd
                seen += 1
    assert seen > 0


def test_dropped_column_choice_does_not_matter():
    cases = [
        (OG27, (5, 7), (1, 6), 3),
        (OG27, (5, 7), (1, 6), 4),
        (OG27, (2, 7), (1, 3), 3),
        (OG28, (6, 8), (1, 7), 4),
        (OG28, (6, 8), (1, 7), 5),
        (OG28, (2, 8), (1, 3), 5),
    ]
    for space, lam, mu, p in cases:
        d = build(space, lam, mu, p)
        assert len(d.Q) >= 2
        values = {
            pieri_coefficient(space, lam, mu, p, chat=c).render() for c in d.Q
        }
        assert len(values) == 1


def test_pivot_choice_does_not_matter():
    cases = [
        (SG26, (3, 6), (1, 5), 3, [(1,), (2,)]),
        (SG26, (3, 5), (1, 4), 3, [(2,), (3,)]),
        (SG26, (2, 6), (1, 5), 2, [(1,), (2,)]),
    ]
    for space, lam, mu, p, pivots in cases:
        values = {
            pieri_coefficient(space, lam, mu, p, pivot=P).render() for P in pivots
        }
        assert len(values) == 1


def test_chevalley_degree_matches_localization():
    for space in (Space("A", 2, 5), SG26, OG26):
        engine = GkmEngine(space)
        symbols = enumerate_symbols(space)
        for lam in symbols:
            expansion = engine.product_expansion(lam, special_symbol(space, 1)[0])
            for mu in symbols:
                mine = pieri_coefficient(space, lam, mu, 1)
                assert mine == expansion.get(mu, Polynomial.zero(engine.nvars))


def test_degree_zero_and_range_errors():
    assert pieri_coefficient(SG26, (3, 6), (3, 6), 0) == Polynomial.one(3)
    assert pieri_coefficient(SG26, (3, 6), (2, 6), 0).is_zero
    with pytest.raises(InputError, match="special-class range"):
        pieri_coefficient(SG26, (3, 6), (2, 6), 5)
    with pytest.raises(InputError, match="special-class range"):
        pieri_coefficient(SG26, (3, 6), (2, 6), -1)
    with pytest.raises(InputError, match="second special class"):
        pieri_coefficient(SG26, (3, 6), (2, 6), 1, tilde=True)
    with pytest.raises(InputError, match="second special class"):
        pieri_coefficient(OG28, (4, 8), (3, 7), 3, tilde=True)


def test_thread_count_does_not_change_the_bytes():
    result = pieri_coefficient(SG38, (2, 4, 8), (1, 3, 5), 5)
    for count in (2, 3, 8):
        assert pieri_coefficient(SG38, (2, 4, 8), (1, 3, 5), 5, threads=count) == result
    os.environ["EQPIERI_THREADS"] = "5"
    try:
        assert pieri_coefficient(SG38, (2, 4, 8), (1, 3, 5), 5) == result
    finally:
        del os.environ["EQPIERI_THREADS"]
    with pytest.raises(InputError, match="thread count"):
        pieri_coefficient(SG38, (2, 4, 8), (1, 3, 5), 5, threads=0)


def test_every_nonzero_small_space_value_is_certified_positive():
    for space in (SG26, OG26):
        symbols = enumerate_symbols(space)
        for lam in symbols:
            for p in range(1, pieri_bound(space) + 1):
                for mu, value in pieri_expansion(space, lam, p).items():
                    certificate = positivity_certificate(space, value)
                    assert certificate.ok, (lam, mu, p, certificate.failure)


def test_specialization_images_shape():
    images = specialization_images(OG27)
    n, N = 3, 7
    assert images[n].is_zero  # the middle weight dies in type B
    assert images[0] == Polynomial.variable(1, n)
    assert images[N - 1] == -Polynomial.variable(1, n)
    with pytest.raises(InputError):
        specialization_images(GR38)
