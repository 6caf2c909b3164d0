"""Symbols, codimensions, orders, and special classes on small spaces."""

import pytest

from eqpieri.errors import InputError
from eqpieri.schubert import (
    Space,
    codim,
    enumerate_symbols,
    leq,
    pieri_bound,
    preceq,
    special_symbol,
    type_of,
    validate_symbol,
)

GR25 = Space("A", 2, 5)
GR38 = Space("A", 3, 8)
SG26 = Space("C", 2, 3)
SG38 = Space("C", 3, 4)
OG27 = Space("B", 2, 3)
OG18 = Space("D", 1, 4)
OG28 = Space("D", 2, 4)

SMALL = [GR25, SG26, OG27, OG28]


def test_space_basics():
    assert GR38.ambient == 8 and GR38.dimension == 15 and GR38.name() == "Gr(3,8)"
    assert SG38.ambient == 8 and SG38.dimension == 12 and SG38.name() == "SG(3,8)"
    assert OG27.ambient == 7 and OG27.dimension == 7 and OG27.name() == "OG(2,7)"
    assert OG28.ambient == 8 and OG28.dimension == 9 and OG28.name() == "OG(2,8)"
    assert OG18.dimension == 6
    assert GR25.dimension == 6 and SG26.dimension == 7
    with pytest.raises(InputError):
        Space("E", 2, 4)
    with pytest.raises(InputError):
        Space("A", 6, 5)
    with pytest.raises(InputError):
        Space("D", 1, 1)
    with pytest.raises(InputError):
        Space("B", -1, 3)


def test_symbol_validation():
    assert validate_symbol(GR38, [1, 4, 8]) == (1, 4, 8)
    with pytest.raises(InputError, match="parts"):
        validate_symbol(GR38, [1, 4])
    with pytest.raises(InputError, match="outside"):
        validate_symbol(GR38, [0, 4, 8])
    with pytest.raises(InputError, match="not below"):
        validate_symbol(GR38, [4, 4, 8])
    with pytest.raises(InputError, match="isotropy"):
        validate_symbol(SG26, [3, 4])  # 3 + 4 = 7 = N + 1
    with pytest.raises(InputError, match="isotropy"):
        validate_symbol(OG27, [4, 6])  # 4 + 4 = 8 = N + 1
    # n + 1 is fine outside type B
    assert validate_symbol(OG28, [5, 8]) == (5, 8)


def test_codim_frozen_values():
    assert codim(GR38, [1, 4, 8]) == 8
    assert codim(GR38, [1, 3, 6]) == 11
    assert codim(SG38, [2, 4, 8]) == 6
    assert codim(SG38, [1, 3, 5]) == 9
    assert codim(OG27, [3, 6]) == 3
    assert codim(OG27, [1, 6]) == 4
    assert codim(OG18, [2]) == 5
    assert codim(OG18, [1]) == 6
    assert codim(OG18, [8]) == 0
    assert codim(OG28, [3, 7]) == 4
    assert codim(OG28, [1, 3]) == 8


def test_codim_range_and_extremes():
    for space in SMALL + [GR38, SG38, OG18]:
        symbols = enumerate_symbols(space)
        dim = space.dimension
        assert codim(space, symbols[0]) == 0
        point = tuple(range(1, space.m + 1))
        assert codim(space, point) == dim
        assert all(0 <= codim(space, s) <= dim for s in symbols)


def test_symbol_counts():
    assert len(enumerate_symbols(GR25)) == 10
    assert len(enumerate_symbols(SG26)) == 12
    assert len(enumerate_symbols(OG27)) == 12
    assert len(enumerate_symbols(OG28)) == 24
    assert enumerate_symbols(Space("A", 0, 4)) == [()]


def test_enumerate_sorted_by_codim_then_lex():
    for space in SMALL:
        syms = enumerate_symbols(space)
        keys = [(codim(space, s), s) for s in syms]
        assert keys == sorted(keys)


def test_leq_antitone_codim():
    # leq is weakly antitone; distinct comparable symbols of equal codim
    # exist in type D (opposite families), so strictness needs preceq
    for space in SMALL:
        syms = enumerate_symbols(space)
        for lam in syms:
            for mu in syms:
                if leq(space, mu, lam):
                    assert codim(space, mu) >= codim(space, lam)
                if preceq(space, mu, lam) and codim(space, mu) == codim(space, lam):
                    assert mu == lam


def test_partial_order_axioms():
    for space in SMALL:
        syms = enumerate_symbols(space)
        for a in syms:
            assert preceq(space, a, a)
        for a in syms:
            for b in syms:
                if preceq(space, a, b) and preceq(space, b, a):
                    assert a == b
                for c in syms:
                    if preceq(space, a, b) and preceq(space, b, c):
                        assert preceq(space, a, c)


def test_type_of_frozen_values():
    assert type_of(OG18, [2]) == 0
    assert type_of(OG18, [4]) == 2
    assert type_of(OG18, [5]) == 1
    assert type_of(OG28, [3, 7]) == 0
    assert type_of(OG28, [4, 8]) == 2
    assert type_of(OG28, [1, 4]) == 1
    with pytest.raises(InputError):
        type_of(SG26, [1, 2])


def test_preceq_refines_leq_in_type_d():
    # {4,8} and {5,8} are comparable for leq but lie in different families
    assert leq(OG28, [4, 8], [5, 8])
    assert type_of(OG28, [4, 8]) == 2
    assert type_of(OG28, [5, 8]) == 1
    assert not preceq(OG28, [4, 8], [5, 8])
    # outside type D the two orders agree
    for space in (GR25, SG26, OG27):
        syms = enumerate_symbols(space)
        for a in syms:
            for b in syms:
                assert leq(space, a, b) == preceq(space, a, b)


def test_pieri_bound():
    assert pieri_bound(GR25) == 3
    assert pieri_bound(GR38) == 5
    assert pieri_bound(SG26) == 4
    assert pieri_bound(SG38) == 5
    assert pieri_bound(OG27) == 4
    assert pieri_bound(OG28) == 5
    assert pieri_bound(OG18) == 6
    assert pieri_bound(Space("A", 0, 4)) == 0
    with pytest.raises(InputError):
        special_symbol(GR25, 4)
    with pytest.raises(InputError):
        special_symbol(GR25, -1)


def test_special_symbols_frozen():
    assert special_symbol(GR38, 5) == ((1, 7, 8), 1)
    assert special_symbol(GR38, 1) == ((5, 7, 8), 5)
    assert special_symbol(SG38, 5) == ((1, 6, 7), 1)
    assert special_symbol(OG27, 3) == ((2, 7), 2)
    assert [special_symbol(OG28, p)[0] for p in range(1, 6)] == [
        (6, 8),
        (4, 8),
        (3, 8),
        (2, 8),
        (1, 7),
    ]
    assert special_symbol(OG18, 6) == ((1,), 1)
    assert special_symbol(Space("A", 0, 4), 0) == ((), 0)


def test_special_symbol_codim_is_p():
    for space in SMALL + [GR38, SG38, OG18, Space("B", 1, 4), Space("C", 3, 3), Space("D", 3, 3)]:
        for p in range(0, pieri_bound(space) + 1):
            sym, np_ = special_symbol(space, p)
            assert codim(space, sym) == p, (space, p, sym)
            if p >= 1:
                assert sym[0] == np_


def test_fundamental_class_is_first():
    for space in SMALL:
        assert enumerate_symbols(space)[0] == special_symbol(space, 0)[0]
