"""Diagonal lattice container: validation and discretization."""

import pytest

from lattice_zeta.errors import ParameterDomainError
from lattice_zeta.lattices import DiagonalLattice


def test_basic_properties():
    lat = DiagonalLattice((1.0, 2.0, 0.5))
    assert lat.d == 3
    assert lat.det() == 1.0
    assert lat.a == (1.0, 2.0, 0.5)


def test_entries_coerced_to_float():
    lat = DiagonalLattice((1, 2))
    assert lat.a == (1.0, 2.0)


def test_rejects_bad_entries():
    with pytest.raises(ParameterDomainError):
        DiagonalLattice(())
    with pytest.raises(ParameterDomainError):
        DiagonalLattice((1.0, 0.0))
    with pytest.raises(ParameterDomainError):
        DiagonalLattice((-2.0,))


def test_sides_scaling():
    lat = DiagonalLattice((1.0, 2.0))
    assert lat.sides(3) == (3, 6)
    half = DiagonalLattice((0.5, 1.0))
    assert half.sides(4) == (2, 4)


def test_sides_must_be_integers():
    lat = DiagonalLattice((1.5,))
    assert lat.sides(2) == (3,)
    with pytest.raises(ParameterDomainError):
        lat.sides(3)


def test_sides_must_be_at_least_two():
    with pytest.raises(ParameterDomainError):
        DiagonalLattice((1.0,)).sides(1)
    with pytest.raises(ParameterDomainError):
        DiagonalLattice((1.0,)).sides(0)


def test_hashable_and_frozen():
    lat = DiagonalLattice((1.0, 2.0))
    assert hash(lat) == hash(DiagonalLattice((1.0, 2.0)))
    with pytest.raises(Exception):
        lat.a = (3.0,)
