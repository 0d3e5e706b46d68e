# -*- coding: UTF-8 -*-
#
# copyright: 2020-2022, Frederico Martins
# author: Frederico Martins <http://github.com/fscm>
# license: SPDX-License-Identifier: MIT

"""Tests for the lattice module."""

from fractions import Fraction
from itertools import product
from random import Random
from pytest import mark, raises
from . import __project__

MODULE = '_lattice'
lattice = __import__('{0}.{1}'.format(__project__, MODULE), fromlist=[''])
exactnum = __import__('{0}._exactnum'.format(__project__), fromlist=[''])

QF2 = exactnum.QF2
IDENTITY = [[1, 0], [0, 1]]


def _canonical(vector: list) -> tuple:
    """Representative of `{v, -v}` with a positive first nonzero entry.

    Args:
        vector (list): The vector.

    Returns:
        tuple: The representative.
    """
    first = next(value for value in vector if value)
    return tuple(vector) if first > 0 else tuple(-value for value in vector)


def _brute_force(gram: list, radius: Fraction, box: int) -> set:
    """Canonical integer vectors of a box inside a radius.

    Args:
        gram (list): Gram matrix.
        radius (Fraction): Squared radius.
        box (int): Largest absolute coordinate.

    Returns:
        set: The vectors.
    """
    n = len(gram)
    found = set()
    for coords in product(range(-box, box + 1), repeat=n):
        if any(coords):
            norm = sum(gram[i][j] * coords[i] * coords[j] for i in range(n) for j in range(n))
            if norm <= radius:
                found.add(_canonical(list(coords)))
    return found


def test__lattice_ok_presentation():
    """test__lattice_ok_presentation

    Test coordinates, membership and norms of a skewed basis of Z^2.
    """
    presentation = lattice.LatticePresentation([[1, 3], [0, 1]], IDENTITY)
    assert presentation.dim == 2
    assert presentation.covolume() == 1
    assert presentation.coordinate_gram() == [[1, 3], [3, 10]]
    assert presentation.vector([1, 1]) == [4, 1]
    assert presentation.coordinates([4, 1]) == [1, 1]
    assert presentation.contains([7, -2])
    assert not presentation.contains([Fraction(1, 2), 0])
    assert presentation.norm_sq([1, 1]) == 17
    with raises(lattice.RankDeficient):
        lattice.LatticePresentation([[1, 2], [2, 4]], IDENTITY)
    with raises(lattice.LatticeException):
        lattice.LatticePresentation(IDENTITY, [[1]])


def test__lattice_ok_hnf():
    """test__lattice_ok_hnf

    Test the Hermite normal form of generators of a lattice.
    """
    basis = lattice.hnf([[1, 3, 2], [0, 2, 4]])
    assert len(basis) == 2
    assert basis[1][0] == 0
    assert abs(exactnum.mat_det(basis)) == 2
    with raises(lattice.RankDeficient):
        lattice.hnf([[1, 2], [2, 4]])


def test__lattice_ok_sum_intersection():
    """test__lattice_ok_sum_intersection

    Test sums and intersections through their covolumes.
    """
    halves = [[Fraction(1, 2), 0], [0, Fraction(1, 2)]]
    doubles = [[2, 0], [0, 2]]
    total = lattice.lattice_sum(IDENTITY, halves)
    assert lattice.LatticePresentation(total, IDENTITY).covolume() == Fraction(1, 4)
    common = lattice.lattice_intersection(IDENTITY, doubles)
    assert lattice.LatticePresentation(common, IDENTITY).covolume() == 4
    mixed = lattice.lattice_intersection([[2, 0], [0, 1]], [[1, 0], [0, 3]])
    assert lattice.LatticePresentation(mixed, IDENTITY).covolume() == 6


def test__lattice_ok_adelic_space():
    """test__lattice_ok_adelic_space

    Test norms and height of an adelic space with one local matrix.
    """
    space = lattice.AdelicSpaceQ(IDENTITY, {5: [[1, 0], [0, 5]]})
    assert space.dim == 2
    assert sorted(space.local) == [5]
    assert space.local_norm(5, [1, Fraction(1, 5)]) == 1
    assert space.local_norm(5, [Fraction(1, 5), 0]) == 5
    assert space.local_norm(3, [Fraction(1, 3), 0]) == 3
    assert space.height_sq() == Fraction(1, 25)
    assert space.height().exact == Fraction(1, 5)
    with raises(lattice.SingularLocalMatrix):
        lattice.AdelicSpaceQ(IDENTITY, {3: [[1, 1], [1, 1]]})


def test__lattice_ok_realize_adelic():
    """test__lattice_ok_realize_adelic

    Test if the realised lattice is `Z x (1/5) Z`.
    """
    space = lattice.AdelicSpaceQ(IDENTITY, {5: [[1, 0], [0, 5]]})
    presentation = lattice.realize_adelic(space)
    assert presentation.covolume() == Fraction(1, 5)
    assert presentation.contains([0, Fraction(1, 5)])
    assert presentation.contains([3, Fraction(2, 5)])
    assert not presentation.contains([Fraction(1, 5), 0])
    assert not presentation.contains([0, Fraction(1, 25)])
    assert not presentation.contains([0, Fraction(1, 2)])
    plain = lattice.realize_adelic(lattice.AdelicSpaceQ(IDENTITY))
    assert plain.covolume() == 1


def test__lattice_ok_realize_adelic_two_primes():
    """test__lattice_ok_realize_adelic_two_primes

    Test a space with local matrices at two primes.
    """
    space = lattice.AdelicSpaceQ(
        IDENTITY, {2: [[2, 0], [0, 1]], 3: [[1, 0], [0, Fraction(1, 3)]]})
    presentation = lattice.realize_adelic(space)
    assert presentation.covolume() == Fraction(3, 2)
    assert presentation.contains([Fraction(1, 2), 3])
    assert not presentation.contains([Fraction(1, 2), 1])
    assert not presentation.contains([Fraction(1, 4), 3])


def test__lattice_ok_lll():
    """test__lattice_ok_lll

    Test if LLL recovers the standard basis from a skewed one.
    """
    skewed = lattice.LatticePresentation([[1, 100], [0, 1]], IDENTITY)
    reduced = lattice.lll(skewed)
    gram = reduced.coordinate_gram()
    assert gram[0][0] == 1
    assert gram[1][1] == 1
    assert gram[0][1] == 0
    assert reduced.covolume() == 1
    with raises(lattice.LatticeException, match='delta'):
        lattice.lll(skewed, Fraction(1, 4))


def test__lattice_ok_lll_quadratic_gram():
    """test__lattice_ok_lll_quadratic_gram

    Test LLL on a Gram matrix over Q(sqrt 2).
    """
    gram = [[1, 0], [0, QF2(0, 1, 2)]]
    skewed = lattice.LatticePresentation([[1, 7], [0, 1]], gram)
    reduced = lattice.lll(skewed)
    norms = sorted(
        (reduced.norm_sq(coords) for coords in ([1, 0], [0, 1])),
        key=lambda value: value.enclosure(64).lo)
    assert norms == [1, QF2(0, 1, 2)]
    with raises(lattice.NotPositiveDefinite):
        lattice.lll(lattice.LatticePresentation(IDENTITY, [[1, 0], [0, -1]]))


def test__lattice_ok_enumerate_within_oracle():
    """test__lattice_ok_enumerate_within_oracle

    Test enumeration against a brute force search.
    """
    gram = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    presentation = lattice.LatticePresentation(
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]], gram)
    for radius in (Fraction(2), Fraction(4), Fraction(6)):
        found = lattice.enumerate_within(presentation, radius)
        assert {vector.coords for vector in found} == _brute_force(gram, radius, 3)
        norms = [vector.norm_sq for vector in found]
        assert norms == sorted(norms, key=lambda value: value.rational())


def test__lattice_ok_enumerate_within_random_oracle():
    """test__lattice_ok_enumerate_within_random_oracle

    Test enumeration on seeded random lattices of dimension at most 3
    against a search of the ambient integer box.
    """
    generator = Random(7)
    checked = 0
    while checked < 200:
        n = generator.randint(1, 3)
        basis = [[generator.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        if exactnum.mat_det(basis) == 0:
            continue
        weights = [generator.randint(1, 2) for _ in range(n)]
        gram = [[weights[i] if i == j else 0 for j in range(n)] for i in range(n)]
        radius = Fraction(generator.randint(1, 10))
        presentation = lattice.LatticePresentation(basis, gram)
        found = lattice.enumerate_within(presentation, radius)
        ambient = [_canonical(presentation.vector(vector.coords)) for vector in found]
        expected = {
            vector for vector in _brute_force(gram, radius, 3)
            if presentation.contains(list(vector))}
        assert len(ambient) == len(set(ambient))
        assert set(ambient) == expected
        checked += 1


@mark.parametrize('threads', [1, 3])
def test__lattice_ok_enumerate_within_skewed(threads):
    """test__lattice_ok_enumerate_within_skewed

    Test enumeration on a skewed basis, with and without workers.

    Args:
        threads (int): Worker threads.
    """
    presentation = lattice.LatticePresentation([[1, 3], [0, 1]], IDENTITY)
    found = lattice.enumerate_within(presentation, 2, threads=threads)
    ambient = {_canonical(presentation.vector(vector.coords)) for vector in found}
    assert ambient == {(1, 0), (0, 1), (1, 1), (1, -1)}
    assert lattice.enumerate_within(presentation, -1) == []


def test__lattice_ok_enumerate_within_docstring():
    """test__lattice_ok_enumerate_within_docstring

    Test the order of the returned vectors.
    """
    space = lattice.AdelicSpaceQ([[2, 1], [1, 2]])
    presentation = lattice.realize_adelic(space)
    found = lattice.enumerate_within(presentation, 2)
    assert [vector.coords for vector in found] == [(0, 1), (1, -1), (1, 0)]


def test__lattice_ok_enumerate_within_quadratic_gram():
    """test__lattice_ok_enumerate_within_quadratic_gram

    Test enumeration with irrational norms.
    """
    presentation = lattice.LatticePresentation(IDENTITY, [[1, 0], [0, QF2(0, 1, 2)]])
    found = lattice.enumerate_within(presentation, 2)
    assert [vector.coords for vector in found] == [(1, 0), (0, 1)]
    assert found[1].norm_sq == QF2(0, 1, 2)


def test__lattice_ok_search_shortest():
    """test__lattice_ok_search_shortest

    Test the shortest vector satisfying a predicate, ranked by norm or
    by a key.
    """
    presentation = lattice.LatticePresentation(IDENTITY, IDENTITY)
    best = lattice.search_shortest(
        presentation, 25, lambda coords, _: all(coords))
    assert best.coords == (1, -1)
    assert best.norm_sq == 2
    keyed = lattice.search_shortest(
        presentation, 4, key=lambda vector: (-vector.coords[0], vector.coords))
    assert keyed.coords == (2, 0)
    assert lattice.search_shortest(presentation, 1, lambda coords, _: all(coords)) is None
    assert lattice.search_shortest(presentation, -1) is None


@mark.parametrize('threads', [1, 2])
def test__lattice_ok_search_shortest_threads(threads):
    """test__lattice_ok_search_shortest_threads

    Test if workers do not change the result.

    Args:
        threads (int): Worker threads.
    """
    gram = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    presentation = lattice.LatticePresentation(
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]], gram)
    best = lattice.search_shortest(
        presentation, 10, lambda coords, _: coords[2] != 0, threads=threads)
    assert best.norm_sq == 4
    assert best.coords[2] != 0


def test__lattice_ok_first_minimum():
    """test__lattice_ok_first_minimum

    Test first minima of rational and skewed lattices.
    """
    assert lattice.first_minimum(
        lattice.LatticePresentation(IDENTITY, [[2, 1], [1, 2]])) == 2
    assert lattice.first_minimum(
        lattice.LatticePresentation([[1, 100], [0, 1]], IDENTITY)) == 1
    assert lattice.first_minimum(
        lattice.LatticePresentation([[3, 1], [0, 5]], IDENTITY)) == 9


def test__lattice_ok_sublattice_height():
    """test__lattice_ok_sublattice_height

    Test heights of sublattices.
    """
    presentation = lattice.LatticePresentation(IDENTITY, IDENTITY)
    assert lattice.sublattice_height(presentation, [[1, 1]]).square == 2
    assert lattice.sublattice_height(presentation, [[1, 0], [0, 2]]).exact == 2
    with raises(lattice.LatticeException):
        lattice.sublattice_height(presentation, [[Fraction(1, 2), 0]])
    with raises(lattice.RankDeficient):
        lattice.sublattice_height(presentation, [[1, 1], [2, 2]])
