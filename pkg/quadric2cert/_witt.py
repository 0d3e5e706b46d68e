# -*- coding: UTF-8 -*-
#
# copyright: 2020-2022, Frederico Martins
# author: Frederico Martins <http://github.com/fscm>
# license: SPDX-License-Identifier: MIT

"""Witt module.

Rational isotropy of quadratic forms: a complete bounded search for
isotropic vectors, the Witt decomposition (hyperbolic planes split off
one isotropic vector at a time), representation of 1 and rational points
of the quadric `q = 1` by projection from a known point.

Anisotropy is certified by exhausting a box whose size is Cassels' bound
for small zeros of integral forms; definite forms are anisotropic by
their leading principal minors and skip the search.

The following is a simple usage example::

    >>> from ._forms import QuadForm
    >>> from ._witt import isotropic_vector, witt_index
    >>> isotropic_vector(QuadForm.diagonal([1, 1, -1]))
    (1, 0, 1)
    >>> witt_index(QuadForm.diagonal([1, -1, 3, 3])).index
    1

The module contains the following public classes:
    - SpherePoint -- A rational point of a quadric `q = 1`.
    - WittReport -- Witt decomposition of a regular form.
    - WittException -- Generic isotropy exception.

All other classes in this module are considered implementation details.
"""

from fractions import Fraction
from itertools import islice
from math import gcd, isqrt
from random import Random
from typing import Any, Iterator, NamedTuple, Optional, Sequence
from sympy import Matrix
from ._exactnum import QF2, Quadric2CertException, mat_mul, mat_transpose
from ._forms import AlgVector, QuadForm, eval_b, eval_q


__all__ = [
    'SpherePoint',
    'WittException',
    'WittReport',
    'extended_form',
    'extended_index',
    'isotropic_vector',
    'random_directions',
    'rational_points',
    'represents_one',
    'search_bound',
    'sphere_points',
    'witt_index']


class WittException(Quadric2CertException):
    """Generic isotropy exception."""


class SpherePoint(NamedTuple):
    """A point `alpha` with its exact value `q(alpha)` (always 1)."""

    alpha: AlgVector
    value: QF2

    def to_json(self) -> dict[str, Any]:
        """JSON form."""
        return {'alpha': self.alpha.to_json(), 'q': str(self.value)}


def _is_definite(q: QuadForm) -> bool:
    return q.is_positive_definite() or q.is_negative_definite()


def _ceil_root(base: int, n: int) -> int:
    """`ceil(base^((n-1)/2))` for a positive integer base."""
    value = base ** (n - 1)
    root = isqrt(value)
    return root if root * root == value else root + 1


def search_bound(q: QuadForm) -> int:
    """Half-width of a box that holds a zero of q if q is isotropic.

    For the integral multiple of q with entries `a_ij` this is the larger
    of `(3 * sum |a_ij|)^((n-1)/2)` and `(3 * n * max |a_ij|)^((n-1)/2)`.
    """
    form, _ = q.integral_multiple()
    n = form.dim
    entries = [abs(int(value)) for row in form.matrix for value in row]
    total, largest = sum(entries), max(entries)
    return max(
        _ceil_root(3 * total, n) if total else 1,
        _ceil_root(3 * n * largest, n) if largest else 1,
        1)


def _primitive(vector: Sequence[int]) -> tuple[int, ...]:
    divisor = 0
    for value in vector:
        divisor = gcd(divisor, value)
    vector = [value // divisor for value in vector]
    first = next(value for value in vector if value)
    return tuple(vector if first > 0 else [-value for value in vector])


class _ZeroSearch:
    """Box search for a canonical zero of an integral form.

    All coordinates but one are enumerated; the remaining one solves a
    quadratic equation. Candidates are ranked by the majorant
    `G+ = |A| + n * max|a_ij| * I` and then by descending coordinates;
    the box shrinks to what the best candidate so far allows. A known
    zero can seed the search.
    """

    __slots__ = (
        '_best', '_bound', '_free', '_key', '_least', '_majorant', '_matrix',
        '_n', '_pivot')

    def __init__(self, form: QuadForm, bound: int, seed: Optional[Sequence[int]] = None) -> None:
        self._matrix = [[int(value) for value in row] for row in form.matrix]
        self._n = form.dim
        largest = max(abs(value) for row in self._matrix for value in row)
        self._least = largest
        self._majorant = [
            [abs(value) + (self._n * largest if i == j else 0) for j, value in enumerate(row)]
            for i, row in enumerate(self._matrix)]
        self._pivot = next(i for i in range(self._n) if self._matrix[i][i])
        self._free = [i for i in range(self._n) if i != self._pivot]
        self._bound = bound
        self._best = None
        self._key = None
        if seed is not None:
            self._offer(list(seed))

    def _norm(self, vector: Sequence[int]) -> int:
        return sum(
            self._majorant[i][j] * vector[i] * vector[j]
            for i in range(self._n) for j in range(self._n)
            if vector[i] and vector[j])

    def _offer(self, vector: list[int]) -> None:
        if not any(vector) or max(abs(value) for value in vector) > self._bound:
            return
        vector = _primitive(vector)
        key = (self._norm(vector), tuple(-value for value in vector))
        if self._key is None or key < self._key:
            self._best, self._key = vector, key
            self._bound = min(self._bound, isqrt(key[0] // self._least))

    def _solve(self, vector: list[int]) -> None:
        k, a = self._pivot, self._matrix[self._pivot][self._pivot]
        linear = sum(self._matrix[k][j] * vector[j] for j in self._free)
        constant = sum(
            self._matrix[i][j] * vector[i] * vector[j]
            for i in self._free for j in self._free if vector[i] and vector[j])
        discriminant = linear * linear - a * constant
        if discriminant < 0:
            return
        root = isqrt(discriminant)
        if root * root != discriminant:
            return
        for numerator in {-linear + root, -linear - root}:
            if numerator % a == 0:
                vector[k] = numerator // a
                self._offer(list(vector))
        vector[k] = 0

    def _walk(self, depth: int, vector: list[int], weight: int, leading: bool) -> None:
        if self._key is not None and self._least * weight > self._key[0]:
            return
        if depth == len(self._free):
            self._solve(vector)
            return
        index = self._free[depth]
        value = 0
        while value <= self._bound:
            for signed in ((value,) if leading or not value else (value, -value)):
                vector[index] = signed
                self._walk(depth + 1, vector, weight + signed * signed, leading and signed == 0)
            value += 1
        vector[index] = 0

    def run(self) -> Optional[tuple[int, ...]]:
        """The canonical zero, or None."""
        self._walk(0, [0] * self._n, 0, True)
        return self._best


def isotropic_vector(q: QuadForm) -> Optional[tuple[int, ...]]:
    """Canonical primitive integral zero of q.

    Boxes of doubling width are searched until a zero shows up; the
    final pass covers the whole box of `search_bound`, seeded with it.

    Args:
        q (QuadForm): A regular form.

    Returns:
        tuple: A primitive `v != 0` with `q(v) = 0` and positive first
            nonzero coordinate, or None when q is anisotropic.

    Raises:
        WittException: If q is singular.
    """
    if not q.is_regular():
        raise WittException('isotropy is only decided for regular forms')
    if _is_definite(q):
        return None
    form, _ = q.integral_multiple()
    diagonal = [i for i in range(form.dim) if form.matrix[i][i] == 0]
    if len(diagonal) == form.dim:
        return tuple(int(i == 0) for i in range(form.dim))
    bound, width = search_bound(form), 1
    while True:
        found = _ZeroSearch(form, min(width, bound)).run()
        if found is not None:
            return _ZeroSearch(form, bound, seed=found).run()
        if width >= bound:
            return None
        width *= 2


def _unit(n: int, i: int) -> list[Fraction]:
    return [Fraction(int(i == j)) for j in range(n)]


def _partner(q: QuadForm, u: Sequence[Fraction]) -> list[Fraction]:
    n = q.dim
    for j in range(n):
        pairing = eval_b(q, u, _unit(n, j)).rational()
        if pairing:
            y = [value / pairing for value in _unit(n, j)]
            half = eval_q(q, y).rational() / 2
            return [yi - half * ui for yi, ui in zip(y, u)]
    raise WittException('an isotropic vector of a regular form pairs with some basis vector')


def _orthogonal_complement(q: QuadForm, vectors: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    rows = mat_mul([list(v) for v in vectors], [list(row) for row in q.matrix])
    kernel = Matrix(rows).nullspace()
    basis = []
    for column in kernel:
        values = [Fraction(int(value.p), int(value.q)) for value in column]
        basis.append(values)
    return basis


class WittReport:
    """Witt decomposition `q = H^index ⊥ q_an`.

    Args:
        form (QuadForm): The decomposed form.
        pairs (Sequence): Hyperbolic pairs `(u, w)` in ambient coordinates.
        anisotropic_basis (Sequence): Basis of the anisotropic residue.
    """

    __slots__ = ('_anisotropic_basis', '_form', '_pairs')

    def __init__(
            self,
            form: QuadForm,
            pairs: Sequence[tuple[Sequence[Fraction], Sequence[Fraction]]],
            anisotropic_basis: Sequence[Sequence[Fraction]]) -> None:
        self._form = form
        self._pairs = tuple((tuple(u), tuple(w)) for u, w in pairs)
        self._anisotropic_basis = tuple(tuple(v) for v in anisotropic_basis)

    @property
    def form(self) -> QuadForm:
        """QuadForm: the decomposed form."""
        return self._form

    @property
    def index(self) -> int:
        """int: the isotropy index i(q)."""
        return len(self._pairs)

    @property
    def hyperbolic_pairs(self) -> tuple[tuple[tuple[Fraction, ...], tuple[Fraction, ...]], ...]:
        """tuple: pairs `(u, w)` with `q(u) = q(w) = 0`, `b(u, w) = 1`."""
        return self._pairs

    @property
    def anisotropic_basis(self) -> tuple[tuple[Fraction, ...], ...]:
        """tuple: basis of the anisotropic residue."""
        return self._anisotropic_basis

    @property
    def anisotropic_form(self) -> Optional[QuadForm]:
        """QuadForm: q restricted to the residue (None when it is 0)."""
        if not self._anisotropic_basis:
            return None
        return self._form.restricted(self._anisotropic_basis)

    def verify(self) -> bool:
        """Re-check every identity of the decomposition exactly."""
        q = self._form
        for u, w in self._pairs:
            if eval_q(q, u) != 0 or eval_q(q, w) != 0 or eval_b(q, u, w) != 1:
                return False
        planes = [v for pair in self._pairs for v in pair]
        for v in self._anisotropic_basis:
            if any(eval_b(q, v, other) != 0 for other in planes):
                return False
        if 2 * self.index + len(self._anisotropic_basis) != q.dim:
            return False
        residue = self.anisotropic_form
        return residue is None or isotropic_vector(residue) is None

    def to_json(self) -> dict[str, Any]:
        """JSON form."""
        residue = self.anisotropic_form

        def vector(values: Sequence[Fraction]) -> list[str]:
            return [str(value) for value in values]
        return {
            'index': self.index,
            'hyperbolic_pairs': [
                {'u': vector(u), 'w': vector(w)} for u, w in self._pairs],
            'anisotropic_basis': [vector(v) for v in self._anisotropic_basis],
            'anisotropic_form': None if residue is None else residue.to_json()}

    def __repr__(self) -> str:
        return f'WittReport(index={self.index}, anisotropic={len(self._anisotropic_basis)})'


def witt_index(q: QuadForm) -> WittReport:
    """Witt decomposition of a regular form.

    Hyperbolic planes are split off found zeros until the residual form
    is anisotropic.

    Args:
        q (QuadForm): A regular form.

    Returns:
        WittReport: the decomposition.

    Raises:
        WittException: If q is singular.
    """
    if not q.is_regular():
        raise WittException('the Witt index is only computed for regular forms')
    basis = [_unit(q.dim, i) for i in range(q.dim)]
    form = q
    pairs = []
    while basis:
        zero = isotropic_vector(form)
        if zero is None:
            break
        u = [Fraction(value) for value in zero]
        w = _partner(form, u)
        columns = mat_transpose(basis)
        pairs.append((
            [sum(row[i] * u[i] for i in range(len(u))) for row in columns],
            [sum(row[i] * w[i] for i in range(len(w))) for row in columns]))
        residue = _orthogonal_complement(form, [u, w])
        basis = [
            [sum(row[i] * v[i] for i in range(len(v))) for row in columns]
            for v in residue]
        form = form.restricted(residue) if residue else None
    return WittReport(q, pairs, basis)


def extended_form(q: QuadForm) -> QuadForm:
    """`Q(x, y) = q(x) - y^2`."""
    return q.direct_sum(QuadForm.diagonal([-1]))


def represents_one(q: Optional[QuadForm]) -> Optional[AlgVector]:
    """A rational x with `q(x) = 1`.

    Args:
        q (QuadForm): A regular form (None stands for the zero space).

    Returns:
        AlgVector: the witness, or None if q does not represent 1.
    """
    if q is None:
        return None
    n = q.dim
    for i in range(n):
        if q.matrix[i][i] == 1:
            return AlgVector.of(_unit(n, i))
    zero = isotropic_vector(q)
    if zero is not None:
        u = [Fraction(value) for value in zero]
        w = _partner(q, u)
        return AlgVector.of([ui + wi / 2 for ui, wi in zip(u, w)])
    zero = isotropic_vector(extended_form(q))
    if zero is None:
        return None
    return AlgVector.of([Fraction(value, zero[-1]) for value in zero[:-1]])


def extended_index(report: WittReport) -> int:
    """i(Q) for `Q(x, y) = q(x) - y^2`, from the decomposition of q.

    It is i(q) + 1 exactly when the anisotropic residue of q takes the
    value 1.
    """
    return report.index + (represents_one(report.anisotropic_form) is not None)


def sphere_points(
        q: QuadForm,
        base: Any,
        directions: Sequence[Sequence[Any]]) -> list[SpherePoint]:
    """Second intersections of lines through a point of `q = 1`.

    For a direction m the line `base + s * m` meets the quadric again at
    `s = -2 b(base, m) / q(m)`; isotropic directions are skipped.

    Args:
        q (QuadForm): The form.
        base (AlgVector): A rational point with `q(base) = 1`.
        directions (Sequence): Rational directions.

    Returns:
        list: one SpherePoint per usable direction.

    Raises:
        WittException: If `q(base) != 1`.
    """
    base = AlgVector.of(base)
    if eval_q(q, base) != 1:
        raise WittException(f'the base point is not on q = 1: q = {eval_q(q, base)}')
    points = []
    for direction in directions:
        direction = AlgVector.of(direction)
        length = eval_q(q, direction)
        if length == 0:
            continue
        step = eval_b(q, base, direction) * -2 / length
        alpha = base + direction.scaled(step)
        value = eval_q(q, alpha)
        if value != 1:
            raise WittException(f'projection left the quadric: q = {value}')
        points.append(SpherePoint(alpha, value))
    return points


def _directions(n: int, seed: int, height: int) -> Iterator[list[int]]:
    generator = Random(seed)
    while True:
        direction = [generator.randint(-height, height) for _ in range(n)]
        if any(direction):
            yield direction


def random_directions(n: int, count: int, seed: int, height: int) -> list[list[int]]:
    """Nonzero integral directions with entries in [-height, height]."""
    return list(islice(_directions(n, seed, height), count))


def rational_points(
        q: QuadForm,
        count: int,
        seed: int,
        height: int) -> list[SpherePoint]:
    """Distinct rational points of `q = 1` from random directions.

    Raises:
        WittException: If q does not represent 1.
    """
    base = represents_one(q)
    if base is None:
        raise WittException('the form does not represent 1')
    points, seen = [], set()
    for direction in islice(_directions(q.dim, seed, height), 50 * count):
        if len(points) == count:
            break
        for point in sphere_points(q, base, [direction]):
            if point.alpha not in seen:
                seen.add(point.alpha)
                points.append(point)
    return points
