# -*- coding: UTF-8 -*-
#
# copyright: 2020-2022, Frederico Martins
# author: Frederico Martins <http://github.com/fscm>
# license: SPDX-License-Identifier: MIT

"""Lattice module.

This module is the exact lattice engine of the package: LLL reduction
on a Gram matrix (rational or over a real quadratic field), complete
enumeration of the vectors inside a radius, the first minimum, Hermite
normal forms and the realisation of an adelic space over Q (one Gram
matrix at infinity plus finitely many local matrices) as a single
lattice of Q^n.

The following is a simple usage example::

    >>> from ._lattice import AdelicSpaceQ, enumerate_within, realize_adelic
    >>> space = AdelicSpaceQ([[2, 1], [1, 2]])
    >>> lattice = realize_adelic(space)
    >>> [vector.coords for vector in enumerate_within(lattice, 2)]
    [(0, 1), (1, -1), (1, 0)]

The module contains the following public classes:
    - AdelicSpaceQ -- Finitely supported adelic space over Q.
    - LatticePresentation -- Basis of a lattice with its Gram matrix.
    - ShortVector -- A lattice vector found by enumeration.
    - LatticeException -- Generic lattice exception.
    - RankDeficient -- Vectors that do not span a full-rank lattice.
    - SingularLocalMatrix -- A local matrix that is not invertible.

All other classes in this module are considered implementation details.
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import reduce
from math import ceil, floor, isqrt, lcm
from typing import Any, Callable, Iterable, NamedTuple, Optional, Sequence
from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form
from ._exactnum import (
    QF2,
    DomainError,
    Quadric2CertException,
    Real,
    mat_det,
    mat_identity,
    mat_inverse,
    mat_mul,
    mat_transpose,
    mat_vec,
    parse_rat)
from ._forms import NotPositiveDefinite, QuadForm, padic_abs, valuation


__all__ = [
    'AdelicSpaceQ',
    'LatticeException',
    'LatticePresentation',
    'RankDeficient',
    'ShortVector',
    'SingularLocalMatrix',
    'enumerate_within',
    'first_minimum',
    'hnf',
    'lattice_intersection',
    'lattice_sum',
    'lll',
    'realize_adelic',
    'search_shortest',
    'sublattice_height']


ENUMERATION_BITS = 64

Predicate = Callable[[tuple[int, ...], QF2], bool]


class LatticeException(Quadric2CertException):
    """Generic lattice exception."""


class RankDeficient(LatticeException):
    """Vectors that do not span a full-rank lattice."""


class SingularLocalMatrix(LatticeException):
    """A local matrix that is not invertible."""


class ShortVector(NamedTuple):
    """A lattice vector: coordinates in the basis and exact squared norm."""

    coords: tuple[int, ...]
    norm_sq: QF2


def _gram_rows(gram: Any) -> list[list[Any]]:
    matrix = gram.matrix if isinstance(gram, QuadForm) else gram
    return [
        [value if isinstance(value, QF2) else parse_rat(value) for value in row]
        for row in matrix]


class LatticePresentation:
    """Lattice of Q^n with a Euclidean structure.

    Args:
        basis (Sequence[Sequence]): Square invertible rational matrix by
            rows; its columns generate the lattice.
        gram (Sequence[Sequence] or QuadForm): Positive-definite Gram
            matrix of the ambient space (entries rational or QF2).

    Raises:
        RankDeficient: If the basis is singular.
    """

    __slots__ = ('_basis', '_coordinate_gram', '_gram')

    def __init__(self, basis: Sequence[Sequence[Any]], gram: Any) -> None:
        self._basis = tuple(tuple(parse_rat(value) for value in row) for row in basis)
        self._gram = tuple(tuple(row) for row in _gram_rows(gram))
        if len(self._gram) != len(self._basis):
            raise LatticeException('basis and Gram matrix of different dimensions')
        if mat_det(self._basis) == 0:
            raise RankDeficient('the basis is singular')
        self._coordinate_gram = None

    @property
    def basis(self) -> tuple[tuple[Fraction, ...], ...]:
        """tuple: basis matrix by rows (the vectors are its columns)."""
        return self._basis

    @property
    def dim(self) -> int:
        """int: dimension."""
        return len(self._basis)

    @property
    def gram(self) -> tuple[tuple[Any, ...], ...]:
        """tuple: ambient Gram matrix."""
        return self._gram

    @property
    def vectors(self) -> list[list[Fraction]]:
        """list: basis vectors."""
        return mat_transpose(self._basis)

    def coordinate_gram(self) -> list[list[Any]]:
        """Gram matrix in the lattice basis, `B^T G B`."""
        if self._coordinate_gram is None:
            self._coordinate_gram = mat_mul(
                mat_mul(mat_transpose(self._basis), self._gram), self._basis)
        return [list(row) for row in self._coordinate_gram]

    def covolume(self) -> Fraction:
        """|det B| (covolume for the standard structure of Q^n)."""
        return abs(Fraction(mat_det(self._basis)))

    def vector(self, coords: Sequence[int]) -> list[Fraction]:
        """Ambient coordinates of a lattice vector."""
        return mat_vec(self._basis, coords)

    def coordinates(self, vector: Sequence[Fraction]) -> list[Fraction]:
        """Coordinates of an ambient vector in the lattice basis."""
        return mat_vec(mat_inverse(self._basis), vector)

    def contains(self, vector: Sequence[Fraction]) -> bool:
        """Whether an ambient rational vector lies in the lattice."""
        return all(
            Fraction(value).denominator == 1 for value in self.coordinates(vector))

    def norm_sq(self, coords: Sequence[int]) -> QF2:
        """Exact squared norm of a lattice vector."""
        return _quadratic_value(self.coordinate_gram(), coords)

    def __repr__(self) -> str:
        return f'LatticePresentation(dim={self.dim})'


def _quadratic_value(gram: Sequence[Sequence[Any]], coords: Sequence[int]) -> QF2:
    total = QF2(0)
    for i, x in enumerate(coords):
        if not x:
            continue
        total = total + gram[i][i] * (x * x)
        for j in range(i + 1, len(coords)):
            if coords[j]:
                total = total + gram[i][j] * (2 * x * coords[j])
    return total


class AdelicSpaceQ:
    """Rigid adelic space over Q with finitely supported local data.

    The norm at infinity is `sqrt(x^T G x)`; at a prime p it is
    `|A_p x|_p` (max norm), the identity being used at every prime that
    has no local matrix.

    Args:
        gram (QuadForm or Sequence[Sequence]): Gram matrix G at infinity.
        local (dict, optional): Prime to invertible rational matrix A_p.
            Defaults to none.

    Raises:
        SingularLocalMatrix: If some A_p is singular.
    """

    __slots__ = ('_gram', '_local')

    def __init__(
            self,
            gram: Any,
            local: Optional[dict[int, Sequence[Sequence[Any]]]] = None) -> None:
        self._gram = tuple(tuple(row) for row in _gram_rows(gram))
        self._local = {}
        for p, matrix in sorted((local or {}).items()):
            rows = tuple(tuple(parse_rat(value) for value in row) for row in matrix)
            if len(rows) != len(self._gram) or mat_det(rows) == 0:
                raise SingularLocalMatrix(f'the local matrix at {p} is not invertible')
            self._local[int(p)] = rows

    @property
    def dim(self) -> int:
        """int: dimension."""
        return len(self._gram)

    @property
    def gram(self) -> tuple[tuple[Any, ...], ...]:
        """tuple: Gram matrix at infinity."""
        return self._gram

    @property
    def local(self) -> dict[int, tuple[tuple[Fraction, ...], ...]]:
        """dict: local matrices A_p."""
        return dict(self._local)

    def gram_form(self) -> QuadForm:
        """The Gram matrix at infinity as a form (rational grams only)."""
        return QuadForm([[QF2.of(value).rational() for value in row] for row in self._gram])

    def local_norm(self, p: int, vector: Sequence[Fraction]) -> Fraction:
        """`||x||_{E,p}`."""
        matrix = self._local.get(p)
        values = vector if matrix is None else mat_vec(matrix, vector)
        return max((padic_abs(value, p) for value in values), default=Fraction(0))

    def height_sq(self) -> QF2:
        """H(E)^2 = det G * prod_p |det A_p|_p^2, exactly."""
        value = QF2.of(mat_det(self._gram))
        for p, matrix in self._local.items():
            value = value * padic_abs(mat_det(matrix), p) ** 2
        return value

    def height(self) -> Real:
        """H(E)."""
        return Real.of(self.height_sq()).sqrt()

    def __repr__(self) -> str:
        return f'AdelicSpaceQ(dim={self.dim}, local={sorted(self._local)})'


def hnf(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    """Column Hermite normal form of an integer matrix.

    Args:
        matrix (Sequence[Sequence[int]]): Integer matrix by rows whose
            columns generate a lattice of full rank.

    Returns:
        list: Square upper triangular matrix whose columns generate the
            same lattice.

    Raises:
        RankDeficient: If the columns do not have full row rank.
    """
    m = Matrix([[int(value) for value in row] for row in matrix])
    if m.rank() < m.rows:
        raise RankDeficient(f'columns span a lattice of rank {m.rank()} < {m.rows}')
    result = hermite_normal_form(m)
    return [[int(result[i, j]) for j in range(result.cols)] for i in range(result.rows)]


def _rational_hnf(columns: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    denominator = reduce(lcm, (Fraction(v).denominator for row in columns for v in row), 1)
    integral = [[int(Fraction(v) * denominator) for v in row] for row in columns]
    return [[Fraction(v, denominator) for v in row] for row in hnf(integral)]


def lattice_sum(*bases: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Basis (HNF) of the sum of full-rank lattices given by bases."""
    rows = [[] for _ in range(len(bases[0]))]
    for basis in bases:
        for row, extra in zip(rows, basis):
            row.extend(extra)
    return _rational_hnf(rows)


def _dual(basis: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    return mat_transpose(mat_inverse(basis))


def lattice_intersection(*bases: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Basis of the intersection of full-rank lattices (via duals)."""
    return _dual(lattice_sum(*(_dual(basis) for basis in bases)))


def _min_valuation(matrix: Iterable[Iterable[Fraction]], p: int) -> int:
    values = [valuation(v, p) for row in matrix for v in row if v]
    return min(values)


def _local_lattice(matrix: Sequence[Sequence[Fraction]], p: int, k: int) -> list[list[Fraction]]:
    n = len(matrix)
    denominator = reduce(lcm, (v.denominator for row in matrix for v in row), 1)
    integral = [[v * denominator for v in row] for row in matrix]
    modulus = p ** (k + (valuation(Fraction(denominator), p) or 0))
    kernel = lattice_intersection(
        mat_identity(n),
        [[v * modulus for v in row] for row in mat_inverse(integral)])
    return [[v / p ** k for v in row] for row in kernel]


def realize_adelic(space: AdelicSpaceQ) -> LatticePresentation:
    """The lattice `{x in Q^n : |A_p x|_p <= 1 for every prime p}`.

    Each prime contributes a lattice with the right p-part that does not
    constrain the other primes of the support; the result is their
    intersection.

    Args:
        space (AdelicSpaceQ): The adelic space.

    Returns:
        LatticePresentation: Basis in Hermite normal form and the Gram
            matrix at infinity.

    Raises:
        SingularLocalMatrix: If a local matrix is singular.
        LatticeException: If the covolume misses the product formula.
    """
    n = space.dim
    local = space.local
    if not local:
        return LatticePresentation(mat_identity(n), space.gram)
    exponents = {}
    for p, matrix in local.items():
        try:
            inverse = mat_inverse(matrix)
        except DomainError as error:
            raise SingularLocalMatrix(f'the local matrix at {p} is singular') from error
        exponents[p] = max(0, -_min_valuation(matrix, p), -_min_valuation(inverse, p))
    pieces = []
    for p, matrix in local.items():
        others = 1
        for prime, k in exponents.items():
            if prime != p:
                others *= prime ** k
        scalar = Fraction(p ** exponents[p], others)
        pieces.append(lattice_sum(
            _local_lattice(matrix, p, exponents[p]),
            [[scalar * v for v in row] for row in mat_identity(n)]))
    basis = pieces[0] if len(pieces) == 1 else lattice_intersection(*pieces)
    expected = Fraction(1)
    for p, matrix in local.items():
        expected *= padic_abs(Fraction(mat_det(matrix)), p)
    presentation = LatticePresentation(basis, space.gram)
    if presentation.covolume() != expected:
        raise LatticeException(
            f'realised covolume {presentation.covolume()} differs from {expected}')
    return presentation


def _gso(gram: Sequence[Sequence[Any]]) -> tuple[list[list[Any]], list[Any]]:
    n = len(gram)
    mu = [[Fraction(0)] * n for _ in range(n)]
    r = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            value = gram[i][j]
            for k in range(j):
                value = value - mu[j][k] * mu[i][k] * r[k]
            mu[i][j] = value / r[j]
        value = gram[i][i]
        for k in range(i):
            value = value - mu[i][k] * mu[i][k] * r[k]
        if value <= 0:
            raise NotPositiveDefinite('the Gram matrix is not positive-definite')
        r[i] = value
    return mu, r


def _nearest(value: Any) -> int:
    if isinstance(value, QF2):
        return value.round()
    return floor(Fraction(value) + Fraction(1, 2))


def lll(lattice: LatticePresentation, delta: Fraction = Fraction(3, 4)) -> LatticePresentation:
    """LLL reduction with exact Gram-Schmidt data.

    Size reduction rounds the coefficients from enclosures; the Lovász
    test is exact.

    Args:
        lattice (LatticePresentation): Lattice to reduce.
        delta (Fraction, optional): Lovász parameter in (1/4, 1).
            Defaults to 3/4.

    Returns:
        LatticePresentation: The same lattice with a reduced basis.

    Raises:
        NotPositiveDefinite: If the Gram matrix is not positive-definite.
        LatticeException: If delta is outside (1/4, 1).
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise LatticeException(f'delta must lie in (1/4, 1): {delta}')
    n = lattice.dim
    gram = lattice.coordinate_gram()
    transform = [[int(i == j) for j in range(n)] for i in range(n)]
    mu, r = _gso(gram)
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            m = _nearest(mu[k][j])
            if not m:
                continue
            old_kj, old_kk = gram[k][j], gram[k][k]
            for i in range(n):
                if i != k:
                    gram[k][i] = gram[k][i] - gram[j][i] * m
                    gram[i][k] = gram[k][i]
            gram[k][k] = old_kk - old_kj * (2 * m) + gram[j][j] * (m * m)
            for row in transform:
                row[k] -= m * row[j]
            for i in range(j):
                mu[k][i] = mu[k][i] - mu[j][i] * m
            mu[k][j] = mu[k][j] - m
        if r[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * r[k - 1]:
            k += 1
            continue
        gram[k], gram[k - 1] = gram[k - 1], gram[k]
        for row in gram:
            row[k], row[k - 1] = row[k - 1], row[k]
        for row in transform:
            row[k], row[k - 1] = row[k - 1], row[k]
        mu, r = _gso(gram)
        k = max(k - 1, 1)
    return LatticePresentation(mat_mul(lattice.basis, transform), lattice.gram)


def _upper(value: Any, bits: int) -> Fraction:
    if isinstance(value, QF2):
        return value.enclosure(bits).hi
    return Fraction(value)


class _Search:
    """Depth-first interval-pruned enumeration over one Gram matrix."""

    __slots__ = (
        '_best', '_bits', '_budget', '_found', '_gram', '_key', '_mu_hi',
        '_mu_lo', '_n', '_predicate', '_r_lo', '_radius', '_scale', '_shrink')

    def __init__(
            self,
            gram: list[list[Any]],
            radius: Any,
            predicate: Optional[Predicate],
            shrink: bool,
            key: Optional[Callable[[ShortVector], Any]] = None,
            bits: int = ENUMERATION_BITS) -> None:
        mu, r = _gso(gram)
        self._n = len(gram)
        self._gram = gram
        self._predicate = predicate
        self._shrink = shrink
        self._key = key
        while True:
            scale = 1 << bits
            r_lo = [floor(QF2.of(value).enclosure(bits).lo * scale) for value in r]
            if all(value > 0 for value in r_lo):
                break
            bits *= 2
        self._bits = bits
        self._scale = scale
        self._r_lo = r_lo
        self._mu_lo = [[0] * self._n for _ in range(self._n)]
        self._mu_hi = [[0] * self._n for _ in range(self._n)]
        for j in range(self._n):
            for i in range(j):
                enclosure = QF2.of(mu[j][i]).enclosure(bits)
                self._mu_lo[j][i] = floor(enclosure.lo * scale)
                self._mu_hi[j][i] = ceil(enclosure.hi * scale)
        self._radius = QF2.of(radius)
        self._budget = self._scaled_budget(self._radius)
        self._found = []
        self._best = None

    def _scaled_budget(self, radius: QF2) -> int:
        value = _upper(radius, self._bits) * self._scale ** 3
        return -((-value.numerator) // value.denominator)

    @property
    def found(self) -> list[ShortVector]:
        """list: accepted vectors (collect mode)."""
        return self._found

    @property
    def best(self) -> Optional[ShortVector]:
        """ShortVector: best accepted vector (shrink or key mode)."""
        return self._best

    def top_candidates(self) -> list[int]:
        """Admissible values of the top coordinate."""
        return self._candidates(self._n - 1, [0] * self._n, 0, True)

    def _candidates(self, level: int, coords: list[int], used: int, zero_prefix: bool) -> list[int]:
        scale = self._scale
        c_lo = c_hi = 0
        for j in range(level + 1, self._n):
            x = coords[j]
            if x:
                a, b = -x * self._mu_lo[j][level], -x * self._mu_hi[j][level]
                c_lo += min(a, b)
                c_hi += max(a, b)
        rest = self._budget - used
        if rest < 0:
            return []
        reach = isqrt(rest // self._r_lo[level])
        low = -((reach - c_lo) // scale)
        high = (c_hi + reach) // scale
        if zero_prefix:
            low = max(low, 0)
        middle = c_lo + c_hi
        return sorted(range(low, high + 1), key=lambda x: (abs(2 * x * scale - middle), x))

    def run(self, top: Optional[Iterable[int]] = None) -> None:
        """Search the subtrees of the given top values (all by default)."""
        coords = [0] * self._n
        level = self._n - 1
        for x in (self.top_candidates() if top is None else top):
            coords[level] = x
            contribution = self._contribution(level, coords, x)
            if contribution <= self._budget:
                self._descend(level - 1, coords, contribution, x == 0)
        coords[level] = 0

    def _contribution(self, level: int, coords: list[int], x: int) -> int:
        c_lo = c_hi = 0
        for j in range(level + 1, self._n):
            y = coords[j]
            if y:
                a, b = -y * self._mu_lo[j][level], -y * self._mu_hi[j][level]
                c_lo += min(a, b)
                c_hi += max(a, b)
        point = x * self._scale
        distance = max(0, point - c_hi, c_lo - point)
        return self._r_lo[level] * distance * distance

    def _descend(self, level: int, coords: list[int], used: int, zero_prefix: bool) -> None:
        if level < 0:
            self._leaf(coords)
            return
        for x in self._candidates(level, coords, used, zero_prefix):
            contribution = used + self._contribution(level, coords, x)
            if contribution > self._budget:
                continue
            coords[level] = x
            self._descend(level - 1, coords, contribution, zero_prefix and x == 0)
        coords[level] = 0

    def _leaf(self, coords: list[int]) -> None:
        if not any(coords):
            return
        first = next(x for x in coords if x)
        vector = tuple(coords) if first > 0 else tuple(-x for x in coords)
        norm = _quadratic_value(self._gram, vector)
        if (norm - self._radius).sign() > 0:
            return
        if self._predicate is not None and not self._predicate(vector, norm):
            return
        candidate = ShortVector(vector, norm)
        if self._key is not None:
            if self._best is None or self._key(candidate) < self._key(self._best):
                self._best = candidate
        elif self._shrink:
            if self._best is None or _order(candidate) < _order(self._best):
                self._best = candidate
                self._radius = norm
                self._budget = self._scaled_budget(norm)
        else:
            self._found.append(candidate)


class _Ordered:
    """Sort key of a short vector: exact norm, then coordinates."""

    __slots__ = ('coords', 'norm')

    def __init__(self, vector: ShortVector) -> None:
        self.norm = vector.norm_sq
        self.coords = vector.coords

    def __lt__(self, other: '_Ordered') -> bool:
        sign = (self.norm - other.norm).sign()
        return sign < 0 or (sign == 0 and self.coords < other.coords)


def _order(vector: ShortVector) -> _Ordered:
    return _Ordered(vector)


def _split(search: _Search, factory: Callable[[], _Search], threads: int) -> list[_Search]:
    if threads <= 1:
        search.run()
        return [search]
    tops = search.top_candidates()
    searches = [factory() for _ in tops]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        list(executor.map(lambda pair: pair[0].run([pair[1]]), zip(searches, tops)))
    return searches


def enumerate_within(
        lattice: LatticePresentation,
        radius_sq: Any,
        threads: int = 1) -> list[ShortVector]:
    """Every nonzero lattice vector with squared norm at most `radius_sq`.

    One representative per pair `{v, -v}` is returned (the first nonzero
    coordinate is positive), sorted by squared norm then coordinates.

    Args:
        lattice (LatticePresentation): The lattice.
        radius_sq (Fraction or QF2): Squared radius, non-negative.
        threads (int, optional): Worker threads. Defaults to 1.

    Returns:
        list: The short vectors.
    """
    radius_sq = QF2.of(radius_sq)
    if radius_sq.sign() < 0:
        return []
    gram = lattice.coordinate_gram()

    def factory() -> _Search:
        return _Search(gram, radius_sq, None, shrink=False)
    found = [
        vector for search in _split(factory(), factory, threads) for vector in search.found]
    return sorted(found, key=_order)


def search_shortest(
        lattice: LatticePresentation,
        radius_sq: Any,
        predicate: Optional[Predicate] = None,
        key: Optional[Callable[[ShortVector], Any]] = None,
        threads: int = 1) -> Optional[ShortVector]:
    """Best lattice vector within a radius that satisfies a predicate.

    Without `key` the best vector is the one of least squared norm (then
    least coordinates) and the radius shrinks as vectors are accepted;
    with `key` every accepted vector is ranked by it.

    Args:
        lattice (LatticePresentation): The lattice.
        radius_sq (Fraction or QF2): Squared radius.
        predicate (Callable, optional): Filter on `(coords, norm_sq)`.
        key (Callable, optional): Ranking of accepted vectors.
        threads (int, optional): Worker threads. Defaults to 1.

    Returns:
        ShortVector: the best vector, or None.
    """
    radius_sq = QF2.of(radius_sq)
    if radius_sq.sign() < 0:
        return None
    gram = lattice.coordinate_gram()

    def factory() -> _Search:
        return _Search(gram, radius_sq, predicate, shrink=key is None, key=key)
    best = None
    for search in _split(factory(), factory, threads):
        candidate = search.best
        if candidate is None:
            continue
        if best is None:
            best = candidate
        elif key is not None:
            if key(candidate) < key(best) or (
                    not key(best) < key(candidate) and _order(candidate) < _order(best)):
                best = candidate
        elif _order(candidate) < _order(best):
            best = candidate
    return best


def first_minimum(lattice: LatticePresentation, threads: int = 1) -> QF2:
    """Squared first minimum, by enumeration seeded with an LLL basis."""
    reduced = lll(lattice)
    gram = reduced.coordinate_gram()
    radius = QF2.of(gram[0][0])
    for i in range(1, reduced.dim):
        if (QF2.of(gram[i][i]) - radius).sign() < 0:
            radius = QF2.of(gram[i][i])
    shortest = search_shortest(reduced, radius, threads=threads)
    return shortest.norm_sq


def sublattice_height(
        lattice: LatticePresentation,
        vectors: Sequence[Sequence[Any]]) -> Real:
    """Height of the sublattice spanned by vectors of the lattice.

    Args:
        lattice (LatticePresentation): The lattice.
        vectors (Sequence): Ambient coordinates of lattice vectors.

    Returns:
        Real: `sqrt(det V^T G V)`.

    Raises:
        LatticeException: If a vector does not lie in the lattice.
        RankDeficient: If the vectors are dependent.
    """
    columns = [[parse_rat(value) for value in vector] for vector in vectors]
    for column in columns:
        if len(column) != lattice.dim or not lattice.contains(column):
            raise LatticeException(f'{[str(v) for v in column]} is not in the lattice')
    gram = mat_mul(mat_mul(columns, lattice.gram), mat_transpose(columns))
    det = QF2.of(mat_det(gram))
    if det == 0:
        raise RankDeficient('the vectors are linearly dependent')
    return Real.of(det).sqrt()
