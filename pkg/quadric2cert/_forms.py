# -*- coding: UTF-8 -*-
#
# copyright: 2020-2022, Frederico Martins
# author: Frederico Martins <http://github.com/fscm>
# license: SPDX-License-Identifier: MIT

"""Quadratic forms module.

This module holds quadratic forms over the rationals, the vectors they
are evaluated on and the places of Q, together with the local norms,
operator norms and heights built from them.

The following is a simple usage example::

    >>> from fractions import Fraction
    >>> from ._forms import AlgVector, QuadForm, eval_q
    >>> q = QuadForm([[1, 0], [0, 1]])
    >>> eval_q(q, AlgVector.of([Fraction(3, 5), Fraction(4, 5)]))
    QF2(1, 0, 1)

The module contains the following public classes:
    - QuadForm -- Symmetric rational matrix of a quadratic form.
    - AlgVector -- Vector with entries in one real quadratic field.
    - Place -- The archimedean place or a prime.
    - FormException -- Generic form exception.
    - DimensionMismatch -- Operands of different dimensions.
    - NotPositiveDefinite -- A Gram matrix that is not positive-definite.

All other classes in this module are considered implementation details.
"""

from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Any, Iterable, Iterator, Optional, Sequence, Union
from sympy import Matrix, Poly, Rational, factor_list, isprime, multiplicity, primefactors
from sympy.abc import x as _x
from ._exactnum import (
    QF2,
    DomainError,
    DyadicInterval,
    Quadric2CertException,
    Real,
    compare,
    mat_det,
    mat_inverse,
    mat_mul,
    mat_transpose,
    mat_vec,
    parse_rat,
    qf2_sqrt)


__all__ = [
    'AlgVector',
    'DimensionMismatch',
    'FormException',
    'INFINITY',
    'NotPositiveDefinite',
    'Place',
    'QuadForm',
    'dual_norm',
    'eval_b',
    'eval_q',
    'form_primes',
    'gram_det',
    'height_q',
    'inf_norm_bound',
    'local_norm',
    'padic_abs',
    'padic_norm',
    'valuation']


class FormException(Quadric2CertException):
    """Generic form exception."""


class DimensionMismatch(FormException):
    """Operands of different dimensions."""


class NotPositiveDefinite(FormException):
    """A Gram matrix that is not positive-definite."""


def valuation(value: Fraction, p: int) -> Optional[int]:
    """p-adic valuation of a rational (None for zero)."""
    value = Fraction(value)
    if value == 0:
        return None
    return int(multiplicity(p, value.numerator)) \
        - int(multiplicity(p, value.denominator))


def padic_abs(value: Fraction, p: int) -> Fraction:
    """p-adic absolute value normalised with |p|_p = 1/p."""
    v = valuation(value, p)
    if v is None:
        return Fraction(0)
    return Fraction(p) ** -v


def padic_norm(vector: Iterable[Fraction], p: int) -> Fraction:
    """Max norm of a rational vector at the prime p."""
    return max((padic_abs(value, p) for value in vector), default=Fraction(0))


def _primes_of(values: Iterable[Fraction]) -> set[int]:
    primes = set()
    for value in values:
        value = Fraction(value)
        if value:
            primes.update(int(p) for p in primefactors(abs(value.numerator)))
            primes.update(int(p) for p in primefactors(value.denominator))
    return primes


class Place:
    """A place of Q: the archimedean one or a prime.

    Args:
        prime (int, optional): The prime, or None for the archimedean
            place. Defaults to None.

    Raises:
        FormException: If `prime` is not a prime number.
    """

    __slots__ = ('_prime',)

    def __init__(self, prime: Optional[int] = None) -> None:
        if prime is not None:
            if isinstance(prime, bool) or not isinstance(prime, int) \
                    or not isprime(prime):
                raise FormException(f'not a prime: {prime!r}')
        self._prime = prime

    @classmethod
    def from_json(cls, data: Any) -> 'Place':
        """Parse `"inf"` or a prime (integer or digit string)."""
        if data == 'inf':
            return cls()
        if isinstance(data, str) and data.isdigit():
            data = int(data)
        return cls(data)

    @property
    def prime(self) -> Optional[int]:
        """int: the prime (None at infinity)."""
        return self._prime

    @property
    def is_archimedean(self) -> bool:
        """bool: True at the archimedean place."""
        return self._prime is None

    @property
    def epsilon(self) -> int:
        """int: 1 at the archimedean place, 0 otherwise."""
        return int(self._prime is None)

    def to_json(self) -> Union[str, int]:
        """JSON form."""
        return 'inf' if self._prime is None else self._prime

    def _key(self) -> int:
        return 0 if self._prime is None else self._prime

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Place):
            return NotImplemented
        return self._prime == other.prime

    def __lt__(self, other: 'Place') -> bool:
        return self._key() < other._key()

    def __hash__(self) -> int:
        return hash(self._prime)

    def __repr__(self) -> str:
        return f'Place({self._prime})'

    def __str__(self) -> str:
        return 'inf' if self._prime is None else str(self._prime)


INFINITY = Place()


class AlgVector:
    """Vector whose entries share one real quadratic field.

    Args:
        entries (Iterable): Entries (ints, fractions or QF2).

    Raises:
        DomainError: If the entries live in different quadratic fields.
    """

    __slots__ = ('_d', '_entries')

    def __init__(self, entries: Iterable[Any]) -> None:
        values = tuple(QF2.of(entry) for entry in entries)
        fields = {value.d for value in values if not value.is_rational}
        if len(fields) > 1:
            raise DomainError(f'entries from several quadratic fields: {sorted(fields)}')
        self._entries = values
        self._d = fields.pop() if fields else 1

    @classmethod
    def of(cls, entries: Iterable[Any]) -> 'AlgVector':
        """Build a vector (returns AlgVector arguments unchanged)."""
        if isinstance(entries, AlgVector):
            return entries
        return cls(entries)

    @classmethod
    def from_json(cls, data: Sequence[Any]) -> 'AlgVector':
        """Parse a list of QF2 objects or rationals."""
        if not isinstance(data, (list, tuple)):
            raise DomainError(f'not a vector: {data!r}')
        return cls(QF2.from_json(entry) for entry in data)

    @property
    def d(self) -> int:
        """int: the common squarefree radicand."""
        return self._d

    @property
    def dim(self) -> int:
        """int: number of entries."""
        return len(self._entries)

    @property
    def entries(self) -> tuple[QF2, ...]:
        """tuple: the entries."""
        return self._entries

    @property
    def is_rational(self) -> bool:
        """bool: True when every entry is rational."""
        return self._d == 1

    def rational(self) -> list[Fraction]:
        """Entries as fractions.

        Raises:
            DomainError: If an entry is irrational.
        """
        return [entry.rational() for entry in self._entries]

    def to_json(self) -> list[dict[str, Any]]:
        """JSON form."""
        return [entry.to_json() for entry in self._entries]

    def __add__(self, other: 'AlgVector') -> 'AlgVector':
        return AlgVector(a + b for a, b in zip(self, AlgVector.of(other)))

    def __sub__(self, other: 'AlgVector') -> 'AlgVector':
        return AlgVector(a - b for a, b in zip(self, AlgVector.of(other)))

    def scaled(self, factor: Any) -> 'AlgVector':
        """Scalar multiple."""
        return AlgVector(entry * factor for entry in self._entries)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (list, tuple)):
            other = AlgVector(other)
        if not isinstance(other, AlgVector):
            return NotImplemented
        return self._entries == other.entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __getitem__(self, index: int) -> QF2:
        return self._entries[index]

    def __iter__(self) -> Iterator[QF2]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __repr__(self) -> str:
        return f'AlgVector({[str(entry) for entry in self._entries]})'


class QuadForm:
    """Quadratic form `q(x) = x^T A x` over the rationals.

    Args:
        matrix (Sequence[Sequence]): Symmetric matrix A(q); entries are
            ints, fractions or `p/q` strings.

    Raises:
        FormException: If the matrix is empty, not square or not
            symmetric.
    """

    __slots__ = ('_matrix',)

    def __init__(self, matrix: Sequence[Sequence[Any]]) -> None:
        rows = tuple(tuple(parse_rat(value) for value in row) for row in matrix)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise FormException('a form needs a non-empty square matrix')
        if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(i)):
            raise FormException('the matrix of a form must be symmetric')
        self._matrix = rows

    @classmethod
    def diagonal(cls, values: Iterable[Any]) -> 'QuadForm':
        """Diagonal form."""
        values = list(values)
        return cls([
            [values[i] if i == j else 0 for j in range(len(values))]
            for i in range(len(values))])

    @classmethod
    def identity(cls, n: int) -> 'QuadForm':
        """Sum of n squares."""
        return cls.diagonal([1] * n)

    @classmethod
    def from_json(cls, data: Any) -> 'QuadForm':
        """Parse `{"dim": n, "matrix": [[Rat, ...], ...]}`."""
        if not isinstance(data, dict) or 'matrix' not in data:
            raise FormException(f'not a quadratic form: {data!r}')
        try:
            form = cls(data['matrix'])
        except TypeError as error:
            raise FormException(str(error)) from error
        if 'dim' in data and data['dim'] != form.dim:
            raise DimensionMismatch(
                f'declared dim {data["dim"]} but the matrix is {form.dim}x{form.dim}')
        return form

    @property
    def dim(self) -> int:
        """int: dimension n."""
        return len(self._matrix)

    @property
    def matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        """tuple: the symmetric matrix A(q) by rows."""
        return self._matrix

    @property
    def is_integral(self) -> bool:
        """bool: True when A(q) has integer entries."""
        return all(value.denominator == 1 for row in self._matrix for value in row)

    @property
    def is_zero(self) -> bool:
        """bool: True for the zero form."""
        return all(value == 0 for row in self._matrix for value in row)

    def rows(self) -> list[list[Fraction]]:
        """A mutable copy of the matrix."""
        return [list(row) for row in self._matrix]

    def det(self) -> Fraction:
        """Determinant of A(q) (see `gram_det`)."""
        return gram_det(self)

    def is_regular(self) -> bool:
        """bool: True when det A(q) != 0."""
        return self.det() != 0

    def is_positive_definite(self) -> bool:
        """Whether every leading principal minor is positive."""
        return all(
            mat_det([row[:k] for row in self._matrix[:k]]) > 0
            for k in range(1, self.dim + 1))

    def is_negative_definite(self) -> bool:
        """Whether -q is positive-definite."""
        return self.scaled(-1).is_positive_definite()

    def scaled(self, factor: Any) -> 'QuadForm':
        """The form `factor * q`."""
        factor = parse_rat(factor)
        return QuadForm([[value * factor for value in row] for row in self._matrix])

    def integral_multiple(self) -> tuple['QuadForm', int]:
        """Smallest positive integer multiple with integral matrix."""
        factor = reduce(lcm, (value.denominator for row in self._matrix for value in row), 1)
        return self.scaled(factor), factor

    def direct_sum(self, other: 'QuadForm') -> 'QuadForm':
        """Orthogonal sum `q ⊥ other`."""
        n, m = self.dim, other.dim
        rows = [list(row) + [Fraction(0)] * m for row in self._matrix]
        rows += [[Fraction(0)] * n + list(row) for row in other.matrix]
        return QuadForm(rows)

    def restricted(self, basis: Sequence[Sequence[Any]]) -> 'QuadForm':
        """Form induced on the span of the given vectors (C^T A C)."""
        columns = mat_transpose([list(vector) for vector in basis])
        return QuadForm(mat_mul(mat_mul(mat_transpose(columns), self._matrix), columns))

    def __call__(self, vector: Any) -> QF2:
        return eval_q(self, vector)

    def bilinear(self, left: Any, right: Any) -> QF2:
        """Polar form `b(x, y) = x^T A y`."""
        return eval_b(self, left, right)

    def to_json(self) -> dict[str, Any]:
        """JSON form."""
        return {
            'dim': self.dim,
            'matrix': [[str(value) for value in row] for row in self._matrix]}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadForm):
            return NotImplemented
        return self._matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self._matrix)

    def __repr__(self) -> str:
        return f'QuadForm({[[str(value) for value in row] for row in self._matrix]})'


def _entries(vector: Any) -> Sequence[Any]:
    if isinstance(vector, AlgVector):
        return vector.entries
    return list(vector)


def eval_b(q: QuadForm, left: Any, right: Any) -> QF2:
    """Exact value of the bilinear form `x^T A(q) y`.

    Raises:
        DimensionMismatch: If a vector does not have dimension dim q.
    """
    left, right = _entries(left), _entries(right)
    if len(left) != q.dim or len(right) != q.dim:
        raise DimensionMismatch(
            f'form of dimension {q.dim} applied to vectors of '
            f'dimensions {len(left)} and {len(right)}')
    total = QF2(0)
    for i, row in enumerate(q.matrix):
        if left[i] == 0:
            continue
        inner = QF2(0)
        for value, entry in zip(row, right):
            if value:
                inner = inner + entry * value
        total = total + inner * left[i]
    return total


def eval_q(q: QuadForm, vector: Any) -> QF2:
    """Exact value `x^T A(q) x`."""
    return eval_b(q, vector, vector)


def gram_det(q: QuadForm) -> Fraction:
    """Exact determinant of A(q) by fraction-free elimination."""
    return Fraction(mat_det(q.matrix))


def local_norm(
        q: QuadForm,
        p: int,
        local: Optional[Sequence[Sequence[Fraction]]] = None) -> Fraction:
    """Norm of q at the prime p.

    With the local matrix A_p of the ambient space the norm is taken in
    the coordinates `A_p x`, i.e. on `A_p^-T A(q) A_p^-1`.

    Args:
        q (QuadForm): The form.
        p (int): A prime.
        local (Sequence, optional): A_p. Defaults to the identity.

    Returns:
        Fraction: max over entries of |a_ij|_p.
    """
    matrix = [list(row) for row in q.matrix]
    if local is not None:
        inverse = mat_inverse(local)
        matrix = mat_mul(mat_mul(mat_transpose(inverse), matrix), inverse)
    return max(padic_abs(value, p) for row in matrix for value in row)


def _check_gram(gram: QuadForm, dim: int) -> None:
    if gram.dim != dim:
        raise DimensionMismatch(f'Gram matrix of dimension {gram.dim}, expected {dim}')
    if not gram.is_positive_definite():
        raise NotPositiveDefinite('the Gram matrix is not positive-definite')


def _to_fraction(value: Any) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def _largest_root(factor: Poly) -> Real:
    degree = factor.degree()
    coefficients = [_to_fraction(c) for c in factor.all_coeffs()]
    if degree == 1:
        return Real.of(-coefficients[1] / coefficients[0])
    if degree == 2:
        a, b, c = coefficients
        root = (QF2(-b) + qf2_sqrt(b * b - 4 * a * c) * (1 if a > 0 else -1)) / (2 * a)
        return Real.of(root)
    lo, hi = max(factor.intervals(), key=lambda interval: interval[0][0])[0]

    def approx(bits: int) -> DyadicInterval:
        s, t = factor.refine_root(lo, hi, eps=Rational(1, 2 ** bits))
        return DyadicInterval(_to_fraction(s), _to_fraction(t)).rounded(bits)
    return Real(approx)


def inf_norm_bound(q: QuadForm, gram: QuadForm) -> Real:
    """Archimedean norm of q in the geometry of a Euclidean form.

    `||q||_inf = max x^T A(q) y` over `gram`-unit vectors, i.e. the
    largest absolute eigenvalue of `G^-1 A(q)`. Its square is the
    largest root of the characteristic polynomial of `(G^-1 A(q))^2`,
    isolated exactly factor by factor.

    Args:
        q (QuadForm): The form.
        gram (QuadForm): Positive-definite Gram matrix G.

    Returns:
        Real: the norm (exact when the largest root has degree <= 2).

    Raises:
        NotPositiveDefinite: If `gram` is not positive-definite.
    """
    _check_gram(gram, q.dim)
    if q.is_zero:
        return Real.of(0)
    operator = Matrix(mat_mul(mat_inverse(gram.matrix), q.matrix)).applyfunc(Rational)
    square = operator * operator
    polynomial = Poly(square.charpoly(_x).as_expr(), _x, domain='QQ')
    _, factors = factor_list(polynomial)
    roots = [_largest_root(Poly(factor, _x, domain='QQ')) for factor, _ in factors]
    best = roots[0]
    for root in roots[1:]:
        if compare(root, best) > 0:
            best = root
    return best.sqrt()


def dual_norm(
        q: QuadForm,
        alpha: Any,
        place: Place,
        gram: Optional[QuadForm] = None,
        local: Optional[Sequence[Sequence[Fraction]]] = None) -> Real:
    """Operator norm of the linear form `x -> b(x, alpha)`.

    At infinity it is `sqrt(f^T G^-1 f)` with `f = A(q) alpha`; at a
    prime p it is the max p-adic absolute value of `A_p^-T f`.

    Args:
        q (QuadForm): The form.
        alpha (AlgVector): The point (rational at finite places).
        place (Place): Where to measure.
        gram (QuadForm, optional): Euclidean structure at infinity.
            Defaults to the sum of squares.
        local (Sequence, optional): A_p. Defaults to the identity.

    Returns:
        Real: the norm (its exact square is known at infinity).

    Raises:
        DimensionMismatch: If alpha does not have dimension dim q.
    """
    alpha = AlgVector.of(alpha)
    if alpha.dim != q.dim:
        raise DimensionMismatch(f'vector of dimension {alpha.dim}, form of dimension {q.dim}')
    f = [eval_b(q, alpha, [int(i == j) for j in range(q.dim)]) for i in range(q.dim)]
    if place.is_archimedean:
        gram = gram or QuadForm.identity(q.dim)
        _check_gram(gram, q.dim)
        inverse = QuadForm(mat_inverse(gram.matrix))
        return Real.of(eval_q(inverse, f)).sqrt()
    coordinates = [value.rational() for value in f]
    if local is not None:
        coordinates = mat_vec(mat_transpose(mat_inverse(local)), coordinates)
    return Real.of(padic_norm(coordinates, place.prime))


def form_primes(
        q: QuadForm,
        locals_: Optional[dict[int, Sequence[Sequence[Fraction]]]] = None) -> list[int]:
    """Primes where the norm of q can differ from 1."""
    primes = _primes_of(value for row in q.matrix for value in row)
    primes.update(locals_ or {})
    return sorted(primes)


def height_q(
        q: QuadForm,
        gram: QuadForm,
        locals_: Optional[dict[int, Sequence[Sequence[Fraction]]]] = None) -> tuple[Real, Real]:
    """Heights H(q) and H(1, q) over Q.

    Both are products over all places (counting measure) of `||q||_v`,
    resp. `max(1, ||q||_v)`; only finitely many factors differ from 1.

    Args:
        q (QuadForm): The form.
        gram (QuadForm): Euclidean structure at infinity.
        locals_ (dict, optional): Local matrices A_p of the ambient
            space. Defaults to none.

    Returns:
        tuple: (H(q), H(1, q)); H(q) is 0 for the zero form.
    """
    locals_ = locals_ or {}
    archimedean = inf_norm_bound(q, gram)
    if q.is_zero:
        return Real.of(0), Real.of(1)
    finite = Fraction(1)
    finite_one = Fraction(1)
    for p in form_primes(q, locals_):
        norm = local_norm(q, p, locals_.get(p))
        finite *= norm
        finite_one *= max(Fraction(1), norm)
    one = archimedean if compare(archimedean, 1) > 0 else Real.of(1)
    return archimedean * finite, one * finite_one
