# -*- coding: UTF-8 -*-
#
# copyright: 2020-2022, Frederico Martins
# author: Frederico Martins <http://github.com/fscm>
# license: SPDX-License-Identifier: MIT

"""Dirichlet module.

This module is the approximation engine. Given a regular form q, a
Euclidean/adelic structure E on Q^n and, for a finite set V of places,
points `alpha_v` of `q = 1` with twisting parameters `t_v`, it builds the
twisted space E_t on `E x Q`, computes the thresholds that guarantee a
small isotropic vector of `Q(x, y) = q(x) - y^2` with `y != 0`, searches
the realised lattice for one, and evaluates every inequality and identity
that such a vector satisfies.

Two ways of sizing the search are offered:
    - budget mode -- a global budget T at the archimedean place only; the
      twisting parameter is `T` divided by the threshold.
    - places mode -- explicit `t_v` at every place of V.

The following is a simple usage example::

    >>> from ._forms import INFINITY, QuadForm
    >>> from ._dirichlet import Approximator, Instance, PlaceData
    >>> instance = Instance(
    ...     QuadForm.identity(2),
    ...     [PlaceData(INFINITY, ['3/5', '4/5'])],
    ...     budget=10)
    >>> certificate = Approximator().solve(instance)
    >>> certificate.accepted
    True

The module contains the following public classes:
    - Approximator -- Solver and verifier.
    - Certificate -- A solution with its evaluated checks.
    - Check -- One evaluated inequality or identity.
    - Instance -- A problem: forms, structure, places and budget.
    - PlaceData -- A place of V with its point and parameter.
    - Profile -- Which constants the thresholds use.
    - Settings -- Run-time tunables.
    - Thresholds -- The thresholds of an instance.
    - TwistedSpace -- The twisted space E_t and its lattice.
    - VerifyReport -- Outcome of an independent verification.
    - DirichletException -- Generic approximation exception.
    - NoSolutionExists -- Q is anisotropic.
    - BudgetBelowThreshold -- The budget is below the threshold.
    - SearchExhausted -- No qualifying vector in the guaranteed radius.
    - TwistError -- Invalid place data.

All other classes in this module are considered implementation details.
"""

from enum import Enum, unique
from fractions import Fraction
from typing import Any, Callable, NamedTuple, Optional, Sequence, TypeVar
from mpmath import iv
from mpmath.libmp import to_rational
from sympy import primefactors
from ._exactnum import (
    MAX_BITS,
    QF2,
    DyadicInterval,
    Quadric2CertException,
    Real,
    UndecidableComparison,
    compare,
    mat_det,
    mat_identity,
    mat_mul,
    mat_transpose,
    mat_vec,
    parse_rat,
    real_max)
from ._forms import (
    INFINITY,
    AlgVector,
    DimensionMismatch,
    NotPositiveDefinite,
    Place,
    QuadForm,
    dual_norm,
    eval_b,
    eval_q,
    form_primes,
    height_q,
    inf_norm_bound,
    local_norm,
    padic_abs,
    valuation)
from ._lattice import (
    AdelicSpaceQ,
    LatticePresentation,
    ShortVector,
    first_minimum,
    lll,
    realize_adelic,
    search_shortest)
from ._witt import WittReport, extended_index, witt_index


__all__ = [
    'Approximator',
    'BudgetBelowThreshold',
    'Certificate',
    'Check',
    'DirichletException',
    'Instance',
    'NoSolutionExists',
    'PlaceData',
    'Profile',
    'SearchExhausted',
    'Settings',
    'Thresholds',
    'TwistError',
    'TwistedSpace',
    'VerifyReport',
    'alpha_norm',
    'build_twisted',
    'c_qbar',
    'c_star',
    'constants',
    'harmonic',
    'harmonic_gap',
    'height_Q',
    'hermite',
    'hermite_power',
    'number_field_bound',
    'relaxed_budget',
    'space_norm',
    'split_constant',
    'thresholds',
    'twist_coords',
    'twisted_norm',
    'xi_apply',
    'xi_inverse',
    'xi_matrix']


Logger = TypeVar('Logger')

SEARCH_GROWTH = 4

_HERMITE_POWERS = {
    1: Fraction(1),
    2: Fraction(4, 3),
    3: Fraction(2),
    4: Fraction(4),
    5: Fraction(8),
    6: Fraction(64, 3),
    7: Fraction(64),
    8: Fraction(256)}


class DirichletException(Quadric2CertException):
    """Generic approximation exception."""


class NoSolutionExists(DirichletException):
    """Q is anisotropic: `q(x) = y^2 != 0` has no solution."""


class BudgetBelowThreshold(DirichletException):
    """The budget is below the threshold."""


class SearchExhausted(DirichletException):
    """No qualifying vector inside the guaranteed radius."""


class TwistError(DirichletException):
    """Invalid place data (point off the quadric, bad parameter)."""


@unique
class Profile(Enum):
    """Constants used by the thresholds.

    ADELIC uses products of Hermite constants; EUCLIDEAN uses the single
    bound `n^(n/2)` of the two-form statement.
    """

    ADELIC = 'adelic'
    EUCLIDEAN = 'euclidean'


class Settings(NamedTuple):
    """Run-time tunables."""

    max_bits: int = MAX_BITS
    threads: int = 1
    delta: Fraction = Fraction(3, 4)
    best: bool = False
    profile: Profile = Profile.ADELIC


# constants

def hermite_power(n: int) -> Fraction:
    """`gamma_n^n`: exact for n <= 8, Hermite's upper bound beyond.

    Raises:
        DirichletException: If n < 1.
    """
    if n < 1:
        raise DirichletException(f'Hermite constants start at dimension 1: {n}')
    if n in _HERMITE_POWERS:
        return _HERMITE_POWERS[n]
    return Fraction(4, 3) ** (n * (n - 1) // 2)


def hermite(n: int) -> Real:
    """`gamma_n` (an upper bound for n > 8)."""
    return Real.of(hermite_power(n)).root(n)


def c_star(n: int) -> Real:
    """`c*(n) = gamma_n^(n/2)`, the constant of Minkowski's theorems over Q."""
    return Real.of(hermite_power(n)).sqrt()


def split_constant(i: int, n: int) -> Real:
    """`c(i + 1) * c(n - i)` over Q."""
    return Real.of(hermite_power(i + 1) * hermite_power(n - i)).sqrt()


def constants(n: int, mode: Profile = Profile.ADELIC) -> dict[str, Any]:
    """Constants of dimension n.

    ADELIC gives `gamma_n`, `gamma_n^n` and `c*(n)` with their source;
    EUCLIDEAN gives the single constant `n^(n/2)`.
    """
    if mode is Profile.EUCLIDEAN:
        return {'c': number_field_bound(n), 'source': 'euclidean'}
    return {
        'gamma': hermite(n),
        'gamma_power': Real.of(hermite_power(n)),
        'c_star': c_star(n),
        'source': 'exact' if n in _HERMITE_POWERS else 'hermite_bound'}


def number_field_bound(n: int, delta: Any = 1) -> Real:
    """`n^(n/2) * delta^((n+1)/2)` for a root discriminant delta."""
    delta = parse_rat(delta)
    return Real.of(Fraction(n) ** n * delta ** (n + 1)).sqrt()


def harmonic(a: int) -> Fraction:
    """`H_a = 1 + 1/2 + ... + 1/a`."""
    return sum((Fraction(1, k) for k in range(1, a + 1)), Fraction(0))


def harmonic_gap(a: int, b: int) -> Fraction:
    """`(a + b - 1) H_(a+b-1) + 1 - a H_a - b H_b` (never negative)."""
    return (a + b - 1) * harmonic(a + b - 1) + 1 - a * harmonic(a) - b * harmonic(b)


def c_qbar(n: int) -> Real:
    """`exp(n/2 * (1/2 + ... + 1/n))`, certified with interval arithmetic."""
    if n < 1:
        raise DirichletException(f'constants start at dimension 1: {n}')
    if n == 1:
        return Real.of(1)
    exponent = Fraction(n, 2) * (harmonic(n) - 1)

    def approx(bits: int) -> DyadicInterval:
        saved = iv.prec
        iv.prec = bits + 16
        try:
            value = iv.exp(iv.mpf(exponent.numerator) / exponent.denominator)
            lo, hi = value._mpi_
        finally:
            iv.prec = saved
        return DyadicInterval(
            Fraction(*to_rational(lo)), Fraction(*to_rational(hi))).rounded(bits)
    return Real(approx)


def relaxed_budget(budget: Any, q: QuadForm) -> Fraction:
    """`max(T, (2 gamma_n)^n det q / T)`, usable for any T > 0."""
    budget = parse_rat(budget)
    if budget <= 0:
        raise DirichletException(f'the budget must be positive: {budget}')
    n = q.dim
    return max(budget, 2 ** n * hermite_power(n) * q.det() / budget)


# twist

def twist_coords(pairing: Any, y: Any, t: Any) -> tuple[QF2, QF2]:
    """The pair `(X, Y)` of the twist with parameter t.

    `X = (1/t + t)/2 * b + (1/t - t)/2 * y` and
    `Y = (1/t - t)/2 * b + (1/t + t)/2 * y` where `b = b(x, alpha)`.

    Raises:
        TwistError: If t is 0.
    """
    t = QF2.of(t)
    if t == 0:
        raise TwistError('the twisting parameter must be nonzero')
    inverse = 1 / t
    even, odd = (inverse + t) / 2, (inverse - t) / 2
    pairing, y = QF2.of(pairing), QF2.of(y)
    return even * pairing + odd * y, odd * pairing + even * y


def _on_quadric(q: QuadForm, alpha: AlgVector) -> None:
    if alpha.dim != q.dim:
        raise DimensionMismatch(f'point of dimension {alpha.dim}, form of dimension {q.dim}')
    value = eval_q(q, alpha)
    if value != 1:
        raise TwistError(f'q(alpha) = {value}, expected 1')


def _twist(q: QuadForm, alpha: Any, t: Any, x: Any, y: Any) -> tuple[list[QF2], QF2]:
    alpha = AlgVector.of(alpha)
    _on_quadric(q, alpha)
    x = AlgVector.of(x)
    pairing = eval_b(q, x, alpha)
    big_x, big_y = twist_coords(pairing, y, t)
    shift = big_x - pairing
    return [xi + ai * shift for xi, ai in zip(x, alpha)], big_y


def xi_apply(q: QuadForm, alpha: Any, t: Any, x: Any, y: Any) -> tuple[list[QF2], QF2]:
    """`xi(x, y) = (x - b(x, alpha) alpha + X alpha, Y)`.

    Raises:
        TwistError: If `q(alpha) != 1` or t is 0.
    """
    return _twist(q, alpha, t, x, y)


def xi_inverse(q: QuadForm, alpha: Any, t: Any, x: Any, y: Any) -> tuple[list[QF2], QF2]:
    """Inverse of `xi_apply` (the same map with parameter `1/t`)."""
    t = QF2.of(t)
    if t == 0:
        raise TwistError('the twisting parameter must be nonzero')
    return _twist(q, alpha, 1 / t, x, y)


def xi_matrix(q: QuadForm, alpha: Any, t: Any) -> list[list[QF2]]:
    """Matrix of the twist on `Q^n x Q` in the standard basis (det 1)."""
    alpha = AlgVector.of(alpha)
    _on_quadric(q, alpha)
    n = q.dim
    t = QF2.of(t)
    if t == 0:
        raise TwistError('the twisting parameter must be nonzero')
    even, odd = (1 / t + t) / 2, (1 / t - t) / 2
    f = [eval_b(q, alpha, [int(i == j) for j in range(n)]) for i in range(n)]
    matrix = [
        [QF2(int(i == j)) + alpha[i] * f[j] * (even - 1) for j in range(n)] + [alpha[i] * odd]
        for i in range(n)]
    matrix.append([value * odd for value in f] + [even])
    return matrix


# places, instances and spaces

class PlaceData:
    """A place of V with its point `alpha_v` and parameter `t_v`.

    Args:
        place (Place): The place.
        alpha (AlgVector): Point of `q = 1` (rational at a prime).
        t (Fraction, optional): Twisting parameter; only its absolute
            value matters at infinity. Defaults to None (budget mode).
    """

    __slots__ = ('_alpha', '_place', '_t')

    def __init__(self, place: Place, alpha: Any, t: Any = None) -> None:
        self._place = place
        self._alpha = AlgVector.of(alpha)
        t = None if t is None else parse_rat(t)
        if t is not None and place.is_archimedean:
            t = abs(t)
        self._t = t

    @property
    def place(self) -> Place:
        """Place: the place."""
        return self._place

    @property
    def alpha(self) -> AlgVector:
        """AlgVector: the point."""
        return self._alpha

    @property
    def t(self) -> Optional[Fraction]:
        """Fraction: the parameter."""
        return self._t

    def with_t(self, t: Any) -> 'PlaceData':
        """Copy with another parameter."""
        return PlaceData(self._place, self._alpha, t)

    def validate(self, q: QuadForm, allow_unit: bool = False) -> None:
        """Check `q(alpha) = 1` and `|t|_v > 1` (`t >= 1` when allowed).

        Raises:
            TwistError: On invalid data.
        """
        _on_quadric(q, self._alpha)
        if not self._place.is_archimedean and not self._alpha.is_rational:
            raise TwistError(f'the point at {self._place} must be rational')
        if self._t is None or self._t == 0:
            raise TwistError(f'missing twisting parameter at {self._place}')
        if self._place.is_archimedean:
            if self._t < 1 or (self._t == 1 and not allow_unit):
                raise TwistError(f'|t|_inf must exceed 1: {self._t}')
        elif padic_abs(self._t, self._place.prime) <= 1:
            raise TwistError(f'|t|_{self._place} must exceed 1: t = {self._t}')

    def to_json(self) -> dict[str, Any]:
        """JSON form."""
        return {
            'v': self._place.to_json(),
            'alpha': self._alpha.to_json(),
            't': None if self._t is None else str(self._t)}

    def __repr__(self) -> str:
        return f'PlaceData({self._place}, {self._alpha!r}, t={self._t})'


class Instance:
    """An approximation problem.

    Args:
        q (QuadForm): The regular form defining the quadric `q = 1`.
        places (Sequence[PlaceData]): The places of V.
        q0 (QuadForm, optional): Positive-definite form measuring sizes.
            Defaults to q when q is positive-definite, else to the sum
            of squares.
        space (AdelicSpaceQ, optional): The structure E. Defaults to Z^n
            with Gram matrix q0.
        budget (Fraction, optional): Global budget T (budget mode).
        name (str, optional): Label used in reports.

    Raises:
        DimensionMismatch: If the dimensions disagree.
        NotPositiveDefinite: If q0 or the Gram matrix of E is not
            positive-definite.
        DirichletException: On repeated places, a non-positive budget, or
            a budget combined with places other than infinity.
    """

    __slots__ = ('_budget', '_name', '_places', '_q', '_q0', '_space')

    def __init__(
            self,
            q: QuadForm,
            places: Sequence[PlaceData],
            q0: Optional[QuadForm] = None,
            space: Optional[AdelicSpaceQ] = None,
            budget: Any = None,
            name: Optional[str] = None) -> None:
        q0 = q0 or (q if q.is_positive_definite() else QuadForm.identity(q.dim))
        if q0.dim != q.dim:
            raise DimensionMismatch(f'q has dimension {q.dim}, q0 has {q0.dim}')
        if not q0.is_positive_definite():
            raise NotPositiveDefinite('q0 must be positive-definite')
        space = space or AdelicSpaceQ(q0)
        if space.dim != q.dim:
            raise DimensionMismatch(f'E has dimension {space.dim}, q has {q.dim}')
        if not _gram_form(space).is_positive_definite():
            raise NotPositiveDefinite('the Gram matrix of E must be positive-definite')
        places = sorted(places, key=lambda data: data.place)
        if len({data.place for data in places}) != len(places):
            raise DirichletException('a place occurs twice')
        budget = None if budget is None else parse_rat(budget)
        if budget is not None:
            if budget <= 0:
                raise DirichletException(f'the budget must be positive: {budget}')
            if [data.place for data in places] != [INFINITY]:
                raise DirichletException('a budget is only supported with V = {inf}')
        self._q = q
        self._q0 = q0
        self._space = space
        self._places = tuple(places)
        self._budget = budget
        self._name = name

    @property
    def q(self) -> QuadForm:
        """QuadForm: the form of the quadric."""
        return self._q

    @property
    def q0(self) -> QuadForm:
        """QuadForm: the size form."""
        return self._q0

    @property
    def space(self) -> AdelicSpaceQ:
        """AdelicSpaceQ: the structure E."""
        return self._space

    @property
    def places(self) -> tuple[PlaceData, ...]:
        """tuple: the places of V, archimedean first."""
        return self._places

    @property
    def budget(self) -> Optional[Fraction]:
        """Fraction: the global budget T (budget mode), or None."""
        return self._budget

    @property
    def name(self) -> Optional[str]:
        """str: label."""
        return self._name

    @property
    def dim(self) -> int:
        """int: n."""
        return self._q.dim

    @property
    def budget_mode(self) -> bool:
        """bool: True when a global budget drives the search."""
        return self._budget is not None

    def is_standard(self) -> bool:
        """Whether E is Z^n with Gram matrix q0."""
        return not self._space.local and _gram_form(self._space) == self._q0

    def __repr__(self) -> str:
        return f'Instance(name={self._name!r}, dim={self.dim}, V={[str(d.place) for d in self._places]})'


def _gram_form(space: AdelicSpaceQ) -> QuadForm:
    return space.gram_form()


def space_norm(space: AdelicSpaceQ, place: Place, x: Any) -> Real:
    """`||x||_{E,v}`: `sqrt(x^T G x)` at infinity, `|A_p x|_p` at p."""
    x = AlgVector.of(x)
    if place.is_archimedean:
        return Real.of(eval_q(_gram_form(space), x)).sqrt()
    return Real.of(space.local_norm(place.prime, x.rational()))


def alpha_norm(space: AdelicSpaceQ, data: PlaceData) -> Real:
    """`||alpha_v||_{E,v}`."""
    return space_norm(space, data.place, data.alpha)


def _alpha_norm_sq(space: AdelicSpaceQ, data: PlaceData) -> QF2:
    if data.place.is_archimedean:
        return eval_q(_gram_form(space), data.alpha)
    return QF2(space.local_norm(data.place.prime, data.alpha.rational()) ** 2)


def _dual(space: AdelicSpaceQ, q: QuadForm, data: PlaceData) -> Real:
    if data.place.is_archimedean:
        return dual_norm(q, data.alpha, INFINITY, gram=_gram_form(space))
    return dual_norm(
        q, data.alpha, data.place, local=space.local.get(data.place.prime))


def _block(top: Sequence[Sequence[Any]], corner: Any) -> list[list[Any]]:
    n = len(top)
    rows = [list(row) + [Fraction(0)] for row in top]
    rows.append([Fraction(0)] * n + [corner])
    return rows


def _quadratic(matrix: Sequence[Sequence[Any]], vector: Sequence[Any]) -> QF2:
    total = QF2(0)
    for i, row in enumerate(matrix):
        if vector[i] == 0:
            continue
        for j, value in enumerate(row):
            if vector[j] != 0 and value != 0:
                total = total + value * vector[i] * vector[j]
    return total


class TwistedSpace:
    """The twisted space E_t on `E x Q` and its realised lattice.

    Args:
        base (AdelicSpaceQ): The structure E.
        q (QuadForm): The form.
        places (Sequence[PlaceData]): The places of V with parameters.
        space (AdelicSpaceQ): E_t as an adelic space.
        lattice (LatticePresentation): Its realised lattice.
        alpha_sq (QF2): `|alpha|^2`.
    """

    __slots__ = ('_alpha_sq', '_base', '_lattice', '_places', '_q', '_space')

    def __init__(
            self,
            base: AdelicSpaceQ,
            q: QuadForm,
            places: Sequence[PlaceData],
            space: AdelicSpaceQ,
            lattice: LatticePresentation,
            alpha_sq: QF2) -> None:
        self._base = base
        self._q = q
        self._places = tuple(places)
        self._space = space
        self._lattice = lattice
        self._alpha_sq = alpha_sq

    @property
    def base(self) -> AdelicSpaceQ:
        """AdelicSpaceQ: E."""
        return self._base

    @property
    def q(self) -> QuadForm:
        """QuadForm: the form."""
        return self._q

    @property
    def places(self) -> tuple[PlaceData, ...]:
        """tuple: the places of V."""
        return self._places

    @property
    def space(self) -> AdelicSpaceQ:
        """AdelicSpaceQ: E_t."""
        return self._space

    @property
    def gram(self) -> tuple[tuple[Any, ...], ...]:
        """tuple: Gram matrix of E_t at infinity."""
        return self._space.gram

    @property
    def lattice(self) -> LatticePresentation:
        """LatticePresentation: the lattice of E_t."""
        return self._lattice

    @property
    def alpha_sq(self) -> QF2:
        """QF2: `|alpha|^2`."""
        return self._alpha_sq

    def alpha_module(self) -> Real:
        """`|alpha|`, the product of `||alpha_v||_{E,v}` over V."""
        return Real.of(self._alpha_sq).sqrt()

    def height_sq(self) -> QF2:
        """`H(E_t)^2 = |alpha|^2 H(E)^2`."""
        return self._alpha_sq * self._base.height_sq()

    def place_data(self, place: Place) -> Optional[PlaceData]:
        """Data of a place of V (None outside V)."""
        return next((data for data in self._places if data.place == place), None)

    def __repr__(self) -> str:
        return f'TwistedSpace(V={[str(data.place) for data in self._places]})'


def build_twisted(
        space: AdelicSpaceQ,
        q: QuadForm,
        places: Sequence[PlaceData],
        allow_unit: bool = False) -> TwistedSpace:
    """Build E_t and realise it as a lattice of `Q^(n+1)`.

    At a place of V the norm of `(x, y)` is the product norm of
    `xi(x, y)` with the last coordinate weighted by `||alpha_v||`.
    Elsewhere E_t is `E x Q`.

    Args:
        space (AdelicSpaceQ): The structure E.
        q (QuadForm): The form.
        places (Sequence[PlaceData]): The places of V.
        allow_unit (bool, optional): Accept `t = 1` at infinity.

    Returns:
        TwistedSpace: E_t.

    Raises:
        TwistError: On invalid place data or if the determinant of the
            realised lattice misses `H(E_t)^2`.
    """
    for data in places:
        data.validate(q, allow_unit)
    n = q.dim
    gram = _block(space.gram, Fraction(1))
    local = {p: _block(matrix, Fraction(1)) for p, matrix in space.local.items()}
    alpha_sq = QF2(1)
    for data in places:
        twist = xi_matrix(q, data.alpha, data.t)
        if data.place.is_archimedean:
            weight = eval_q(_gram_form(space), data.alpha)
            scale = _block(space.gram, weight)
            gram = mat_mul(mat_mul(mat_transpose(twist), scale), twist)
            alpha_sq = alpha_sq * weight
            continue
        p = data.place.prime
        matrix = space.local.get(p, mat_identity(n))
        image = mat_vec(matrix, data.alpha.rational())
        k = min(valuation(value, p) for value in image if value)
        rational = [[QF2.of(value).rational() for value in row] for row in twist]
        local[p] = mat_mul(_block(matrix, Fraction(p) ** k), rational)
        alpha_sq = alpha_sq * Fraction(p) ** (-2 * k)
    twisted = AdelicSpaceQ(gram, local)
    lattice = realize_adelic(twisted)
    det = QF2.of(mat_det(lattice.coordinate_gram()))
    expected = alpha_sq * space.height_sq()
    if det != expected:
        raise TwistError(f'det of the twisted lattice is {det}, expected {expected}')
    return TwistedSpace(space, q, places, twisted, lattice, alpha_sq)


def twisted_norm(space: TwistedSpace, place: Place, x: Any, y: Any) -> Real:
    """`||(x, y)||_{E_t,v}` at any place."""
    vector = list(AlgVector.of(list(x) + [y]))
    if place.is_archimedean:
        return Real.of(_quadratic(space.gram, vector)).sqrt()
    values = [value.rational() for value in vector]
    matrix = space.space.local.get(place.prime)
    if matrix is not None:
        values = mat_vec(matrix, values)
    return Real.of(max(padic_abs(value, place.prime) for value in values))


def height_Q(space: TwistedSpace, max_bits: int = MAX_BITS) -> tuple[dict[Place, Real], Real]:
    """Norms `||Q||_v` on E_t and their product H(Q).

    Outside V the norm is `max(1, ||q||_v)`; at a place of V it is
    `max(||q||_v, 1 / ||alpha_v||^2)`.

    Returns:
        tuple: (place to norm, H(Q)); places missing from the map have
            norm 1.
    """
    base = space.base
    gram = _gram_form(base)
    primes = set(form_primes(space.q, base.local))
    primes.update(data.place.prime for data in space.places if not data.place.is_archimedean)
    norms = {}
    for place in [INFINITY] + [Place(p) for p in sorted(primes)]:
        if place.is_archimedean:
            norm = inf_norm_bound(space.q, gram)
        else:
            norm = Real.of(local_norm(space.q, place.prime, base.local.get(place.prime)))
        data = space.place_data(place)
        floor = Real.of(1) if data is None else Real.of(1 / _alpha_norm_sq(base, data))
        norms[place] = real_max([norm, floor], max_bits)
    product = Real.of(1)
    for norm in norms.values():
        product = product * norm
    return norms, product


# thresholds

class Thresholds:
    """Thresholds of an instance.

    Args:
        t0 (Real): The base threshold.
        t1 (Real, optional): The enlarged threshold when i(Q) = i(q).
        t (Real): The search threshold.
        index_q (int): i(q).
        index_Q (int): i(Q).
        lambda1 (Real): First minimum of E.
        height_one (Real): H(1, q).
        gamma_source (str): `exact`, `hermite_bound` or `euclidean`.
        profile (Profile): Constants used.
    """

    __slots__ = (
        '_gamma_source', '_height_one', '_index_Q', '_index_q', '_lambda1',
        '_profile', '_t', '_t0', '_t1')

    def __init__(
            self,
            t0: Real,
            t1: Optional[Real],
            t: Real,
            index_q: int,
            index_Q: int,
            lambda1: Real,
            height_one: Real,
            gamma_source: str,
            profile: Profile) -> None:
        self._t0 = t0
        self._t1 = t1
        self._t = t
        self._index_q = index_q
        self._index_Q = index_Q
        self._lambda1 = lambda1
        self._height_one = height_one
        self._gamma_source = gamma_source
        self._profile = profile

    @property
    def t0(self) -> Real:
        """Real: base threshold."""
        return self._t0

    @property
    def t1(self) -> Optional[Real]:
        """Real: enlarged threshold (only when i(Q) = i(q))."""
        return self._t1

    @property
    def t(self) -> Real:
        """Real: search threshold."""
        return self._t

    @property
    def index_q(self) -> int:
        """int: i(q)."""
        return self._index_q

    @property
    def index_Q(self) -> int:
        """int: i(Q)."""
        return self._index_Q

    @property
    def lambda1(self) -> Real:
        """Real: first minimum of E."""
        return self._lambda1

    @property
    def height_one(self) -> Real:
        """Real: H(1, q)."""
        return self._height_one

    @property
    def case(self) -> str:
        """str: `iQ_eq_iq_plus_1` or `iQ_eq_iq`."""
        return 'iQ_eq_iq' if self._index_Q == self._index_q else 'iQ_eq_iq_plus_1'

    @property
    def gamma_source(self) -> str:
        """str: where the Hermite constants come from."""
        return self._gamma_source

    @property
    def profile(self) -> Profile:
        """Profile: constants used."""
        return self._profile

    def to_json(self) -> dict[str, Any]:
        """JSON form."""
        return {
            'T0': self._t0.describe(),
            'T1': None if self._t1 is None else self._t1.describe(),
            'T': self._t.describe(),
            'case': self.case,
            'gamma_source': self._gamma_source,
            'profile': self._profile.value,
            'i_q': self._index_q,
            'i_Q': self._index_Q,
            'lambda1': self._lambda1.describe(),
            'H1q': self._height_one.describe()}

    def __repr__(self) -> str:
        return f'Thresholds(T={self._t.describe()}, case={self.case})'


def _alpha_module_sq(space: AdelicSpaceQ, places: Sequence[PlaceData]) -> QF2:
    value = QF2(1)
    for data in places:
        value = value * _alpha_norm_sq(space, data)
    return value


def thresholds(
        space: AdelicSpaceQ,
        q: QuadForm,
        places: Sequence[PlaceData],
        report: Optional[WittReport] = None,
        profile: Profile = Profile.ADELIC,
        max_bits: int = MAX_BITS,
        threads: int = 1) -> Thresholds:
    """Thresholds guaranteeing a solution.

    `T0 = c(i(Q)) c(n+1-i(Q)) (2 H(1,q))^((n+1-i(Q))/2) |alpha| H(E)` and
    `T = max(T0^(1/i(Q)), (sqrt 2/lambda1)^(i(Q)-1) T0)`; when
    `i(Q) = i(q)`, T0 inside T is replaced by `max(T0, T1)` with
    `T1 = 4 (sqrt 2/lambda1)^i(Q) T0^2`. The EUCLIDEAN profile uses
    `n^(n/2)` for the product of constants.

    Args:
        space (AdelicSpaceQ): The structure E.
        q (QuadForm): The form.
        places (Sequence[PlaceData]): The places of V.
        report (WittReport, optional): Witt decomposition of q.
        profile (Profile, optional): Constants. Defaults to ADELIC.
        max_bits (int, optional): Precision cap for comparisons.
        threads (int, optional): Workers for the first minimum.

    Returns:
        Thresholds: the thresholds.

    Raises:
        NoSolutionExists: If i(Q) = 0.
        DirichletException: If the EUCLIDEAN profile meets i(Q) = i(q).
    """
    report = report or witt_index(q)
    index_q, index_Q = report.index, extended_index(report)
    if index_Q == 0:
        raise NoSolutionExists('Q(x, y) = q(x) - y^2 is anisotropic')
    n = q.dim
    rest = n + 1 - index_Q
    if profile is Profile.EUCLIDEAN:
        if index_Q == index_q:
            raise DirichletException('the euclidean profile needs i(Q) > i(q)')
        constant = Fraction(n) ** n
        source = 'euclidean'
    else:
        constant = hermite_power(index_Q) * hermite_power(rest)
        source = 'exact' if max(index_Q, rest) <= 8 else 'hermite_bound'
    _, height_one = height_q(q, _gram_form(space), space.local)
    t0_sq = (
        Real.of(constant) * (2 * height_one) ** rest
        * Real.of(_alpha_module_sq(space, places)) * Real.of(space.height_sq()))
    t0 = t0_sq.sqrt()
    lambda1 = Real.of(first_minimum(realize_adelic(space), threads)).sqrt()
    ratio = Real.sqrt_of(2) / lambda1
    t1 = None
    base = t0
    if index_Q == index_q:
        t1 = 4 * ratio ** index_Q * t0_sq
        base = real_max([t0, t1], max_bits)
    t = real_max([base.root(index_Q), ratio ** (index_Q - 1) * base], max_bits)
    return Thresholds(t0, t1, t, index_q, index_Q, lambda1, height_one, source, profile)


# certificates

class Check(NamedTuple):
    """One evaluated inequality or identity."""

    name: str
    place: Optional[Place]
    lhs: Real
    relation: str
    rhs: Real
    holds: bool
    undecidable: bool = False

    def to_json(self) -> dict[str, Any]:
        """JSON form."""
        return {
            'name': self.name,
            'place': None if self.place is None else self.place.to_json(),
            'lhs': self.lhs.describe(),
            'relation': self.relation,
            'rhs': self.rhs.describe(),
            'holds': self.holds}


_RELATIONS: dict[str, Callable[[int], bool]] = {
    '<=': lambda sign: sign <= 0,
    '>=': lambda sign: sign >= 0,
    '=': lambda sign: sign == 0,
    '!=': lambda sign: sign != 0}


def _check(
        name: str,
        place: Optional[Place],
        lhs: Any,
        relation: str,
        rhs: Any,
        max_bits: int) -> Check:
    lhs, rhs = Real.of(lhs), Real.of(rhs)
    try:
        holds = _RELATIONS[relation](compare(lhs, rhs, max_bits))
    except UndecidableComparison:
        return Check(name, place, lhs, relation, rhs, False, True)
    return Check(name, place, lhs, relation, rhs, holds)


def _combine(place: Place, first: Real, second: Real) -> Real:
    if place.is_archimedean:
        left, right = first.square, second.square
        if left is not None and right is not None and (
                left.is_rational or right.is_rational or left.d == right.d):
            return Real.of(left + right).sqrt()
        return (first * first + second * second).sqrt()
    return real_max([first, second])


class _Plan:
    """Everything needed to evaluate the checks of a candidate."""

    __slots__ = (
        '_budget', '_classic', '_duals', '_euclid', '_instance', '_kappas',
        '_max_bits', '_norms', '_places', '_thresholds', '_tv')

    def __init__(
            self,
            instance: Instance,
            limits: Thresholds,
            places: Sequence[PlaceData],
            max_bits: int,
            euclid: Optional[Thresholds] = None) -> None:
        self._instance = instance
        self._thresholds = limits
        self._places = tuple(places)
        self._max_bits = max_bits
        self._budget = instance.budget
        space, q = instance.space, instance.q
        self._norms = {data.place: alpha_norm(space, data) for data in places}
        self._duals = {data.place: _dual(space, q, data) for data in places}
        self._kappas = {
            place: self._norms[place] * self._duals[place] for place in self._norms}
        self._tv = {}
        for data in places:
            kappa = self._kappas[data.place]
            if data.place.is_archimedean:
                scale = Real.of(self._budget) if self._budget is not None else limits.t * data.t
            else:
                scale = Real.of(padic_abs(data.t / 2, data.place.prime))
            self._tv[data.place] = scale * kappa
        self._classic = _classic_setting(instance)
        self._euclid = None
        if euclid is not None and compare(self._budget, euclid.t, max_bits) >= 0:
            self._euclid = euclid

    @property
    def budgets(self) -> dict[Place, Real]:
        """dict: T_v per place of V."""
        return dict(self._tv)

    def _relevant(self, upsilon: Sequence[Fraction], phi: Fraction) -> list[Place]:
        inside = {data.place for data in self._places}
        primes = set(self._instance.space.local)
        for value in list(upsilon) + [phi]:
            primes.update(primefactors(value.denominator))
        places = [INFINITY] + [Place(p) for p in sorted(primes)]
        return [place for place in places if place not in inside]

    def checks(self, upsilon: Sequence[Fraction], phi: Fraction) -> list[Check]:
        """Evaluate every check for `(upsilon, phi)`."""
        bits = self._max_bits
        instance, q = self._instance, self._instance.q
        space = instance.space
        upsilon = [Fraction(value) for value in upsilon]
        phi = Fraction(phi)
        checks = [
            _check('isotropy', None, eval_q(q, upsilon), '=', phi * phi, bits),
            _check('phi_nonzero', None, phi, '!=', 0, bits)]
        if phi == 0:
            return checks
        limit = self._thresholds.t
        for place in self._relevant(upsilon, phi):
            size = space_norm(space, place, upsilon)
            if place.is_archimedean:
                checks.append(_check(
                    'bound_1', place, _combine(place, size, Real.of(abs(phi))), '<=', limit, bits))
            else:
                value = _combine(place, size, Real.of(padic_abs(phi, place.prime)))
                checks.append(_check('bound_1', place, value, '<=', 1, bits))
        for data in self._places:
            place = data.place
            size = space_norm(space, place, upsilon)
            norm, dual, budget = self._norms[place], self._duals[place], self._tv[place]
            gap = eval_q(q, data.alpha.scaled(phi) - AlgVector.of(upsilon))
            if place.is_archimedean:
                height = Real.of(abs(phi)) * norm
                lhs3 = Real.of(abs(gap))
                rhs3 = (
                    Real.sqrt_of(8) * limit * limit * Real.of(abs(phi))
                    / budget * norm * dual * dual)
            else:
                height = Real.of(padic_abs(phi, place.prime)) * norm
                lhs3 = Real.of(padic_abs(gap.rational(), place.prime))
                rhs3 = Real.of(padic_abs(phi, place.prime)) / budget * norm * dual * dual
            checks.append(_check('bound_2', place, _combine(place, size, height), '<=', budget, bits))
            checks.append(_check('bound_3', place, lhs3, '<=', rhs3, bits))
            checks.append(_check('dual_lower_bound', place, 1, '<=', dual * norm, bits))
            if place.is_archimedean:
                checks.extend(self._identities(data, upsilon, phi))
        if self._classic:
            checks.extend(self._classic_checks(upsilon, phi))
        if self._euclid is not None:
            checks.extend(self._euclidean_checks(upsilon, phi))
        return checks

    def _identities(
            self,
            data: PlaceData,
            upsilon: list[Fraction],
            phi: Fraction) -> list[Check]:
        q, alpha, bits = self._instance.q, data.alpha, self._max_bits
        pairing = eval_b(q, upsilon, alpha)
        error = eval_q(q, alpha - AlgVector.of([value / phi for value in upsilon]))
        big_x, big_y = twist_coords(pairing, phi, data.t)
        return [
            _check('conclusion_identity', INFINITY, error * phi, '=', (QF2.of(phi) - pairing) * 2, bits),
            _check('twist_identity', INFINITY, (QF2.of(phi) - pairing) * 2, '=', (big_y - big_x) * 2 / data.t, bits)]

    def _classic_checks(self, upsilon: list[Fraction], phi: Fraction) -> list[Check]:
        instance, bits = self._instance, self._max_bits
        q, n, data = instance.q, instance.dim, self._places[0]
        error = eval_q(q, data.alpha - AlgVector.of([value / phi for value in upsilon]))
        image, last = xi_apply(q, data.alpha, data.t, upsilon, phi)
        twisted = Real.of(eval_q(q, image) + last * last).sqrt()
        constant = 2 ** n * hermite_power(n) * q.det()
        return [
            _check('phi_lower', INFINITY, 1, '<=', phi, bits),
            _check('phi_upper', INFINITY, phi, '<=', self._budget, bits),
            _check('phi_twisted_bound', INFINITY, phi, '<=', Real.of(data.t) * twisted, bits),
            _check(
                'approximation', INFINITY, error, '<=',
                Real.sqrt_of(8) * constant / (phi * self._budget), bits)]

    def _euclidean_checks(self, upsilon: list[Fraction], phi: Fraction) -> list[Check]:
        instance, bits = self._instance, self._max_bits
        q, data = instance.q, self._places[0]
        norm, dual = self._norms[INFINITY], self._duals[INFINITY]
        limit = self._euclid.t
        size = eval_q(instance.q0, upsilon) + eval_q(instance.q0, data.alpha) * (phi * phi)
        gap = eval_q(q, data.alpha.scaled(phi) - AlgVector.of(upsilon))
        return [
            _check(
                'euclidean_size', INFINITY, size, '<=',
                (norm * dual * self._budget) ** 2, bits),
            _check(
                'euclidean_approximation', INFINITY, abs(gap), '<=',
                Real.sqrt_of(8) * limit * limit * abs(phi) * dual / self._budget, bits)]


def _classic_setting(instance: Instance) -> bool:
    q = instance.q
    return (
        instance.budget_mode and q == instance.q0 and q.is_integral
        and q.is_positive_definite() and instance.is_standard())


def _euclidean_setting(instance: Instance, limits: Thresholds) -> bool:
    return (
        instance.budget_mode and instance.q.is_integral and instance.is_standard()
        and limits.index_Q > limits.index_q)


class Certificate:
    """A solution `(upsilon, phi)` with its evaluated checks.

    Args:
        upsilon (Sequence[Fraction]): The vector part.
        phi (Fraction): The last coordinate (positive).
        places (Sequence[PlaceData]): Places of V with the parameters
            used by the search.
        limits (Thresholds): The thresholds.
        checks (Sequence[Check]): The evaluated checks.
        norm_sq (QF2): Squared archimedean norm in E_t.
        budget (Fraction, optional): T in budget mode.
    """

    __slots__ = ('_budget', '_checks', '_norm_sq', '_phi', '_places', '_thresholds', '_upsilon')

    def __init__(
            self,
            upsilon: Sequence[Fraction],
            phi: Fraction,
            places: Sequence[PlaceData],
            limits: Thresholds,
            checks: Sequence[Check],
            norm_sq: QF2,
            budget: Optional[Fraction] = None) -> None:
        self._upsilon = tuple(upsilon)
        self._phi = phi
        self._places = tuple(places)
        self._thresholds = limits
        self._checks = tuple(checks)
        self._norm_sq = norm_sq
        self._budget = budget

    @property
    def upsilon(self) -> tuple[Fraction, ...]:
        """tuple: the vector part."""
        return self._upsilon

    @property
    def phi(self) -> Fraction:
        """Fraction: the last coordinate."""
        return self._phi

    @property
    def point(self) -> list[Fraction]:
        """list: the rational point `upsilon / phi` of `q = 1`."""
        return [value / self._phi for value in self._upsilon]

    @property
    def places(self) -> tuple[PlaceData, ...]:
        """tuple: places with their parameters."""
        return self._places

    @property
    def thresholds(self) -> Thresholds:
        """Thresholds: the thresholds."""
        return self._thresholds

    @property
    def checks(self) -> tuple[Check, ...]:
        """tuple: the checks."""
        return self._checks

    @property
    def norm_sq(self) -> QF2:
        """QF2: squared twisted norm at infinity."""
        return self._norm_sq

    @property
    def budget(self) -> Optional[Fraction]:
        """Fraction: T in budget mode."""
        return self._budget

    @property
    def accepted(self) -> bool:
        """bool: True when every check holds."""
        return all(check.holds for check in self._checks)

    def check(self, name: str, place: Optional[Place] = None) -> Optional[Check]:
        """A check by name (and place)."""
        return next(
            (c for c in self._checks if c.name == name and (place is None or c.place == place)),
            None)

    def summary(self) -> dict[str, Any]:
        """Observed against proven approximation at the first place of V.

        `observed` is `|q(alpha phi - upsilon)|_v / |phi|_v`, `bound` the
        matching proven right-hand side and `ratio` their quotient.
        """
        check = self.check('bound_3', INFINITY) or self.check('bound_3')
        result = {
            'T': None if self._budget is None else str(self._budget),
            'threshold': self._thresholds.t.describe(),
            'phi': str(self._phi),
            'accepted': self.accepted}
        if check is None:
            return {**result, 'bound': None, 'observed': None, 'ratio': None}
        scale = Real.of(abs(self._phi))
        if not check.place.is_archimedean:
            scale = Real.of(padic_abs(self._phi, check.place.prime))
        ratio = (check.lhs / check.rhs).at(64)
        return {
            **result,
            'bound': (check.rhs / scale).describe(),
            'observed': (check.lhs / scale).describe(),
            'ratio': float((ratio.lo + ratio.hi) / 2)}

    def to_json(self) -> dict[str, Any]:
        """JSON form."""
        return {
            'upsilon': [str(value) for value in self._upsilon],
            'phi': str(self._phi),
            'point': [str(value) for value in self.point],
            'mode': 'places' if self._budget is None else 'budget',
            'T': None if self._budget is None else str(self._budget),
            'places': [data.to_json() for data in self._places],
            'thresholds': self._thresholds.to_json(),
            'twisted_norm_sq': str(self._norm_sq),
            'checks': [check.to_json() for check in self._checks],
            'accepted': self.accepted}

    def __repr__(self) -> str:
        return f'Certificate(upsilon={[str(v) for v in self._upsilon]}, phi={self._phi})'


class VerifyReport(NamedTuple):
    """Outcome of an independent verification."""

    accepted: bool
    undecidable: bool
    failures: tuple[str, ...]
    checks: tuple[Check, ...]

    def to_json(self) -> dict[str, Any]:
        """JSON form."""
        return {
            'accepted': self.accepted,
            'undecidable': self.undecidable,
            'failures': list(self.failures),
            'checks': [check.to_json() for check in self.checks]}


def _failure_name(check: Check) -> str:
    return check.name if check.place is None else f'{check.name}@{check.place}'


class Approximator:
    """Solver and verifier of approximation instances.

    Args:
        settings (Settings, optional): Tunables. Defaults to Settings().
        logger (Logger, optional): Logger to use. Defaults to None.
    """

    __slots__ = ('_logger', '_settings')

    def __init__(
            self,
            settings: Optional[Settings] = None,
            logger: Optional[Logger] = None) -> None:
        self._settings = settings or Settings()
        self._logger = logger

    @property
    def settings(self) -> Settings:
        """Settings: tunables."""
        return self._settings

    def thresholds(self, instance: Instance, report: Optional[WittReport] = None) -> tuple[Thresholds, Optional[Thresholds]]:
        """Active thresholds and, when they apply, the euclidean ones."""
        settings = self._settings
        report = report or witt_index(instance.q)
        limits = thresholds(
            instance.space, instance.q, instance.places, report,
            settings.profile, settings.max_bits, settings.threads)
        euclid = None
        if _euclidean_setting(instance, limits):
            euclid = limits if settings.profile is Profile.EUCLIDEAN else thresholds(
                instance.space, instance.q, instance.places, report,
                Profile.EUCLIDEAN, settings.max_bits, settings.threads)
        elif settings.profile is Profile.EUCLIDEAN:
            raise DirichletException(
                'the euclidean profile needs an integral q, E = (Z^n, q0), '
                'V = {inf}, a budget and i(Q) > i(q)')
        if self._logger:
            self._logger.info(
                'thresholds', T=limits.t.describe(), case=limits.case,
                i_q=limits.index_q, i_Q=limits.index_Q)
        return limits, euclid

    def _budget_places(self, instance: Instance, limits: Thresholds) -> tuple[list[PlaceData], Fraction]:
        """Rational `t` and squared search radius for a global budget.

        When `T / threshold` is irrational, t is a rational just below it
        and the radius grows by the relative gap times the condition
        number of alpha. That widening is first order in the gap: a
        radius that falls short ends in SearchExhausted, while the
        checks of an emitted certificate always use T itself.
        """
        settings = self._settings
        budget = instance.budget
        data = instance.places[0]
        if compare(budget, limits.t, settings.max_bits) < 0:
            raise BudgetBelowThreshold(
                f'T = {budget} is below the threshold {limits.t.describe()}')
        target = Real.of(budget) / limits.t
        limit_hi = limits.t.at(64).hi
        if target.exact is not None and target.exact.is_rational:
            t = target.exact.rational()
            spread = Fraction(0)
        else:
            enclosure = target.at(128)
            t = max(Fraction(1), enclosure.lo)
            spread = max(
                abs(t / enclosure.lo - 1), abs(t / enclosure.hi - 1),
                abs(enclosure.lo / t - 1), abs(enclosure.hi / t - 1))
        kappa = alpha_norm(instance.space, data) * _dual(instance.space, instance.q, data)
        radius = limit_hi * (1 + spread * kappa.at(64).hi)
        if spread == 0 and limits.t.square is not None and limits.t.square.is_rational:
            return [data.with_t(t)], limits.t.square.rational()
        return [data.with_t(t)], radius * radius

    def _places_radius(self, limits: Thresholds) -> Fraction:
        if limits.t.square is not None and limits.t.square.is_rational:
            return limits.t.square.rational()
        return limits.t.at(64).hi ** 2

    def _search(
            self,
            lattice: LatticePresentation,
            radius: Fraction,
            predicate: Callable[[tuple[int, ...], QF2], bool],
            key: Optional[Callable[[ShortVector], Any]]) -> Optional[ShortVector]:
        threads = self._settings.threads
        if key is not None:
            return search_shortest(lattice, radius, predicate, key, threads)
        gram = lattice.coordinate_gram()
        current = min(QF2.of(gram[i][i]).enclosure(64).hi for i in range(lattice.dim))
        while True:
            current = min(current, radius)
            if self._logger:
                self._logger.debug('search', radius_sq=str(current))
            found = search_shortest(lattice, current, predicate, threads=threads)
            if found is not None or current == radius:
                return found
            current *= SEARCH_GROWTH

    def solve(self, instance: Instance) -> Certificate:
        """Find a certified solution.

        Args:
            instance (Instance): The problem.

        Returns:
            Certificate: the solution with every check evaluated.

        Raises:
            NoSolutionExists: If i(Q) = 0.
            BudgetBelowThreshold: If T is below the threshold.
            SearchExhausted: If nothing qualifies (never expected).
        """
        settings = self._settings
        limits, euclid = self.thresholds(instance)
        if instance.budget_mode:
            places, radius = self._budget_places(instance, limits)
        else:
            places, radius = list(instance.places), self._places_radius(limits)
        twisted = build_twisted(instance.space, instance.q, places, allow_unit=instance.budget_mode)
        lattice = lll(twisted.lattice, settings.delta)
        plan = _Plan(instance, limits, places, settings.max_bits, euclid)
        q = instance.q

        def split(coords: Sequence[int]) -> tuple[list[Fraction], Fraction]:
            vector = lattice.vector(coords)
            if vector[-1] < 0:
                vector = [-value for value in vector]
            return vector[:-1], vector[-1]

        def predicate(coords: tuple[int, ...], _: QF2) -> bool:
            upsilon, phi = split(coords)
            if phi == 0 or eval_q(q, upsilon) != phi * phi:
                return False
            return all(check.holds for check in plan.checks(upsilon, phi))

        key = None
        archimedean = next((d for d in places if d.place.is_archimedean), None)
        if settings.best and archimedean is not None:
            def key(vector: ShortVector) -> tuple[QF2, tuple[int, ...]]:
                upsilon, phi = split(vector.coords)
                gap = eval_q(q, archimedean.alpha.scaled(phi) - AlgVector.of(upsilon))
                return abs(gap), vector.coords
        if self._logger:
            self._logger.info('searching', dim=lattice.dim, radius_sq=str(radius))
        found = self._search(lattice, radius, predicate, key)
        if found is None:
            raise SearchExhausted('no isotropic vector with phi != 0 inside the guaranteed radius')
        upsilon, phi = split(found.coords)
        certificate = Certificate(
            upsilon, phi, places, limits, plan.checks(upsilon, phi),
            found.norm_sq, instance.budget)
        if self._logger:
            self._logger.info(
                'solved', phi=str(phi), upsilon=[str(v) for v in upsilon],
                accepted=certificate.accepted)
        return certificate

    def verify(
            self,
            instance: Instance,
            upsilon: Sequence[Any],
            phi: Any,
            parameters: Optional[dict[Place, Fraction]] = None) -> VerifyReport:
        """Re-evaluate every check of a claimed solution from the inputs.

        Args:
            instance (Instance): The problem.
            upsilon (Sequence): The claimed vector part.
            phi (Fraction): The claimed last coordinate.
            parameters (dict, optional): `t_v` used by the solver (budget
                mode); defaults to the instance's.

        Returns:
            VerifyReport: acceptance with the names of the failed checks.
        """
        settings = self._settings
        upsilon = [parse_rat(value) for value in upsilon]
        phi = parse_rat(phi)
        if len(upsilon) != instance.dim:
            raise DimensionMismatch(f'upsilon has dimension {len(upsilon)}, q has {instance.dim}')
        parameters = parameters or {}
        places = [
            data.with_t(parameters.get(data.place, data.t if data.t is not None else 1))
            for data in instance.places]
        limits, euclid = self.thresholds(instance)
        checks = []
        if instance.budget_mode:
            checks.append(_check(
                'budget_threshold', INFINITY, instance.budget, '>=', limits.t, settings.max_bits))
        for data in places:
            try:
                data.validate(instance.q, allow_unit=instance.budget_mode)
            except TwistError:
                checks.append(Check(
                    'place_parameters', data.place, Real.of(data.t or 0), '>', Real.of(1), False))
        plan = _Plan(instance, limits, places, settings.max_bits, euclid)
        checks.extend(plan.checks(upsilon, phi))
        failures = tuple(_failure_name(check) for check in checks if not check.holds)
        undecidable = any(check.undecidable for check in checks)
        if self._logger:
            self._logger.info('verified', accepted=not failures, failures=list(failures))
        return VerifyReport(not failures, undecidable, failures, tuple(checks))

    def heights(self, instance: Instance) -> dict[str, Real]:
        """H(E), H(q), H(1, q) and the first minimum of E."""
        space = instance.space
        h_q, h_one = height_q(instance.q, _gram_form(space), space.local)
        minimum = first_minimum(realize_adelic(space), self._settings.threads)
        return {
            'H_E': space.height(),
            'H_q': h_q,
            'H_1q': h_one,
            'lambda1': Real.of(minimum).sqrt()}
