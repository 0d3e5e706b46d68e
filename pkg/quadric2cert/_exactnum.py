# -*- coding: UTF-8 -*-
#
# copyright: 2020-2022, Frederico Martins
# author: Frederico Martins <http://github.com/fscm>
# license: SPDX-License-Identifier: MIT

"""Exact scalar arithmetic module.

This module provides the exact numbers every other module computes
with: rationals (`fractions.Fraction`), elements `a + b*sqrt(d)` of a
real quadratic field (`QF2`), dyadic enclosures (`DyadicInterval`) and
certified reals (`Real`) that keep an exact value or an exact square
whenever one is known and fall back to enclosures of escalating
precision otherwise.

The following is a simple usage example::

    >>> from ._exactnum import QF2, Real, compare, parse_rat
    >>> x = QF2(parse_rat('-7/5'), 1, 2)
    >>> x.sign()
    1
    >>> compare(Real.sqrt_of(2), Real.of(parse_rat('7/5')))
    1

The module contains the following public classes:
    - QF2 -- Element of a real quadratic field, exactly comparable.
    - DyadicInterval -- Closed interval with dyadic end points.
    - Real -- Certified real number.
    - Quadric2CertException -- Root of every exception of the package.
    - ExactnumException -- Generic exact arithmetic exception.
    - DomainError -- Input outside the domain of an operation.
    - UndecidableComparison -- Comparison not decided at the precision
        cap.

All other classes in this module are considered implementation details.
"""

from fractions import Fraction
from math import isqrt
from re import compile as re_compile
from typing import Any, Callable, Final, Optional, Sequence, Union
from sympy import integer_nthroot
from sympy.ntheory.factor_ import core


__all__ = [
    'DomainError',
    'DyadicInterval',
    'ExactnumException',
    'QF2',
    'Quadric2CertException',
    'Real',
    'UndecidableComparison',
    'compare',
    'format_rat',
    'is_square',
    'mat_det',
    'mat_identity',
    'mat_inverse',
    'mat_mul',
    'mat_transpose',
    'mat_vec',
    'parse_rat',
    'qf2_sign',
    'qf2_sqrt',
    'real_max',
    'real_min',
    'sqrt_enclosure']


BASE_BITS: Final[int] = 64
GUARD_BITS: Final[int] = 8
MAX_BITS: Final[int] = 4096

_RAT_PATTERN = re_compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$')

Scalar = Union[int, Fraction, 'QF2']


class Quadric2CertException(Exception):
    """Root exception of the package."""


class ExactnumException(Quadric2CertException):
    """Generic exact arithmetic exception."""


class DomainError(ExactnumException):
    """Input outside the domain of an operation."""


class UndecidableComparison(ExactnumException):
    """An enclosure still straddles zero at the precision cap."""


class _Imprecise(ExactnumException):
    """An enclosure is too wide for the requested operation."""


def parse_rat(value: Any) -> Fraction:
    """Parse an exact rational.

    Accepts integers, fractions and the textual forms `p` and `p/q`.
    Decimal strings and floats are rejected.

    Args:
        value (Any): Value to parse.

    Returns:
        Fraction: The rational.

    Raises:
        DomainError: If the value is not an exact rational.
    """
    if isinstance(value, bool):
        raise DomainError(f'not an exact rational: {value!r}')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        match = _RAT_PATTERN.match(value)
        if not match:
            raise DomainError(f'not an exact rational: {value!r}')
        denominator = int(match.group(2) or 1)
        if denominator == 0:
            raise DomainError(f'zero denominator: {value!r}')
        return Fraction(int(match.group(1)), denominator)
    raise DomainError(f'not an exact rational: {value!r}')


def format_rat(value: Fraction) -> str:
    """Textual form `p` or `p/q` of a rational."""
    return str(Fraction(value))


def _floor_scaled(value: Fraction, bits: int) -> int:
    return (value.numerator << bits) // value.denominator


def _ceil_scaled(value: Fraction, bits: int) -> int:
    return -((-value.numerator << bits) // value.denominator)


def sqrt_enclosure(value: Fraction, bits: int) -> 'DyadicInterval':
    """Dyadic enclosure of a square root.

    Args:
        value (Fraction): Non-negative rational.
        bits (int): Precision; the width is at most `2**-bits`.

    Returns:
        DyadicInterval: `[lo, hi]` with `lo**2 <= value <= hi**2`.

    Raises:
        DomainError: If `value` is negative.
    """
    value = Fraction(value)
    if value < 0:
        raise DomainError(f'square root of a negative number: {value}')
    if bits < 0:
        raise DomainError('precision must be non-negative')
    scaled = (value.numerator << (2 * bits)) // value.denominator
    root = isqrt(scaled)
    lo = Fraction(root, 1 << bits)
    if lo * lo == value:
        return DyadicInterval(lo, lo)
    return DyadicInterval(lo, Fraction(root + 1, 1 << bits))


def _root_enclosure(value: Fraction, k: int, bits: int) -> 'DyadicInterval':
    if k == 1:
        return DyadicInterval(value, value)
    if value < 0:
        raise DomainError(f'root of a negative number: {value}')
    scaled = (value.numerator << (k * bits)) // value.denominator
    root, _ = integer_nthroot(scaled, k)
    root = int(root)
    lo = Fraction(root, 1 << bits)
    if lo ** k == value:
        return DyadicInterval(lo, lo)
    return DyadicInterval(lo, Fraction(root + 1, 1 << bits))


def qf2_sqrt(value: Fraction) -> 'QF2':
    """Square root of a non-negative rational as a QF2.

    Raises:
        DomainError: If `value` is negative.
    """
    value = Fraction(value)
    if value < 0:
        raise DomainError(f'square root of a negative number: {value}')
    return QF2(0, Fraction(1, value.denominator), value.numerator * value.denominator)


def is_square(value: Fraction) -> Optional[Fraction]:
    """Square root of a rational square.

    Args:
        value (Fraction): The rational.

    Returns:
        Fraction: `s >= 0` with `s**2 == value`, or None when `value` is
            not the square of a rational.
    """
    value = Fraction(value)
    if value < 0:
        return None
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


class DyadicInterval:
    """Closed interval with rational (dyadic once rounded) end points.

    Args:
        lo (Fraction): Lower end point.
        hi (Fraction): Upper end point.

    Raises:
        DomainError: If `lo > hi`.
    """

    __slots__ = ('_hi', '_lo')

    def __init__(self, lo: Scalar, hi: Scalar) -> None:
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise DomainError(f'empty interval [{lo}, {hi}]')
        self._lo = lo
        self._hi = hi

    @property
    def hi(self) -> Fraction:
        """Fraction: upper end point."""
        return self._hi

    @property
    def lo(self) -> Fraction:
        """Fraction: lower end point."""
        return self._lo

    @property
    def width(self) -> Fraction:
        """Fraction: hi - lo."""
        return self._hi - self._lo

    def contains(self, value: Scalar) -> bool:
        """Whether a rational lies in the interval."""
        if isinstance(value, QF2):
            enclosure = value.enclosure(BASE_BITS)
            return self._lo <= enclosure.lo and enclosure.hi <= self._hi
        return self._lo <= Fraction(value) <= self._hi

    def sign(self) -> Optional[int]:
        """Sign of every point of the interval, None if it straddles 0."""
        if self._lo > 0:
            return 1
        if self._hi < 0:
            return -1
        if self._lo == self._hi == 0:
            return 0
        return None

    def rounded(self, bits: int) -> 'DyadicInterval':
        """Outward rounding to the grid `2**-bits`."""
        return DyadicInterval(
            Fraction(_floor_scaled(self._lo, bits), 1 << bits),
            Fraction(_ceil_scaled(self._hi, bits), 1 << bits))

    def __add__(self, other: 'DyadicInterval') -> 'DyadicInterval':
        return DyadicInterval(self._lo + other.lo, self._hi + other.hi)

    def __sub__(self, other: 'DyadicInterval') -> 'DyadicInterval':
        return DyadicInterval(self._lo - other.hi, self._hi - other.lo)

    def __neg__(self) -> 'DyadicInterval':
        return DyadicInterval(-self._hi, -self._lo)

    def __mul__(self, other: 'DyadicInterval') -> 'DyadicInterval':
        products = (
            self._lo * other.lo, self._lo * other.hi,
            self._hi * other.lo, self._hi * other.hi)
        return DyadicInterval(min(products), max(products))

    def __truediv__(self, other: 'DyadicInterval') -> 'DyadicInterval':
        if other.lo <= 0 <= other.hi:
            raise _Imprecise('divisor enclosure contains zero')
        return self * DyadicInterval(1 / other.hi, 1 / other.lo)

    def __pow__(self, k: int) -> 'DyadicInterval':
        if k == 0:
            return DyadicInterval(1, 1)
        if k < 0:
            return DyadicInterval(1, 1) / (self ** -k)
        ends = (self._lo ** k, self._hi ** k)
        if k % 2 == 0 and self._lo < 0 < self._hi:
            return DyadicInterval(0, max(ends))
        return DyadicInterval(min(ends), max(ends))

    def abs(self) -> 'DyadicInterval':
        """Image of the interval under the absolute value."""
        if self._lo >= 0:
            return self
        if self._hi <= 0:
            return -self
        return DyadicInterval(0, max(-self._lo, self._hi))

    def sqrt(self, bits: int) -> 'DyadicInterval':
        """Enclosure of the square roots of the (non-negative) points."""
        if self._hi < 0:
            raise DomainError('square root of a negative enclosure')
        lo = sqrt_enclosure(max(self._lo, Fraction(0)), bits).lo
        return DyadicInterval(lo, sqrt_enclosure(self._hi, bits).hi)

    def root(self, k: int, bits: int) -> 'DyadicInterval':
        """Enclosure of the k-th roots of the (non-negative) points."""
        if self._hi < 0:
            raise DomainError('root of a negative enclosure')
        lo = _root_enclosure(max(self._lo, Fraction(0)), k, bits).lo
        return DyadicInterval(lo, _root_enclosure(self._hi, k, bits).hi)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DyadicInterval):
            return NotImplemented
        return self._lo == other.lo and self._hi == other.hi

    def __hash__(self) -> int:
        return hash((self._lo, self._hi))

    def __repr__(self) -> str:
        return f'DyadicInterval({self._lo}, {self._hi})'

    def __str__(self) -> str:
        return f'[{self._lo}, {self._hi}]'


def qf2_sign(value: 'QF2') -> int:
    """Exact sign of `a + b*sqrt(d)` under the embedding `sqrt(d) > 0`.

    Args:
        value (QF2): The quadratic irrational.

    Returns:
        int: -1, 0 or 1.
    """
    a, b, d = value.a, value.b, value.d
    sign_a = (a > 0) - (a < 0)
    sign_b = (b > 0) - (b < 0)
    if sign_b == 0:
        return sign_a
    if sign_a == 0 or sign_a == sign_b:
        return sign_b
    gap = a * a - b * b * d
    return sign_a if gap > 0 else -sign_a


class QF2:
    """Element `a + b*sqrt(d)` of the real quadratic field Q(sqrt(d)).

    Args:
        a (Fraction, optional): Rational part. Defaults to 0.
        b (Fraction, optional): Irrational coefficient. Defaults to 0.
        d (int, optional): Positive integer; normalised to its squarefree
            part (the square factor moves into `b`). Defaults to 1.

    Raises:
        DomainError: If `d < 1`.
    """

    __slots__ = ('_a', '_b', '_d')

    def __init__(self, a: Scalar = 0, b: Scalar = 0, d: int = 1) -> None:
        a, b, d = Fraction(a), Fraction(b), int(d)
        if d < 1:
            raise DomainError(f'd must be a positive integer: {d}')
        if d > 1:
            squarefree = int(core(d, 2))
            b *= isqrt(d // squarefree)
            d = squarefree
        if d == 1:
            a, b = a + b, Fraction(0)
        if b == 0:
            d = 1
        self._a = a
        self._b = b
        self._d = d

    @classmethod
    def of(cls, value: Scalar) -> 'QF2':
        """Coerce an integer, a fraction, a rational string or a QF2."""
        if isinstance(value, QF2):
            return value
        if isinstance(value, str):
            return cls(parse_rat(value))
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls(value)
        raise DomainError(f'not an exact scalar: {value!r}')

    @classmethod
    def from_json(cls, data: Any) -> 'QF2':
        """Parse `{"a": Rat, "b": Rat, "d": int}` (or a bare rational)."""
        if isinstance(data, dict):
            try:
                d = data.get('d', 1)
                if isinstance(d, bool) or not isinstance(d, (int, str)):
                    raise DomainError(f'd must be an integer: {d!r}')
                return cls(
                    parse_rat(data.get('a', 0)),
                    parse_rat(data.get('b', 0)),
                    int(d))
            except ValueError as error:
                raise DomainError(str(error)) from error
        return cls(parse_rat(data))

    @property
    def a(self) -> Fraction:
        """Fraction: rational part."""
        return self._a

    @property
    def b(self) -> Fraction:
        """Fraction: coefficient of sqrt(d)."""
        return self._b

    @property
    def d(self) -> int:
        """int: squarefree radicand (1 for rationals)."""
        return self._d

    @property
    def is_rational(self) -> bool:
        """bool: True when the element is rational."""
        return self._b == 0

    def rational(self) -> Fraction:
        """The element as a fraction.

        Raises:
            DomainError: If the element is irrational.
        """
        if self._b:
            raise DomainError(f'{self} is not rational')
        return self._a

    def to_json(self) -> dict[str, Any]:
        """JSON object form."""
        return {'a': format_rat(self._a), 'b': format_rat(self._b), 'd': self._d}

    def _field(self, other: 'QF2') -> int:
        if self._d == other.d or other.is_rational:
            return self._d
        if self.is_rational:
            return other.d
        raise DomainError(
            f'mixed quadratic fields: sqrt({self._d}) and sqrt({other.d})')

    def __add__(self, other: Scalar) -> 'QF2':
        if not isinstance(other, (int, Fraction, QF2)):
            return NotImplemented
        other = QF2.of(other)
        return QF2(self._a + other.a, self._b + other.b, self._field(other))

    __radd__ = __add__

    def __neg__(self) -> 'QF2':
        return QF2(-self._a, -self._b, self._d)

    def __pos__(self) -> 'QF2':
        return self

    def __sub__(self, other: Scalar) -> 'QF2':
        if not isinstance(other, (int, Fraction, QF2)):
            return NotImplemented
        return self + (-QF2.of(other))

    def __rsub__(self, other: Scalar) -> 'QF2':
        return QF2.of(other) - self

    def __mul__(self, other: Scalar) -> 'QF2':
        if not isinstance(other, (int, Fraction, QF2)):
            return NotImplemented
        other = QF2.of(other)
        d = self._field(other)
        return QF2(
            self._a * other.a + self._b * other.b * d,
            self._a * other.b + self._b * other.a,
            d)

    __rmul__ = __mul__

    def conjugate(self) -> 'QF2':
        """Galois conjugate `a - b*sqrt(d)`."""
        return QF2(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Field norm `a**2 - d*b**2`."""
        return self._a * self._a - self._d * self._b * self._b

    def __truediv__(self, other: Scalar) -> 'QF2':
        if not isinstance(other, (int, Fraction, QF2)):
            return NotImplemented
        other = QF2.of(other)
        if other == 0:
            raise DomainError('division by zero')
        if other.is_rational:
            return QF2(self._a / other.a, self._b / other.a, self._d)
        self._field(other)
        return self * other.conjugate() / other.norm()

    def __rtruediv__(self, other: Scalar) -> 'QF2':
        return QF2.of(other) / self

    def __pow__(self, k: int) -> 'QF2':
        if k < 0:
            return QF2(1) / (self ** -k)
        result, base = QF2(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def sign(self) -> int:
        """Exact sign (see `qf2_sign`)."""
        return qf2_sign(self)

    def __abs__(self) -> 'QF2':
        return -self if self.sign() < 0 else self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._b == 0 and self._a == other
        if not isinstance(other, QF2):
            return NotImplemented
        return (self._a, self._b, self._d) == (other.a, other.b, other.d)

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __lt__(self, other: Scalar) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Scalar) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: Scalar) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: Scalar) -> bool:
        return (self - other).sign() >= 0

    def enclosure(self, bits: int) -> DyadicInterval:
        """Dyadic enclosure of width about `2**-bits`."""
        if self._b == 0:
            return DyadicInterval(self._a, self._a).rounded(bits)
        extra = abs(self._b).numerator.bit_length() + 2
        root = sqrt_enclosure(Fraction(self._d), bits + extra)
        scaled = DyadicInterval(self._b, self._b) * root
        return (DyadicInterval(self._a, self._a) + scaled).rounded(bits)

    def round(self) -> int:
        """A nearest integer (ties resolved upwards)."""
        if self._b == 0:
            return int((self._a + Fraction(1, 2)).__floor__())
        enclosure = self.enclosure(BASE_BITS)
        middle = (enclosure.lo + enclosure.hi) / 2
        return int((middle + Fraction(1, 2)).__floor__())

    def __repr__(self) -> str:
        return f'QF2({self._a}, {self._b}, {self._d})'

    def __str__(self) -> str:
        if self._b == 0:
            return format_rat(self._a)
        if self._a == 0:
            return f'{format_rat(self._b)}*sqrt({self._d})'
        sign = '+' if self._b > 0 else '-'
        return (
            f'{format_rat(self._a)}{sign}'
            f'{format_rat(abs(self._b))}*sqrt({self._d})')


def _compatible(x: QF2, y: QF2) -> bool:
    return x.d == y.d or x.is_rational or y.is_rational


class Real:
    """Certified real number.

    A real is known through enclosures computed on demand at any
    precision. When available, the exact value (a QF2) or the exact
    square of a non-negative value is carried along so that comparisons
    are decided by exact arithmetic first.

    Args:
        approx (Callable[[int], DyadicInterval]): Enclosure at a given
            precision.
        exact (QF2, optional): Exact value. Defaults to None.
        square (QF2, optional): Exact square of a non-negative value.
            Defaults to None.
    """

    __slots__ = ('_approx', '_cache', '_exact', '_square')

    def __init__(
            self,
            approx: Callable[[int], DyadicInterval],
            exact: Optional[QF2] = None,
            square: Optional[QF2] = None) -> None:
        self._approx = approx
        self._cache = {}
        self._exact = exact
        if square is None and exact is not None and exact.sign() >= 0:
            square = exact * exact
        self._square = square

    @classmethod
    def of(cls, value: Union[Scalar, 'Real']) -> 'Real':
        """Wrap an exact scalar (or return a Real unchanged)."""
        if isinstance(value, Real):
            return value
        value = QF2.of(value)
        return cls(value.enclosure, exact=value)

    @classmethod
    def sqrt_of(cls, value: Union[Scalar, 'Real']) -> 'Real':
        """Square root of a non-negative exact scalar or Real."""
        return cls.of(value).sqrt()

    @property
    def exact(self) -> Optional[QF2]:
        """QF2: exact value when known."""
        return self._exact

    @property
    def square(self) -> Optional[QF2]:
        """QF2: exact square when the value is known to be >= 0."""
        return self._square

    def at(self, bits: int) -> DyadicInterval:
        """Enclosure at a given precision."""
        if bits not in self._cache:
            self._cache[bits] = self._approx(bits)
        return self._cache[bits]

    def _lift(self, other: Union[Scalar, 'Real']) -> 'Real':
        return Real.of(other)

    def __add__(self, other: Union[Scalar, 'Real']) -> 'Real':
        other = self._lift(other)
        exact = None
        if self._exact is not None and other.exact is not None \
                and _compatible(self._exact, other.exact):
            exact = self._exact + other.exact
        return Real(
            lambda bits: (
                self.at(bits + GUARD_BITS) + other.at(bits + GUARD_BITS)
            ).rounded(bits),
            exact=exact)

    __radd__ = __add__

    def __neg__(self) -> 'Real':
        exact = -self._exact if self._exact is not None else None
        return Real(lambda bits: -self.at(bits), exact=exact)

    def __sub__(self, other: Union[Scalar, 'Real']) -> 'Real':
        return self + (-self._lift(other))

    def __rsub__(self, other: Union[Scalar, 'Real']) -> 'Real':
        return self._lift(other) - self

    def __mul__(self, other: Union[Scalar, 'Real']) -> 'Real':
        other = self._lift(other)
        exact = square = None
        if self._exact is not None and other.exact is not None \
                and _compatible(self._exact, other.exact):
            exact = self._exact * other.exact
        if self._square is not None and other.square is not None \
                and _compatible(self._square, other.square):
            square = self._square * other.square
        return Real(
            lambda bits: (
                self.at(bits + GUARD_BITS) * other.at(bits + GUARD_BITS)
            ).rounded(bits),
            exact=exact,
            square=square)

    __rmul__ = __mul__

    def __truediv__(self, other: Union[Scalar, 'Real']) -> 'Real':
        other = self._lift(other)
        exact = square = None
        if other.exact is not None and other.exact == 0:
            raise DomainError('division by zero')
        if self._exact is not None and other.exact is not None \
                and _compatible(self._exact, other.exact):
            exact = self._exact / other.exact
        if self._square is not None and other.square is not None \
                and other.square != 0 \
                and _compatible(self._square, other.square):
            square = self._square / other.square
        return Real(
            lambda bits: (
                self.at(bits + 2 * GUARD_BITS)
                / other.at(bits + 2 * GUARD_BITS)).rounded(bits),
            exact=exact,
            square=square)

    def __rtruediv__(self, other: Union[Scalar, 'Real']) -> 'Real':
        return self._lift(other) / self

    def __pow__(self, k: int) -> 'Real':
        if k == 0:
            return Real.of(1)
        if k < 0:
            return Real.of(1) / (self ** -k)
        exact = self._exact ** k if self._exact is not None else None
        square = self._square ** k if self._square is not None else None
        return Real(
            lambda bits: (self.at(bits + k * GUARD_BITS) ** k).rounded(bits),
            exact=exact,
            square=square)

    def sqrt(self) -> 'Real':
        """Square root of a non-negative real."""
        exact = square = None
        if self._exact is not None:
            if self._exact.sign() < 0:
                raise DomainError(f'square root of {self._exact}')
            square = self._exact
            if self._exact.is_rational:
                root = is_square(self._exact.a)
                if root is not None:
                    exact = QF2(root)
        return Real(
            lambda bits: self.at(2 * bits + GUARD_BITS).sqrt(bits + 1)
            .rounded(bits),
            exact=exact,
            square=square)

    def root(self, k: int) -> 'Real':
        """k-th root of a non-negative real."""
        if k == 1:
            return self
        if k == 2:
            return self.sqrt()
        exact = None
        if self._exact is not None and self._exact.is_rational:
            value = self._exact.a
            if value < 0:
                raise DomainError(f'root of {value}')
            num, num_exact = integer_nthroot(value.numerator, k)
            den, den_exact = integer_nthroot(value.denominator, k)
            if num_exact and den_exact:
                exact = QF2(Fraction(int(num), int(den)))
        return Real(
            lambda bits: self.at(k * bits + GUARD_BITS).root(k, bits + 1)
            .rounded(bits),
            exact=exact)

    def abs(self) -> 'Real':
        """Absolute value."""
        if self._exact is not None:
            return Real.of(abs(self._exact))
        if self._square is not None:
            return self
        return Real(lambda bits: self.at(bits).abs())

    def describe(self, bits: int = BASE_BITS) -> str:
        """Exact textual form, or a certified enclosure."""
        if self._exact is not None:
            return str(self._exact)
        if self._square is not None:
            return f'sqrt({self._square})'
        try:
            return str(self.at(bits))
        except _Imprecise:
            return str(self.at(4 * bits))

    def __repr__(self) -> str:
        return f'Real({self.describe()})'


def _exact_sign(x: Real, y: Real) -> Optional[int]:
    if x.exact is not None and y.exact is not None \
            and _compatible(x.exact, y.exact):
        return (x.exact - y.exact).sign()
    if x.square is not None and y.square is not None \
            and _compatible(x.square, y.square):
        return (x.square - y.square).sign()
    if x.exact is not None and y.square is not None \
            and _compatible(x.exact, y.square):
        if x.exact.sign() < 0:
            return -1
        return (x.exact * x.exact - y.square).sign()
    if y.exact is not None and x.square is not None \
            and _compatible(y.exact, x.square):
        if y.exact.sign() < 0:
            return 1
        return (x.square - y.exact * y.exact).sign()
    return None


def compare(
        x: Union[Scalar, Real],
        y: Union[Scalar, Real],
        max_bits: int = MAX_BITS) -> int:
    """Certified comparison of two reals.

    Exact values and exact squares are compared exactly. Otherwise the
    enclosures of `x - y` are refined from 64 bits, doubling, up to
    `max_bits`.

    Args:
        x (Real): Left-hand side.
        y (Real): Right-hand side.
        max_bits (int, optional): Precision cap. Defaults to 4096.

    Returns:
        int: -1, 0 or 1 as the sign of `x - y`.

    Raises:
        UndecidableComparison: If the sign is still unknown at the cap.
    """
    x, y = Real.of(x), Real.of(y)
    sign = _exact_sign(x, y)
    if sign is not None:
        return sign
    bits = BASE_BITS
    while bits <= max_bits:
        try:
            sign = (x.at(bits) - y.at(bits)).sign()
        except _Imprecise:
            sign = None
        if sign is not None and sign != 0:
            return sign
        bits *= 2
    raise UndecidableComparison(
        f'cannot decide {x.describe()} against {y.describe()} '
        f'at {max_bits} bits')


def real_max(
        values: Sequence[Union[Scalar, Real]],
        max_bits: int = MAX_BITS) -> Real:
    """Largest of a non-empty sequence of reals."""
    best = Real.of(values[0])
    for value in values[1:]:
        value = Real.of(value)
        if compare(value, best, max_bits) > 0:
            best = value
    return best


def real_min(
        values: Sequence[Union[Scalar, Real]],
        max_bits: int = MAX_BITS) -> Real:
    """Smallest of a non-empty sequence of reals."""
    best = Real.of(values[0])
    for value in values[1:]:
        value = Real.of(value)
        if compare(value, best, max_bits) < 0:
            best = value
    return best


Matrix = list[list[Any]]


def _lift(value: Any) -> Any:
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value


def mat_transpose(matrix: Sequence[Sequence[Any]]) -> Matrix:
    """Transpose of a matrix given by rows."""
    return [list(column) for column in zip(*matrix)]


def mat_mul(left: Sequence[Sequence[Any]], right: Sequence[Sequence[Any]]) -> Matrix:
    """Product of two matrices given by rows."""
    columns = mat_transpose(right)
    return [
        [sum((a * b for a, b in zip(row, column)), Fraction(0))
         for column in columns]
        for row in left]


def mat_vec(matrix: Sequence[Sequence[Any]], vector: Sequence[Any]) -> list[Any]:
    """Matrix times column vector."""
    return [sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in matrix]


def mat_identity(n: int) -> Matrix:
    """Identity matrix over the rationals."""
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_det(matrix: Sequence[Sequence[Any]]) -> Any:
    """Determinant by fraction-free (Bareiss) elimination.

    Works over the rationals and over a quadratic field alike.
    """
    rows = [[_lift(value) for value in row] for row in matrix]
    n = len(rows)
    if n == 0:
        return Fraction(1)
    sign, previous = 1, Fraction(1)
    for k in range(n - 1):
        if rows[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (
                    rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]
                ) / previous
        previous = rows[k][k]
    return rows[n - 1][n - 1] * sign


def mat_inverse(matrix: Sequence[Sequence[Any]]) -> Matrix:
    """Inverse by Gauss-Jordan elimination.

    Raises:
        DomainError: If the matrix is singular.
    """
    n = len(matrix)
    rows = [
        [_lift(value) for value in row]
        + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(matrix)]
    for k in range(n):
        pivot = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if pivot is None:
            raise DomainError('singular matrix')
        rows[k], rows[pivot] = rows[pivot], rows[k]
        inverse = Fraction(1) / rows[k][k]
        rows[k] = [value * inverse for value in rows[k]]
        for i in range(n):
            if i != k and rows[i][k] != 0:
                factor = rows[i][k]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[k])]
    return [row[n:] for row in rows]
