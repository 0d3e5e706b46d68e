# -*- coding: UTF-8 -*-
#
# copyright: 2020-2022, Frederico Martins
# author: Frederico Martins <http://github.com/fscm>
# license: SPDX-License-Identifier: MIT

"""Tests for the Dirichlet module."""

from fractions import Fraction
from math import ceil
from random import Random
from pytest import fixture, mark, raises
from . import __project__

MODULE = '_dirichlet'
dirichlet = __import__('{0}.{1}'.format(__project__, MODULE), fromlist=[''])
exactnum = __import__('{0}._exactnum'.format(__project__), fromlist=[''])
forms = __import__('{0}._forms'.format(__project__), fromlist=[''])
lattice = __import__('{0}._lattice'.format(__project__), fromlist=[''])
witt = __import__('{0}._witt'.format(__project__), fromlist=[''])

QF2 = exactnum.QF2
Real = exactnum.Real
INFINITY = forms.INFINITY
Place = forms.Place
QuadForm = forms.QuadForm
PlaceData = dirichlet.PlaceData
Instance = dirichlet.Instance

ALPHA = ['3/5', '4/5']
CORPUS = [
    QuadForm.identity(2),
    QuadForm.identity(3),
    QuadForm.diagonal([1, 2, 3]),
    QuadForm.identity(4),
    QuadForm([[2, 1, 0], [1, 2, 0], [0, 0, 1]])]


@fixture
def circle():
    """The unit circle with a budget of 10."""
    return Instance(
        QuadForm.identity(2),
        [PlaceData(INFINITY, ALPHA)],
        budget=10,
        name='circle')


@mark.parametrize('n,expected', [
    (1, Fraction(1)),
    (2, Fraction(4, 3)),
    (3, Fraction(2)),
    (8, Fraction(256)),
    (9, Fraction(4, 3) ** 36)])
def test__dirichlet_ok_hermite_power(n, expected):
    """test__dirichlet_ok_hermite_power

    Test the exact table and the upper bound beyond it.

    Args:
        n (int): Dimension.
        expected (Fraction): gamma_n^n.
    """
    assert dirichlet.hermite_power(n) == expected


def test__dirichlet_fail_hermite_power():
    """test__dirichlet_fail_hermite_power

    Test if dimension 0 is refused.
    """
    with raises(dirichlet.DirichletException):
        dirichlet.hermite_power(0)


def test__dirichlet_ok_constants():
    """test__dirichlet_ok_constants

    Test the constants and their source.
    """
    assert dirichlet.c_star(4).exact == 2
    assert dirichlet.c_star(2).square == QF2(Fraction(4, 3))
    assert dirichlet.hermite(2).square == QF2(Fraction(4, 3))
    assert dirichlet.hermite(9).exact == QF2(Fraction(256, 81))
    assert dirichlet.constants(3)['source'] == 'exact'
    assert dirichlet.constants(9)['source'] == 'hermite_bound'
    assert dirichlet.constants(2, dirichlet.Profile.EUCLIDEAN)['source'] == 'euclidean'
    assert dirichlet.number_field_bound(2).exact == 2


@mark.parametrize('n', range(1, 11))
def test__dirichlet_ok_split_constant(n):
    """test__dirichlet_ok_split_constant

    Test that every split of the constants stays below n^(n/2).

    Args:
        n (int): Dimension of q.
    """
    bound = dirichlet.number_field_bound(n)
    for i in range(n):
        assert exactnum.compare(dirichlet.split_constant(i, n), bound) <= 0


def test__dirichlet_ok_harmonic_gap():
    """test__dirichlet_ok_harmonic_gap

    Test the harmonic numbers and the sign of the gap.
    """
    assert dirichlet.harmonic(3) == Fraction(11, 6)
    assert dirichlet.harmonic_gap(1, 1) == 0
    for a in range(1, 51):
        for b in range(1, 51):
            assert dirichlet.harmonic_gap(a, b) >= 0


def test__dirichlet_ok_c_qbar():
    """test__dirichlet_ok_c_qbar

    Test the exponential constant and its certified enclosure.
    """
    assert dirichlet.c_qbar(1).exact == 1
    enclosure = dirichlet.c_qbar(2).at(64)
    assert enclosure.lo < Fraction(16488, 10000)
    assert enclosure.hi > Fraction(16487, 10000)
    with raises(dirichlet.DirichletException):
        dirichlet.c_qbar(0)


def test__dirichlet_ok_relaxed_budget():
    """test__dirichlet_ok_relaxed_budget

    Test the relaxed budget of the classic statement.
    """
    q = QuadForm.identity(2)
    assert dirichlet.relaxed_budget(10, q) == 10
    assert dirichlet.relaxed_budget('1/2', q) == Fraction(32, 3)
    with raises(dirichlet.DirichletException):
        dirichlet.relaxed_budget(0, q)


@mark.parametrize('pairing,y,t,expected', [
    (5, 5, 2, (Fraction(5, 2), Fraction(5, 2))),
    (0, 1, 3, (Fraction(-4, 3), Fraction(5, 3)))])
def test__dirichlet_ok_twist_coords(pairing, y, t, expected):
    """test__dirichlet_ok_twist_coords

    Test the twisted pair and its invariants.

    Args:
        pairing (int): b(x, alpha).
        y (int): Last coordinate.
        t (int): Twisting parameter.
        expected (tuple): (X, Y).
    """
    big_x, big_y = dirichlet.twist_coords(pairing, y, t)
    assert (big_x, big_y) == expected
    assert big_y - big_x == t * (y - pairing)
    assert big_y * big_y - big_x * big_x == y * y - pairing * pairing


def test__dirichlet_ok_xi():
    """test__dirichlet_ok_xi

    Test that the twist preserves Q, inverts and has determinant 1.
    """
    q = QuadForm.identity(2)
    assert dirichlet.xi_apply(q, ALPHA, 2, [3, 4], 5) == (
        [Fraction(3, 2), 2], Fraction(5, 2))
    assert dirichlet.xi_apply(q, ALPHA, 1, [1, 2], 3) == ([1, 2], 3)
    image, last = dirichlet.xi_apply(q, ALPHA, 2, [1, 2], 3)
    assert forms.eval_q(q, image) - last * last == 5 - 9
    back, y = dirichlet.xi_inverse(q, ALPHA, 2, image, last)
    assert back == [1, 2]
    assert y == 3
    assert exactnum.mat_det(dirichlet.xi_matrix(q, ALPHA, 2)) == 1


def test__dirichlet_fail_xi():
    """test__dirichlet_fail_xi

    Test if a zero parameter or a point off the quadric is refused.
    """
    q = QuadForm.identity(2)
    with raises(dirichlet.TwistError):
        dirichlet.twist_coords(1, 1, 0)
    with raises(dirichlet.TwistError):
        dirichlet.xi_inverse(q, ALPHA, 0, [1, 2], 3)
    with raises(dirichlet.TwistError):
        dirichlet.xi_apply(q, [1, 1], 2, [1, 2], 3)
    with raises(dirichlet.TwistError):
        dirichlet.xi_matrix(q, ALPHA, 0)


def test__dirichlet_ok_place_data():
    """test__dirichlet_ok_place_data

    Test the validation of the place data.
    """
    q = QuadForm.identity(2)
    data = PlaceData(INFINITY, ALPHA, -3)
    assert data.t == 3
    data.validate(q)
    PlaceData(INFINITY, ALPHA, 1).validate(q, allow_unit=True)
    PlaceData(Place(5), ALPHA, '1/5').validate(q)
    assert data.with_t(7).t == 7
    assert data.to_json() == {'v': 'inf', 'alpha': data.alpha.to_json(), 't': '3'}


def test__dirichlet_ok_place_data_text():
    """test__dirichlet_ok_place_data_text

    Test that coordinates and parameters written as text are exact.
    """
    data = PlaceData(INFINITY, ['3/5', '4/5'], '7/2')
    assert list(data.alpha) == [Fraction(3, 5), Fraction(4, 5)]
    assert data.t == Fraction(7, 2)
    data.validate(QuadForm.identity(2))
    with raises(exactnum.DomainError):
        PlaceData(INFINITY, ['0.6', '0.8'])


@mark.parametrize('place,alpha,t', [
    (INFINITY, ALPHA, 1),
    (INFINITY, ALPHA, '1/2'),
    (INFINITY, ALPHA, None),
    (INFINITY, [1, 1], 2),
    (Place(5), ALPHA, 5),
    (Place(5), [QF2(0, Fraction(1, 2), 2), QF2(0, Fraction(1, 2), 2)], '1/5')])
def test__dirichlet_fail_place_data(place, alpha, t):
    """test__dirichlet_fail_place_data

    Test if invalid place data is refused.

    Args:
        place (Place): The place.
        alpha (list): The point.
        t (str): The parameter.
    """
    with raises(dirichlet.TwistError):
        PlaceData(place, alpha, t).validate(QuadForm.identity(2))


def test__dirichlet_ok_instance():
    """test__dirichlet_ok_instance

    Test the defaults and the ordering of the places.
    """
    instance = Instance(
        QuadForm.identity(2),
        [PlaceData(Place(5), ALPHA, '1/5'), PlaceData(INFINITY, ALPHA, 2)])
    assert [data.place for data in instance.places] == [INFINITY, Place(5)]
    assert instance.q0 == QuadForm.identity(2)
    assert instance.dim == 2
    assert not instance.budget_mode
    assert instance.is_standard()
    hyperbola = Instance(QuadForm.diagonal([1, -1]), [])
    assert hyperbola.q0 == QuadForm.identity(2)


@mark.parametrize('kwargs,exception', [
    ({'places': [PlaceData(INFINITY, ALPHA, 2), PlaceData(INFINITY, ALPHA, 3)]}, 'DirichletException'),
    ({'places': [PlaceData(INFINITY, ALPHA)], 'budget': 0}, 'DirichletException'),
    ({'places': [PlaceData(INFINITY, ALPHA), PlaceData(Place(5), ALPHA, '1/5')], 'budget': 10}, 'DirichletException'),
    ({'places': [], 'q0': QuadForm.identity(3)}, 'DimensionMismatch'),
    ({'places': [], 'q0': QuadForm.diagonal([1, -1])}, 'NotPositiveDefinite')])
def test__dirichlet_fail_instance(kwargs, exception):
    """test__dirichlet_fail_instance

    Test if inconsistent instances are refused.

    Args:
        kwargs (dict): Instance arguments besides q.
        exception (str): Name of the expected exception.
    """
    expected = getattr(dirichlet, exception, None) or getattr(forms, exception)
    with raises(expected):
        Instance(QuadForm.identity(2), **kwargs)


def test__dirichlet_ok_thresholds_circle():
    """test__dirichlet_ok_thresholds_circle

    Test the thresholds of the unit circle.
    """
    space = lattice.AdelicSpaceQ(QuadForm.identity(2))
    limits = dirichlet.thresholds(space, QuadForm.identity(2), [PlaceData(INFINITY, ALPHA)])
    assert limits.index_q == 0
    assert limits.index_Q == 1
    assert limits.case == 'iQ_eq_iq_plus_1'
    assert limits.t1 is None
    assert limits.t.square == QF2(Fraction(16, 3))
    assert limits.t0.square == QF2(Fraction(16, 3))
    assert limits.lambda1.exact == 1
    assert limits.height_one.exact == 1
    assert limits.to_json()['i_Q'] == 1


def test__dirichlet_ok_thresholds_sphere():
    """test__dirichlet_ok_thresholds_sphere

    Test both profiles on the unit sphere.
    """
    q = QuadForm.identity(3)
    space = lattice.AdelicSpaceQ(q)
    places = [PlaceData(INFINITY, ['1/3', '2/3', '2/3'])]
    assert dirichlet.thresholds(space, q, places).t.exact == 4
    euclid = dirichlet.thresholds(space, q, places, profile=dirichlet.Profile.EUCLIDEAN)
    assert euclid.t.square == QF2(216)
    assert euclid.gamma_source == 'euclidean'


def test__dirichlet_ok_thresholds_hyperbola():
    """test__dirichlet_ok_thresholds_hyperbola

    Test the enlarged threshold when i(Q) = i(q).
    """
    q = QuadForm.diagonal([1, -1])
    space = lattice.AdelicSpaceQ(QuadForm.identity(2))
    limits = dirichlet.thresholds(space, q, [PlaceData(INFINITY, [1, 0])])
    assert limits.case == 'iQ_eq_iq'
    assert limits.t1.square == QF2(Fraction(8192, 9))
    assert limits.t.square == QF2(Fraction(8192, 9))
    with raises(dirichlet.DirichletException):
        dirichlet.thresholds(
            space, q, [PlaceData(INFINITY, [1, 0])], profile=dirichlet.Profile.EUCLIDEAN)


@mark.parametrize('values', [[3, 3], [-1, -1]])
def test__dirichlet_fail_no_solution(values):
    """test__dirichlet_fail_no_solution

    Test if an anisotropic Q is reported.

    Args:
        values (list): Diagonal of q.
    """
    with raises(dirichlet.NoSolutionExists):
        dirichlet.Approximator().solve(Instance(QuadForm.diagonal(values), []))


def test__dirichlet_ok_build_twisted():
    """test__dirichlet_ok_build_twisted

    Test the twisted space at infinity and at a prime.
    """
    q = QuadForm.identity(2)
    space = lattice.AdelicSpaceQ(q)
    twisted = dirichlet.build_twisted(space, q, [PlaceData(INFINITY, ALPHA, 2)])
    assert twisted.alpha_sq == 1
    assert twisted.height_sq() == 1
    assert twisted.place_data(INFINITY).t == 2
    assert twisted.place_data(Place(5)) is None
    norms, product = dirichlet.height_Q(twisted)
    assert exactnum.compare(norms[INFINITY], 1) == 0
    assert exactnum.compare(product, 1) == 0
    assert exactnum.compare(dirichlet.twisted_norm(twisted, INFINITY, [3, 4], 5) ** 2, Fraction(50, 4)) == 0
    local = dirichlet.build_twisted(space, q, [PlaceData(Place(5), ALPHA, '1/5')])
    assert local.alpha_sq == 25
    _, product = dirichlet.height_Q(local)
    assert exactnum.compare(product, 1) == 0


def test__dirichlet_fail_build_twisted():
    """test__dirichlet_fail_build_twisted

    Test if t = 1 needs to be allowed explicitly.
    """
    q = QuadForm.identity(2)
    space = lattice.AdelicSpaceQ(q)
    with raises(dirichlet.TwistError):
        dirichlet.build_twisted(space, q, [PlaceData(INFINITY, ALPHA, 1)])
    twisted = dirichlet.build_twisted(space, q, [PlaceData(INFINITY, ALPHA, 1)], allow_unit=True)
    assert twisted.alpha_sq == 1


def test__dirichlet_ok_solve_best(circle):
    """test__dirichlet_ok_solve_best

    Test that the best approximation of the unit circle is exact.

    Args:
        circle (Instance): The unit circle with a budget of 10.
    """
    approximator = dirichlet.Approximator(dirichlet.Settings(best=True))
    certificate = approximator.solve(circle)
    assert certificate.accepted
    assert certificate.upsilon == (3, 4)
    assert certificate.phi == 5
    assert certificate.point == [Fraction(3, 5), Fraction(4, 5)]
    assert certificate.budget == 10
    assert certificate.check('approximation').holds
    assert certificate.check('bound_2', INFINITY).holds
    assert certificate.check('missing') is None
    summary = certificate.summary()
    assert set(summary) == {'T', 'threshold', 'phi', 'accepted', 'bound', 'observed', 'ratio'}
    assert summary['T'] == '10'
    assert summary['phi'] == '5'
    assert summary['ratio'] == 0
    data = certificate.to_json()
    assert data['mode'] == 'budget'
    assert data['point'] == ['3/5', '4/5']
    assert data['accepted']


def test__dirichlet_ok_solve(circle, mocker):
    """test__dirichlet_ok_solve

    Test that the default search returns an accepted certificate.

    Args:
        circle (Instance): The unit circle with a budget of 10.
        mocker (MockerFixture): Mocker fixture.
    """
    logger = mocker.MagicMock()
    certificate = dirichlet.Approximator(logger=logger).solve(circle)
    assert certificate.accepted
    assert certificate.phi > 0
    assert forms.eval_q(QuadForm.identity(2), certificate.point) == 1
    assert 1 <= certificate.phi <= 10
    logger.info.assert_called()


@mark.parametrize('places', [
    [PlaceData(INFINITY, ALPHA, 10)],
    [PlaceData(Place(5), ALPHA, '1/5')]])
def test__dirichlet_ok_solve_places(places):
    """test__dirichlet_ok_solve_places

    Test the places mode at infinity and at a prime.

    Args:
        places (list): The places of V.
    """
    instance = Instance(QuadForm.identity(2), places)
    certificate = dirichlet.Approximator().solve(instance)
    assert certificate.accepted
    assert certificate.budget is None
    assert certificate.to_json()['mode'] == 'places'
    assert forms.eval_q(QuadForm.identity(2), certificate.point) == 1


def test__dirichlet_fail_solve_budget():
    """test__dirichlet_fail_solve_budget

    Test if a budget below the threshold is refused.
    """
    instance = Instance(QuadForm.identity(2), [PlaceData(INFINITY, ALPHA)], budget=1)
    with raises(dirichlet.BudgetBelowThreshold):
        dirichlet.Approximator().solve(instance)


def test__dirichlet_fail_solve_exhausted(circle, mocker):
    """test__dirichlet_fail_solve_exhausted

    Test if an empty search is reported.

    Args:
        circle (Instance): The unit circle with a budget of 10.
        mocker (MockerFixture): Mocker fixture.
    """
    mocker.patch.object(dirichlet, 'search_shortest', return_value=None)
    with raises(dirichlet.SearchExhausted):
        dirichlet.Approximator().solve(circle)


def test__dirichlet_ok_verify(circle):
    """test__dirichlet_ok_verify

    Test the verification of a solver certificate and of a claim.

    Args:
        circle (Instance): The unit circle with a budget of 10.
    """
    approximator = dirichlet.Approximator()
    certificate = approximator.solve(circle)
    report = approximator.verify(
        circle, certificate.upsilon, certificate.phi,
        {INFINITY: certificate.places[0].t})
    assert report.accepted
    assert not report.failures
    assert not report.undecidable
    claim = approximator.verify(circle, ['3', '4'], '5')
    assert claim.accepted
    assert claim.to_json()['failures'] == []


@mark.parametrize('upsilon,phi,failure', [
    ([3, 4], 0, 'phi_nonzero'),
    ([3, 4], 0, 'isotropy'),
    ([3, 4], 4, 'isotropy'),
    ([6, 8], 10, 'bound_2@inf')])
def test__dirichlet_fail_verify(circle, upsilon, phi, failure):
    """test__dirichlet_fail_verify

    Test if forged claims are rejected with the failing check.

    Args:
        circle (Instance): The unit circle with a budget of 10.
        upsilon (list): The claimed vector part.
        phi (int): The claimed last coordinate.
        failure (str): A check expected to fail.
    """
    report = dirichlet.Approximator().verify(circle, upsilon, phi)
    assert not report.accepted
    assert failure in report.failures


def test__dirichlet_fail_verify_places():
    """test__dirichlet_fail_verify_places

    Test if invalid parameters are reported in places mode.
    """
    instance = Instance(QuadForm.identity(2), [PlaceData(INFINITY, ALPHA, 1)])
    report = dirichlet.Approximator().verify(instance, [3, 4], 5)
    assert not report.accepted
    assert 'place_parameters@inf' in report.failures
    with raises(forms.DimensionMismatch):
        dirichlet.Approximator().verify(instance, [3, 4, 0], 5)


def test__dirichlet_ok_heights(circle):
    """test__dirichlet_ok_heights

    Test the heights of the unit circle.

    Args:
        circle (Instance): The unit circle with a budget of 10.
    """
    heights = dirichlet.Approximator().heights(circle)
    assert set(heights) == {'H_E', 'H_q', 'H_1q', 'lambda1'}
    for value in heights.values():
        assert exactnum.compare(value, 1) == 0


def test__dirichlet_ok_twist_isometry():
    """test__dirichlet_ok_twist_isometry

    Test on seeded samples that the twist preserves Q and that the
    inverse undoes it.
    """
    generator = Random(11)
    q = QuadForm([[2, 1, 0], [1, 3, 0], [0, 0, -1]])
    alpha = [1, 0, 1]
    assert forms.eval_q(q, alpha) == 1
    for _ in range(25):
        x = [Fraction(generator.randint(-9, 9), generator.randint(1, 5)) for _ in range(3)]
        y = Fraction(generator.randint(-9, 9), generator.randint(1, 5))
        t = Fraction(generator.randint(1, 30), generator.randint(1, 30))
        image, last = dirichlet.xi_apply(q, alpha, t, x, y)
        assert forms.eval_q(q, image) - last * last == forms.eval_q(q, x) - y * y
        assert dirichlet.xi_inverse(q, alpha, t, image, last) == (x, y)


def test__dirichlet_ok_thresholds_equal_indices():
    """test__dirichlet_ok_thresholds_equal_indices

    Test a form whose anisotropic part does not represent 1.
    """
    q = QuadForm.diagonal([1, -1, 3, 3])
    space = lattice.AdelicSpaceQ(QuadForm.identity(4))
    limits = dirichlet.thresholds(space, q, [])
    assert limits.index_q == 1
    assert limits.index_Q == 1
    assert limits.case == 'iQ_eq_iq'
    assert limits.t1 is not None


@mark.parametrize('index', range(len(CORPUS)))
@mark.parametrize('factor', [1, 10, 100])
def test__dirichlet_ok_solve_corpus(index, factor):
    """test__dirichlet_ok_solve_corpus

    Test budget-mode solutions on the positive-definite corpus, from the
    threshold up to a hundred times it.

    Args:
        index (int): Position of the form in the corpus.
        factor (int): Budget as a multiple of the threshold.
    """
    q = CORPUS[index]
    alpha = witt.rational_points(q, 1, index, 10)[0].alpha
    approximator = dirichlet.Approximator()
    limits, _ = approximator.thresholds(Instance(q, [PlaceData(INFINITY, alpha)], budget=1))
    budget = ceil(factor * limits.t.at(64).hi)
    certificate = approximator.solve(Instance(q, [PlaceData(INFINITY, alpha)], budget=budget))
    upsilon, phi = list(certificate.upsilon), certificate.phi
    assert certificate.accepted
    assert forms.eval_q(q, upsilon) == phi * phi
    assert 1 <= phi <= budget
    assert certificate.check('approximation').holds


def test__dirichlet_ok_solve_two_places():
    """test__dirichlet_ok_solve_two_places

    Test a simultaneous approximation at infinity and at 5.
    """
    q = QuadForm.identity(3)
    alpha = ['3/5', '4/5', 0]
    instance = Instance(q, [PlaceData(INFINITY, alpha, 20), PlaceData(Place(5), alpha, '1/25')])
    certificate = dirichlet.Approximator().solve(instance)
    assert certificate.accepted
    assert certificate.phi != 0
    assert forms.eval_q(q, list(certificate.upsilon)) == certificate.phi ** 2
    for place in (INFINITY, Place(5)):
        for name in ('bound_2', 'bound_3', 'dual_lower_bound'):
            assert certificate.check(name, place).holds


def test__dirichlet_ok_solve_indefinite():
    """test__dirichlet_ok_solve_indefinite

    Test the euclidean conclusions on x^2 + y^2 - z^2 at twice their
    threshold.
    """
    q = QuadForm.diagonal([1, 1, -1])
    alpha = ['3/5', '4/5', 0]
    approximator = dirichlet.Approximator()
    draft = Instance(q, [PlaceData(INFINITY, alpha)], q0=QuadForm.identity(3), budget=1)
    limits, euclid = approximator.thresholds(draft)
    assert limits.index_q == 1
    assert limits.index_Q == 2
    budget = ceil(2 * euclid.t.at(64).hi)
    instance = Instance(q, [PlaceData(INFINITY, alpha)], q0=QuadForm.identity(3), budget=budget)
    certificate = approximator.solve(instance)
    assert certificate.accepted
    assert certificate.phi != 0
    assert certificate.check('euclidean_size').holds
    assert certificate.check('euclidean_approximation').holds


def test__dirichlet_ok_solve_equal_indices():
    """test__dirichlet_ok_solve_equal_indices

    Test a solution at the enlarged threshold of x^2 - y^2 + 3z^2 + 3w^2.
    """
    q = QuadForm.diagonal([1, -1, 3, 3])
    alpha = ['5/4', '3/4', 0, 0]
    approximator = dirichlet.Approximator()
    limits, _ = approximator.thresholds(Instance(q, [PlaceData(INFINITY, alpha)], budget=1))
    assert limits.case == 'iQ_eq_iq'
    budget = ceil(limits.t.at(64).hi)
    certificate = approximator.solve(Instance(q, [PlaceData(INFINITY, alpha)], budget=budget))
    assert certificate.accepted
    assert forms.eval_q(q, list(certificate.upsilon)) == certificate.phi ** 2


@mark.parametrize('index', range(len(CORPUS)))
def test__dirichlet_ok_twist_invariants(index):
    """test__dirichlet_ok_twist_invariants

    Test on seeded samples of the corpus that the twist has determinant
    one and preserves Q, that E_t keeps the determinant of q and that
    H(Q) is 1.

    Args:
        index (int): Position of the form in the corpus.
    """
    q = CORPUS[index]
    space = lattice.AdelicSpaceQ(q)
    generator = Random(100 + index)
    for point in witt.rational_points(q, 5, index, 12):
        for _ in range(4):
            t = 1 + Fraction(generator.randint(1, 40), generator.randint(1, 7))
            assert exactnum.mat_det(dirichlet.xi_matrix(q, point.alpha, t)) == 1
            twisted = dirichlet.build_twisted(space, q, [PlaceData(INFINITY, point.alpha, t)])
            assert exactnum.mat_det(twisted.gram) == q.det()
            _, height = dirichlet.height_Q(twisted)
            assert exactnum.compare(height, 1) == 0
        for _ in range(40):
            t = Fraction(generator.randint(1, 50), generator.randint(1, 50))
            x = [Fraction(generator.randint(-9, 9), generator.randint(1, 4)) for _ in range(q.dim)]
            y = Fraction(generator.randint(-9, 9), generator.randint(1, 4))
            image, last = dirichlet.xi_apply(q, point.alpha, t, x, y)
            assert forms.eval_q(q, image) - last * last == forms.eval_q(q, x) - y * y


@mark.parametrize('index', range(3))
@mark.parametrize('place,parameters', [
    (INFINITY, [Fraction(2), Fraction(7, 3)]),
    (Place(2), [Fraction(1, 2), Fraction(1, 4)]),
    (Place(5), [Fraction(1, 5), Fraction(2, 25)])])
def test__dirichlet_ok_twisted_norm_bounds(index, place, parameters):
    """test__dirichlet_ok_twisted_norm_bounds

    Test the comparison of the norms of E and E_t on seeded samples:
    `m(|x|, |y alpha|) <= 2^e |t/2| |b(., alpha)| |alpha| |(x, y)|_t` and
    `|x| <= 2^(e/2) |(x, 0)|_t`, with e = 1 at infinity and 0 at p.

    Args:
        index (int): Position of the form in the corpus.
        place (Place): Where the norms are compared.
        parameters (list): Twisting parameters.
    """
    q = CORPUS[index]
    space = lattice.AdelicSpaceQ(q)
    generator = Random(index)
    for point in witt.rational_points(q, 3, index, 6):
        for t in parameters:
            data = PlaceData(place, point.alpha, t)
            twisted = dirichlet.build_twisted(space, q, [data])
            norm = dirichlet.alpha_norm(space, data)
            kappa = norm * dirichlet._dual(space, q, data)  # pylint: disable=protected-access
            if place.is_archimedean:
                scale, slack = Real.of(t), Real.sqrt_of(2)
            else:
                scale, slack = Real.of(forms.padic_abs(t / 2, place.prime)), Real.of(1)
            for _ in range(20):
                x = [Fraction(generator.randint(-20, 20), generator.choice([1, 2, 5])) for _ in range(q.dim)]
                y = Fraction(generator.randint(-20, 20), generator.choice([1, 2, 5]))
                if not any(x) and not y:
                    continue
                size = dirichlet.space_norm(space, place, x)
                weight = abs(y) if place.is_archimedean else forms.padic_abs(y, place.prime)
                lhs = dirichlet._combine(place, size, norm * weight)  # pylint: disable=protected-access
                rhs = scale * kappa * dirichlet.twisted_norm(twisted, place, x, y)
                assert exactnum.compare(lhs, rhs) <= 0
                assert exactnum.compare(size, slack * dirichlet.twisted_norm(twisted, place, x, 0)) <= 0


def test__dirichlet_ok_solve_irrational_ratio():
    """test__dirichlet_ok_solve_irrational_ratio

    Test that a budget with an irrational ratio to the threshold uses a
    rational t below it while the checks keep T.
    """
    instance = Instance(QuadForm.identity(2), [PlaceData(INFINITY, ALPHA)], budget=11)
    certificate = dirichlet.Approximator().solve(instance)
    t = certificate.places[0].t
    assert certificate.accepted
    assert t >= 1
    assert exactnum.compare(certificate.thresholds.t * t, 11) <= 0
    assert certificate.check('bound_2', INFINITY).rhs.exact == 11
