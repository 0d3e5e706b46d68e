# -*- coding: UTF-8 -*-
#
# copyright: 2020-2022, Frederico Martins
# author: Frederico Martins <http://github.com/fscm>
# license: SPDX-License-Identifier: MIT

"""Instance files module.

This module reads and writes the JSON documents of the tool: instances,
corpora of instances and certificates.

An instance looks like::

    {"name": "circle",
     "q": {"dim": 2, "matrix": [["1", "0"], ["0", "1"]]},
     "q0": {...},
     "E": {"gram": {...}, "local": {"5": [["1", "0"], ["0", "5"]]}},
     "places": [{"v": "inf", "alpha": ["3/5", "4/5"], "t": "2"}],
     "T": "10"}

Only `q` is required: `q0` defaults to `q` (to the sum of squares when `q`
is not positive-definite), `E` to Z^n with Gram matrix `q0`, and `places`
to none.

The following is a simple usage example::

    >>> from ._instance import load_instance
    >>> instance = load_instance('{"q": {"matrix": [[1, 0], [0, 1]]}}')
    >>> instance.dim
    2

The module contains the following public classes:
    - CertificateRecord -- The claim of a certificate file.
    - InstanceException -- Parse and schema errors.

All other classes in this module are considered implementation details.
"""

import sys
from fractions import Fraction
from json import JSONDecodeError, dumps, loads
from typing import Any, NamedTuple, Optional, Union
from ._dirichlet import DirichletException, Instance, PlaceData
from ._exactnum import ExactnumException, Quadric2CertException, parse_rat
from ._forms import AlgVector, FormException, Place, QuadForm, eval_q
from ._lattice import AdelicSpaceQ, LatticeException


__all__ = [
    'CertificateRecord',
    'InstanceException',
    'dump_json',
    'load_certificate',
    'load_corpus',
    'load_instance',
    'read_json',
    'write_json']


STDIO = '-'

_PARSE_ERRORS = (
    KeyError,
    TypeError,
    ValueError,
    AttributeError,
    ExactnumException,
    FormException,
    LatticeException,
    DirichletException)


class InstanceException(Quadric2CertException):
    """Parse and schema errors."""


class CertificateRecord(NamedTuple):
    """The claim of a certificate file."""

    upsilon: list[Fraction]
    phi: Fraction
    parameters: dict[Place, Fraction]


def read_json(path: str) -> Any:
    """Load a JSON document from a file (`-` reads standard input).

    Raises:
        InstanceException: If the file cannot be read or parsed.
    """
    try:
        if path == STDIO:
            return loads(sys.stdin.read())
        with open(path, 'r', encoding='utf-8') as handle:
            return loads(handle.read())
    except (OSError, JSONDecodeError) as error:
        raise InstanceException(f'cannot read "{path}": {error}') from error


def dump_json(data: Any) -> str:
    """Serialise a document (stable key order)."""
    return dumps(data, indent=2, sort_keys=True)


def write_json(data: Any, path: str) -> None:
    """Write a JSON document to a file (`-` writes standard output)."""
    text = dump_json(data) + '\n'
    if path == STDIO:
        sys.stdout.write(text)
        return
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(text)


def _document(data: Union[str, dict[str, Any]]) -> dict[str, Any]:
    if isinstance(data, str):
        try:
            data = loads(data)
        except JSONDecodeError as error:
            raise InstanceException(f'invalid JSON: {error}') from error
    if not isinstance(data, dict):
        raise InstanceException(f'expected a JSON object, got {type(data).__name__}')
    return data


def _form(data: Any) -> QuadForm:
    if isinstance(data, list):
        return QuadForm(data)
    return QuadForm.from_json(data)


def _space(data: Optional[dict[str, Any]], q0: QuadForm) -> AdelicSpaceQ:
    if data is None:
        return AdelicSpaceQ(q0)
    gram = _form(data['gram']) if 'gram' in data else q0
    local = {}
    for key, matrix in (data.get('local') or {}).items():
        place = Place.from_json(key)
        if place.is_archimedean:
            raise InstanceException('local matrices are indexed by primes')
        local[place.prime] = matrix
    return AdelicSpaceQ(gram, local)


def _place(data: dict[str, Any], q: QuadForm) -> PlaceData:
    place = Place.from_json(data['v'])
    alpha = AlgVector.from_json(data['alpha'])
    value = eval_q(q, alpha)
    if value != 1:
        raise InstanceException(f'alpha at {place} is off the quadric: q(alpha) = {value}')
    t = data.get('t')
    return PlaceData(place, alpha, None if t is None else parse_rat(t))


def load_instance(data: Union[str, dict[str, Any]], name: Optional[str] = None) -> Instance:
    """Build an instance from its JSON document.

    Args:
        data (str or dict): JSON text or the decoded document.
        name (str, optional): Label used when the document has none.

    Returns:
        Instance: the instance.

    Raises:
        InstanceException: On malformed or inconsistent input.
    """
    document = _document(data)
    try:
        q = _form(document['q'])
        q0 = _form(document['q0']) if document.get('q0') is not None else None
        q0 = q0 or (q if q.is_positive_definite() else QuadForm.identity(q.dim))
        space = _space(document.get('E'), q0)
        places = [_place(entry, q) for entry in document.get('places') or []]
        budget = document.get('T')
        return Instance(
            q, places, q0=q0, space=space,
            budget=None if budget is None else parse_rat(budget),
            name=document.get('name', name))
    except InstanceException:
        raise
    except _PARSE_ERRORS as error:
        raise InstanceException(f'invalid instance: {error}') from error


def load_corpus(data: Any) -> list[Instance]:
    """Instances of a bench corpus: a list, or `{"instances": [...]}`."""
    if isinstance(data, str):
        try:
            data = loads(data)
        except JSONDecodeError as error:
            raise InstanceException(f'invalid JSON: {error}') from error
    if isinstance(data, dict):
        data = data.get('instances')
    if not isinstance(data, list):
        raise InstanceException('a corpus is a list of instances')
    return [load_instance(entry, name=f'instance-{i}') for i, entry in enumerate(data)]


def load_certificate(data: Union[str, dict[str, Any]]) -> CertificateRecord:
    """Read the claim of a certificate: `upsilon`, `phi` and the `t_v`.

    Raises:
        InstanceException: On malformed input.
    """
    document = _document(data)
    try:
        upsilon = [parse_rat(value) for value in document['upsilon']]
        phi = parse_rat(document['phi'])
        parameters = {}
        for entry in document.get('places') or []:
            if entry.get('t') is not None:
                parameters[Place.from_json(entry['v'])] = parse_rat(entry['t'])
        return CertificateRecord(upsilon, phi, parameters)
    except _PARSE_ERRORS as error:
        raise InstanceException(f'invalid certificate: {error}') from error
