# -*- coding: UTF-8 -*-
#
# copyright: 2020-2022, Frederico Martins
# author: Frederico Martins <http://github.com/fscm>
# license: SPDX-License-Identifier: MIT

"""quadric2cert.

Certified rational approximation of points on quadrics.

Given a quadratic form `q` over the rationals, a point `alpha` on the
quadric `q = 1` and a size budget, this tool builds a twisted lattice,
searches it for a small isotropic vector `(upsilon, phi)` of
`Q(x, y) = q(x) - y^2` and emits a certificate: the rational point
`upsilon / phi` on `q = 1` together with the exact evaluation of every
approximation bound that holds for it, at the archimedean place and at
any finite set of primes.

.. note::
    Every number in a certificate is exact. Rationals are written as
    `p/q`, quadratic irrationals as `a+b*sqrt(d)` and any other real
    (a power of a Hermite constant, an operator norm) as a certified
    dyadic enclosure. A comparison that cannot be decided at the
    configured precision cap is reported as undecidable, never guessed.

## Prerequisites

Python, version 3.9 or above, needs to be installed on your local
computer.

### Python 3.x

The following python modules are required to run the tool:

* mpmath >= 1.2
* progress >= 1.5
* sympy >= 1.10
* xlsxwriter >= 3.0.0

## Installation

```shell
pip3 install quadric2cert
```

## Usage

Approximate a point of the unit circle:

```shell
cat > circle.json <<EOF
{"q": {"dim": 2, "matrix": [["1", "0"], ["0", "1"]]},
 "places": [{"v": "inf", "alpha": [{"a": "3/5", "b": "0", "d": 1},
                                   {"a": "4/5", "b": "0", "d": 1}]}],
 "T": "10"}
EOF
quadric2cert approximate --input circle.json > cert.json
quadric2cert verify --input circle.json --certificate cert.json
```

List of the subcommands:

```shell
usage: quadric2cert [-h] [--debug | -q] [--log-file [LOG_FILE]] [-v]
                    {approximate,witt,heights,gen-points,verify,bench} ...
```

* `approximate` -- solve an instance and print its certificate.
* `witt` -- print the Witt decomposition of a form.
* `heights` -- print H(E), H(q), H(1,q) and the first minimum of E.
* `gen-points` -- print rational points of `q = 1`.
* `verify` -- re-check a certificate against its instance.
* `bench` -- solve a corpus and tabulate observed versus proven bounds.

Exit codes: 0 success, 1 no solution exists, 2 budget below the
threshold, 3 unreadable input, 4 undecidable comparison, 5 certificate
rejected.
"""

from fractions import Fraction
from typing import Final


__all__ = []


__author__: Final[str] = 'Frederico Martins'
__license__: Final[str] = 'MIT'
__project__: Final[str] = __package__
__version__: Final[str] = '0.1.0'

DEFAULT_DELTA: Final[Fraction] = Fraction(3, 4)
DEFAULT_HEIGHT: Final[int] = 100
DEFAULT_MAX_BITS: Final[int] = 4096
DEFAULT_OUTPUT: Final[str] = '-'
DEFAULT_POINTS: Final[int] = 10
DEFAULT_SEED: Final[int] = 0
DEFAULT_THREADS: Final[int] = 1

EXIT_OK: Final[int] = 0
EXIT_NO_SOLUTION: Final[int] = 1
EXIT_BUDGET: Final[int] = 2
EXIT_PARSE: Final[int] = 3
EXIT_UNDECIDABLE: Final[int] = 4
EXIT_REJECTED: Final[int] = 5
