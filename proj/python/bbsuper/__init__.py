"""Characters and root multiplicities of Borcherds-Bozec superalgebras.

Data are plain dicts in the same JSON schema the command line tool reads:
a datum is ``{"A": [[int]], "D": [int], "odd": [1-based index]}`` and a weight
is ``{"Lambda": {"1": "p/q"}, "alpha": {...}, "delta": {...}}``.
"""

import json

from . import _bbsuper
from ._bbsuper import BBSuperError

__all__ = [
    "BBSuperError",
    "error_kind",
    "validate",
    "roots",
    "denom_check",
    "character",
    "oracle",
    "euler_phi",
    "odd_iso_coeffs",
]


def error_kind(exc):
    """The error kind name carried by a BBSuperError, e.g. "BadDiagonal"."""
    return str(exc).split(":", 1)[0]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def _roots(entries):
    return {tuple(e["root"]): {"mult": int(e["mult"]), "parity": e["parity"], "class": e["class"]}
            for e in entries}


def validate(datum):
    return json.loads(_bbsuper.validate(_dump(datum)))


def roots(datum, height, jobs=1):
    """{root tuple: {"mult", "parity", "class"}} for every root of height <= height."""
    return _roots(json.loads(_bbsuper.roots(_dump(datum), height, jobs)))


def denom_check(datum, height):
    doc = json.loads(_bbsuper.denom_check(_dump(datum), height))
    return doc["residual_zero"], _roots(doc["roots"])


def character(datum, weight, height, jobs=1):
    """{mu offset tuple: dim} for ch V(weight) through the given height."""
    doc = json.loads(_bbsuper.character(_dump(datum), _dump(weight), height, jobs))
    return {tuple(t["exp"]): int(t["coef"]) for t in doc["character"]["terms"]}


def oracle(datum, weight, height, symbolic=False, jobs=1):
    """{mu offset tuple: dim} from Gram ranks; zero rows included."""
    rows = json.loads(_bbsuper.oracle(_dump(datum), _dump(weight or {}), height, symbolic, jobs))
    return {tuple(r["mu_offset"]): int(r["dim"]) for r in rows}


def euler_phi(n):
    return [int(x) for x in _bbsuper.euler_phi(n)]


def odd_iso_coeffs(n):
    return [int(x) for x in _bbsuper.odd_iso_coeffs(n)]
