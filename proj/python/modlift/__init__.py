"""Module properties over finite algebras, and an exact check of a
lifting module whose square fails the exchange property.

Every function takes and returns plain Python data; module definitions
follow schema/module.schema.json and may be given as a dict, a JSON
string, or a path to a JSON file.
"""

import json
import os

from . import _core

SCHEMA_VERSION = _core.SCHEMA_VERSION

__all__ = [
    "ModliftError",
    "report",
    "lattice",
    "summands",
    "fiep",
    "homs",
    "exact_case",
    "graph_lemma",
    "nonlocal_witness",
    "fiep_verdict",
    "remark",
    "verify_paper",
    "corpus",
    "SCHEMA_VERSION",
]


class ModliftError(Exception):
    """Raised for every library error; `kind` is the error kind name."""

    def __init__(self, message):
        super().__init__(message)
        self.kind, _, self.detail = message.partition(": ")


def _definition(value):
    if isinstance(value, dict):
        return json.dumps(value)
    if isinstance(value, os.PathLike) or (isinstance(value, str) and not value.lstrip().startswith("{")):
        with open(value, encoding="utf-8") as f:
            return f.read()
    return value


def _call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _core.Error as e:
        raise ModliftError(str(e)) from None


def _json(fn, *args, **kwargs):
    return json.loads(_call(fn, *args, **kwargs))


def report(definition, *, subject="module", cap_dim=8, cap_hom=1 << 20, n_max=3, seed=1):
    return _json(_core.property_report, _definition(definition), subject, cap_dim, cap_hom, n_max, seed)


def lattice(definition, *, format="json", cap_dim=8):
    out = _call(_core.lattice, _definition(definition), format, cap_dim)
    return out if format == "dot" else json.loads(out)


def summands(definition, *, cap_dim=8):
    return _json(_core.summands, _definition(definition), cap_dim)


def fiep(definition, *, n_max=3, seed=1, cap_dim=8):
    return _json(_core.fiep, _definition(definition), n_max, seed, cap_dim)


def homs(source, target, *, cap_hom=1 << 20):
    return _json(_core.homs, _definition(source), _definition(target), cap_hom)


def exact_case(x, *, p=2, q=3, sample_size=32, seed=1):
    return _json(_core.exact_case, str(x), p, q, sample_size, seed)


def graph_lemma(x, *, p=2, q=3, sample_size=32, seed=1):
    return _json(_core.graph_lemma, str(x), p, q, sample_size, seed)


def nonlocal_witness(p=2, q=3):
    return _json(_core.nonlocal_witness, p, q)


def fiep_verdict(p=2, q=3):
    return _json(_core.fiep_verdict, p, q)


def remark(a, b):
    return _json(_core.remark, a, b)


def verify_paper(config=None, *, with_durations=True):
    return _json(_core.verify_paper, json.dumps(config or {}), with_durations)


def corpus():
    return json.loads(_core.corpus())
