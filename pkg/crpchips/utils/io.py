"""io.py -- JSON codecs and schema validation

    This module provides the small set of conversions every artifact of
    the package goes through before it is written: exact rationals as
    numerator/denominator objects, reals as 17-significant-digit decimal
    strings, half-integer chip lengths as "p/2" strings. Documents are
    validated against the schemas shipped in `crpchips/schemas`.

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import os
import json
import logging
from fractions import Fraction

import numpy as np
import jsonschema

__all__ = ["tolist", "fmt_real", "parse_real", "encode_rational", "decode_rational", \
        "encode_half", "decode_half", "load_schema", "validate", "dumps", \
        "savejson", "loadjson", "dump_jsonl"]

logger = logging.getLogger(__name__)

_schema_dir = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'schemas')
_schema_cache = {}

def tolist(A):
    r""" Recursively apply `tolist()` on a numpy array.

    Works on jagged containers too: tuples become lists, lists and dict
    values are converted element by element, numpy scalars become Python scalars.

    Parameters
    ----------
    A : ndarray, list, tuple or scalar
        The input to be converted.

    Returns
    -------
    list : A list or list of lists
        Returns a fully converted container.
    """
    if isinstance(A, np.ndarray):
        return tolist(A.tolist())
    elif isinstance(A, (list, tuple)):
        return [tolist(a) for a in A]
    elif isinstance(A, dict):
        return {k: tolist(v) for k, v in A.items()}
    elif isinstance(A, np.generic):
        return A.item()
    else:
        return A

def fmt_real(x):
    r"""Format a real as a decimal string with 17 significant digits."""
    return '{:.17g}'.format(float(x))

def parse_real(s):
    r"""Inverse of `fmt_real()`, also accepts plain JSON numbers."""
    if isinstance(s, (int, float)):
        return float(s)
    return float(str(s))

def encode_rational(q):
    r"""Encode an exact rational as `{"num": p, "den": q}`.

    Parameters
    ----------
    q : Fraction or int
        The value to encode.

    Returns
    -------
    d : dict
    """
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}

def decode_rational(d):
    r"""Decode `{"num": p, "den": q}`, a "p/q" string or an int into a `Fraction`."""
    if isinstance(d, dict):
        if int(d["den"]) == 0:
            raise ValueError("Zero denominator in {:s}.".format(str(d)))
        return Fraction(int(d["num"]), int(d["den"]))
    if isinstance(d, float):
        raise TypeError("Refusing to read the float {:s} as an exact rational.".format(repr(d)))
    return Fraction(d)

def encode_half(q):
    r"""Encode a multiple of 1/2 as the string "p/2".

    Parameters
    ----------
    q : Fraction
        A half-integer or integer.

    Returns
    -------
    s : str
    """
    q = Fraction(q)
    p = q * 2
    if p.denominator != 1:
        raise ValueError("{:s} is not a multiple of 1/2.".format(str(q)))
    return "{:d}/2".format(p.numerator)

def decode_half(s):
    r"""Decode a "p/2" string (or an int) into a `Fraction`."""
    if isinstance(s, int):
        return Fraction(s)
    q = Fraction(str(s))
    if (q * 2).denominator != 1:
        raise ValueError("{:s} is not a multiple of 1/2.".format(str(s)))
    return q

def load_schema(name):
    r"""Load a shipped schema by its short name, e.g. 'chip'.

    Parameters
    ----------
    name : str
        File stem under `crpchips/schemas`, without `.schema.json`.

    Returns
    -------
    schema : dict
    """
    if name not in _schema_cache:
        fname = os.path.join(_schema_dir, name + '.schema.json')
        if not os.path.exists(fname):
            raise OSError("Schema {0:s} not found.".format(fname))
        with open(fname, 'r') as fp:
            _schema_cache[name] = json.load(fp)
    return _schema_cache[name]

def validate(obj, name):
    r"""Validate `obj` against the shipped schema `name`.

    Raises `jsonschema.ValidationError` when the document does not conform.
    """
    jsonschema.validate(instance=obj, schema=load_schema(name))
    return obj

def dumps(obj, schema=None):
    r"""Serialize `obj` deterministically (sorted keys, fixed separators)."""
    obj = tolist(obj)
    if schema is not None:
        validate(obj, schema)
    return json.dumps(obj, sort_keys=True, indent=1, separators=(',', ': '))

def savejson(fname, obj, schema=None):
    r"""Save a JSON document, optionally validating it first.

    Parameters
    ----------
    fname : str
        A file path in string.
    obj : dict or list
        The document.
    schema : str, optional
        Short schema name. No validation when optional.
    """
    text = dumps(obj, schema=schema)
    with open(fname, 'w') as fp:
        fp.write(text + '\n')
    logger.debug("wrote %s", fname)

def loadjson(fname, schema=None):
    r"""Load a JSON document, optionally validating it.

    Parameters
    ----------
    fname : str or pathlib.Path
        A filename or a file path.
    schema : str, optional
        Short schema name. No validation when optional.

    Returns
    -------
    obj : dict or list
    """
    if not os.path.exists(fname):
        raise OSError("File {0:s} not found.".format(str(fname)))
    with open(fname, 'r') as fp:
        obj = json.load(fp)
    if schema is not None:
        validate(obj, schema)
    return obj

def dump_jsonl(fp, items, schema=None):
    r"""Write an iterable of documents as JSON lines to the open file `fp`."""
    count = 0
    for item in items:
        item = tolist(item)
        if schema is not None:
            validate(item, schema)
        fp.write(json.dumps(item, sort_keys=True, separators=(',', ':')) + '\n')
        count += 1
    return count
