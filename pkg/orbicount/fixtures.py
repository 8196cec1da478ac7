"""
Built-in named inputs, usable anywhere a JSON document is accepted.

Names are the attribute names with underscores written as dashes
(`z2_presented` is `--gamma z2-presented`).
"""
import re

from orbicount.exceptions import InvalidInput
from orbicount.parser import load_document


class GroupData(object):
    trivial = {'kind': 'trivial'}
    z2 = {'kind': 'cyclic', 'n': 2}
    z3 = {'kind': 'cyclic', 'n': 3}
    z4 = {'kind': 'cyclic', 'n': 4}
    s3 = {'kind': 'symmetric', 'n': 3}
    s4 = {'kind': 'symmetric', 'n': 4}
    klein = {'kind': 'product', 'factors': [{'kind': 'cyclic', 'n': 2}, {'kind': 'cyclic', 'n': 2}]}


class GammaData(object):
    z = {'kind': 'free-abelian', 'rank': 1}
    z2 = {'kind': 'free-abelian', 'rank': 2}
    z3 = {'kind': 'free-abelian', 'rank': 3}
    f2 = {'kind': 'free', 'rank': 2}
    f3 = {'kind': 'free', 'rank': 3}
    # one commutator relator, searched by coset enumeration instead of HNF
    z2_presented = {'kind': 'presented', 'rank': 2, 'relators': [[1, 2, -1, -2]]}


class GSetData(object):
    point = {'kind': 'point'}
    regular = {'kind': 'regular'}
    natural = {'kind': 'natural'}
    pair = {'kind': 'trivial', 'size': 2}


class CoeffData(object):
    partition = {'window': {'m_max': 0, 'k_abs': 0}, 'entries': [[0, 0, 1]]}


# Include all objects into this tuple.
all_data = (GroupData, GammaData, GSetData, CoeffData)

KINDS = {
    'group': GroupData,
    'gamma': GammaData,
    'gset': GSetData,
    'coeffs': CoeffData,
}

_GAMMA_PATTERN = re.compile(r'^(free-abelian|free)-([1-9][0-9]*)$')


def documents(kind):
    """All fixtures of one kind as a name -> document mapping."""
    if kind not in KINDS:
        raise InvalidInput('unknown fixture kind `%s`' % kind)
    data = KINDS[kind]
    return {key.replace('_', '-'): value for key, value in vars(data).items()
            if not key.startswith('__')}


def get(kind, name):
    """The fixture `name` of `kind`; Γ also accepts free-N and free-abelian-N."""
    found = documents(kind)
    if name in found:
        return found[name]
    if kind == 'gamma':
        match = _GAMMA_PATTERN.match(name)
        if match:
            return {'kind': match.group(1), 'rank': int(match.group(2))}
    raise InvalidInput('unknown %s fixture `%s`' % (kind, name))


def load(kind, source):
    """Resolves `source` as a fixture name, a JSON file or inline JSON."""
    if isinstance(source, str):
        try:
            return get(kind, source)
        except InvalidInput:
            pass
    return load_document(source, documents(kind))
