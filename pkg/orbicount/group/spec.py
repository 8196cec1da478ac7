import logging

from orbicount.exceptions import ParserError
from orbicount.group.finite import (CyclicGroup, TableGroup, direct_product,
                                    permutation_group, symmetric_group, validate_group)
from orbicount.group.wreath import wreath_product
from orbicount.parser import Parser
from orbicount.utils import setting

logger = logging.getLogger(__name__)

GROUP_KINDS = ('trivial', 'cyclic', 'symmetric', 'cayley', 'perm', 'product', 'wreath')


def build_group(spec, config=None, path=''):
    """Builds and validates a FiniteGroup from its JSON description.

    Args:
        spec: decoded GroupSpec document, e.g. {"kind": "symmetric", "n": 3}.
        config: optional mapping overriding the limits in default_config.
        path: location of `spec` inside a larger document, for error messages.
    """
    group = _build(spec, config, path)
    group.materialize(setting(config, 'MATERIALIZE_ORDER'))
    validate_group(group,
                   exhaustive_order=setting(config, 'EXHAUSTIVE_CHECK_ORDER'),
                   samples=setting(config, 'SAMPLED_TRIPLES'),
                   seed=setting(config, 'SEED'))
    logger.debug('Built %s of order %d', group.name, group.order)
    return group


def _build(spec, config, path):
    max_order = setting(config, 'MAX_GROUP_ORDER')
    kind = Parser.string(spec, 'kind', path, valid_values=GROUP_KINDS)
    if kind == 'trivial':
        return CyclicGroup(1)
    if kind == 'cyclic':
        return CyclicGroup(Parser.int(spec, 'n', path, min=1, max=max_order))
    if kind == 'symmetric':
        return symmetric_group(Parser.int(spec, 'n', path, min=1), max_order=max_order)
    if kind == 'cayley':
        order = Parser.int(spec, 'order', path, min=1, max=setting(config, 'MAX_TABLE_ORDER'))
        location = Parser.location(path, 'table')
        rows = Parser.list(spec, 'table', path, min=order, max=order)
        table = [Parser.int_list(row, '%s[%d]' % (location, i), min=0, max=order - 1)
                 for i, row in enumerate(rows)]
        for i, row in enumerate(table):
            if len(row) != order:
                raise ParserError('%s[%d]' % (location, i), 'must have %d entries' % order)
        labels = Parser.list(spec, 'labels', path, min=order, max=order, optional=True)
        return TableGroup(table, labels=labels, max_order=setting(config, 'MAX_TABLE_ORDER'))
    if kind == 'perm':
        degree = Parser.int(spec, 'degree', path, min=1)
        location = Parser.location(path, 'generators')
        generators = [Parser.int_list(g, '%s[%d]' % (location, i), min=0, max=degree - 1)
                      for i, g in enumerate(Parser.list(spec, 'generators', path))]
        return permutation_group(generators, degree, max_order=max_order)
    if kind == 'product':
        location = Parser.location(path, 'factors')
        factors = [_build(f, config, '%s[%d]' % (location, i))
                   for i, f in enumerate(Parser.list(spec, 'factors', path, min=1))]
        return direct_product(*factors)
    # wreath
    base = _build(Parser.dict(spec, 'base', path), config, Parser.location(path, 'base'))
    base.materialize(setting(config, 'MATERIALIZE_ORDER'))
    return wreath_product(base, Parser.int(spec, 'n', path, min=1), max_order=max_order)
