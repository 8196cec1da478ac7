"""
Subgroup counts against closed formulas: the Hall recursion for free groups
and σ1(n) for Z^2.
"""
import logging

from orbicount.checks import compare
from orbicount.gamma.presentation import GammaSpec
from orbicount.gamma.subgroups import (count_free_subgroups_by_actions, count_subgroups,
                                        enumerate_subgroup_classes, subgroups_from_classes)
from orbicount.utils import check_budget, hall_counts, setting, sigma1

logger = logging.getLogger(__name__)

COMMUTATOR = (1, 2, -1, -2)


def verify_subgroup_counts(rank, max_index, config=None, budget=None, max_search_index=None):
    """Index-n subgroups of the free group of `rank`, counted three ways, against Hall's numbers.

    The coset search runs up to `max_search_index` (default `max_index`);
    the transitive action count covers every index up to `max_index`.
    """
    gamma = GammaSpec.free(rank)
    max_nodes = setting(config, 'MAX_SEARCH_NODES')
    searched = max_index if max_search_index is None else min(max_index, max_search_index)
    counts, reconstructed, by_actions = [], [], []
    for n in range(1, searched + 1):
        check_budget(budget, 'subgroup count, index %d' % n)
        counts.append(count_subgroups(gamma, n, budget=budget, max_nodes=max_nodes))
        classes = enumerate_subgroup_classes(gamma, n, budget=budget, max_nodes=max_nodes)
        reconstructed.append(subgroups_from_classes(classes))
    for n in range(1, max_index + 1):
        by_actions.append(count_free_subgroups_by_actions(rank, n, budget=budget))
    inputs = {'gamma': gamma.name(), 'max_index': searched}
    hall = hall_counts(rank, max_index)
    return [compare('hall-count', inputs, counts, hall[:searched]),
            compare('class-reconstruction', inputs, reconstructed, counts),
            compare('transitive-action-count', dict(inputs, max_index=max_index), by_actions, hall)]


def verify_lattice_counts(max_index=50, max_presented=6, config=None, budget=None):
    """HNF enumeration and the presented commutator group both give σ1(n)."""
    lattice = GammaSpec.free_abelian(2)
    presented = GammaSpec.presented(2, [COMMUTATOR])
    max_nodes = setting(config, 'MAX_SEARCH_NODES')
    hnf_counts = [count_subgroups(lattice, n) for n in range(1, max_index + 1)]
    searched = []
    for n in range(1, max_presented + 1):
        check_budget(budget, 'presented Z^2, index %d' % n)
        searched.append(len(enumerate_subgroup_classes(presented, n, budget=budget, max_nodes=max_nodes)))
    return [compare('sigma-count', {'gamma': lattice.name(), 'max_index': max_index},
                    hnf_counts, [sigma1(n) for n in range(1, max_index + 1)]),
            compare('presented-lattice-count', {'gamma': presented.name(), 'max_index': max_presented},
                    searched, [sigma1(n) for n in range(1, max_presented + 1)])]
