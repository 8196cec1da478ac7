"""
The generating function of Γ-orbifold Euler characteristics of M^n / (G wr S_n).

Left side: χ_Γ(M^n; G_n) for every n <= N, computed directly against the
wreath product. Right side: the product over conjugacy classes [H] of
finite-index subgroups of (1 - p^[Γ:H])^(-χ_[Γ/H](M; G)).
"""
import collections
import logging
import math

from orbicount.checks import compare
from orbicount.euler.chi import chi_gamma, chi_gamma_burnside, chi_gamma_set, chi_gamma_set_both
from orbicount.euler.gset import power_gset
from orbicount.gamma.presentation import FREE_ABELIAN, GammaSpec
from orbicount.gamma.subgroups import enumerate_subgroup_classes
from orbicount.series.pseries import product_of_powers
from orbicount.utils import check_budget, partition_numbers, setting

logger = logging.getLogger(__name__)

EulerReport = collections.namedtuple('EulerReport', ['lhs', 'rhs', 'forms', 'checks', 'passed'])


def lhs_coefficients(gset, gamma, N, config=None, budget=None, burnside=False):
    """[χ_Γ(M^n; G wr S_n) for n = 0..N]."""
    max_homs = setting(config, 'MAX_HOMS')
    coefficients = []
    for n in range(N + 1):
        check_budget(budget, 'left side, degree %d' % n)
        power = power_gset(gset, n, max_order=setting(config, 'MAX_GROUP_ORDER'),
                           max_table=setting(config, 'MAX_GSET_TABLE'))
        power.group.materialize(setting(config, 'MATERIALIZE_ORDER'))
        compute = chi_gamma_burnside if burnside else chi_gamma
        value = compute(power, power.group, gamma, max_homs=max_homs, budget=budget)
        logger.debug('χ_%s(M^%d; %s) = %d', gamma.name(), n, power.group.name, value)
        coefficients.append(value)
    return coefficients


def subgroup_exponents(gset, gamma, N, config=None, budget=None):
    """[(index, χ_[Γ/H](M; G))] over subgroup classes of index <= N."""
    exponents = []
    for n in range(1, N + 1):
        for subgroup in enumerate_subgroup_classes(gamma, n, budget=budget,
                                                   max_nodes=setting(config, 'MAX_SEARCH_NODES')):
            check_budget(budget, 'right side, index %d' % n)
            exponents.append((n, chi_gamma_set(gset, gset.group, subgroup,
                                               max_homs=setting(config, 'MAX_HOMS'), budget=budget)))
    return exponents


def burnside_degree(G, gamma, N, config=None):
    """Largest n <= N whose Burnside sum stays within MAX_BURNSIDE_PAIRS."""
    limit = setting(config, 'MAX_BURNSIDE_PAIRS')
    degree = 0
    for n in range(1, N + 1):
        order = G.order ** n * math.factorial(n)
        if order ** (gamma.rank + 1) > limit:
            break
        degree = n
    return degree


def verify_euler_product(gset, gamma, N, config=None, budget=None):
    """Compares both sides coefficient by coefficient, plus the equivalent forms.

    Extra forms: the Burnside evaluation of the left side (up to
    burnside_degree), the right side grouped by index, for abelian Γ the
    product over all subgroups with χ_H(M; G) computed as a group-level
    characteristic, and for Γ = Z the symmetric product formula. A point
    over the trivial group with Γ = Z is also checked against p(n).
    """
    G = gset.group
    inputs = {'group': G.name, 'gset': gset.name, 'gamma': gamma.name(), 'max_degree': N}
    lhs = lhs_coefficients(gset, gamma, N, config, budget)
    exponents = subgroup_exponents(gset, gamma, N, config, budget)
    rhs = product_of_powers(N, exponents).coefficients_as_ints()
    checks = [compare('euler-product', inputs, lhs, rhs)]
    forms = {}

    degree = burnside_degree(G, gamma, N, config)
    forms['burnside'] = lhs_coefficients(gset, gamma, degree, config, budget, burnside=True)
    checks.append(compare('burnside-equivalence', dict(inputs, max_degree=degree),
                          lhs[:degree + 1], forms['burnside']))

    by_index = collections.Counter()
    for index, chi in exponents:
        by_index[index] += chi
    forms['hecke'] = product_of_powers(N, sorted(by_index.items())).coefficients_as_ints()
    checks.append(compare('hecke-form', inputs, lhs, forms['hecke']))

    if gamma.is_abelian:
        # every finite-index subgroup of Z^d is again Z^d
        group_form = GammaSpec.free_abelian(gamma.rank) if gamma.kind == FREE_ABELIAN else GammaSpec.free(1)
        chi_h = chi_gamma(gset, G, group_form, max_homs=setting(config, 'MAX_HOMS'), budget=budget)
        abelian = []
        for n in range(1, N + 1):
            check_budget(budget, 'abelian form, index %d' % n)
            abelian.extend((n, chi_h) for _ in enumerate_subgroup_classes(gamma, n, budget=budget))
        forms['abelian'] = product_of_powers(N, abelian).coefficients_as_ints()
        checks.append(compare('abelian-subgroups', inputs, lhs, forms['abelian']))

    if gamma.is_cyclic_free:
        euler = chi_gamma(gset, G, gamma, budget=budget)
        forms['symmetric_product'] = product_of_powers(
            N, [(r, euler) for r in range(1, N + 1)]).coefficients_as_ints()
        checks.append(compare('symmetric-product', dict(inputs, e_orb=euler), lhs,
                              forms['symmetric_product']))

    if gamma.is_cyclic_free and G.order == 1 and gset.size == 1:
        # G wr S_n is S_n and a point has one orbit per conjugacy class
        checks.append(compare('partition-class-count', inputs, lhs, partition_numbers(N)))

    passed = all(check.passed for check in checks)
    logger.debug('Euler product for %s: %s', inputs, passed)
    return EulerReport(lhs, rhs, forms, checks, passed)


def verify_double_count(gset, gamma, max_index, config=None, budget=None):
    """χ_[Γ/H] from ρ-classes and from pair orbits, for every class of index <= max_index."""
    G = gset.group
    matching = checked = 0
    for n in range(1, max_index + 1):
        for subgroup in enumerate_subgroup_classes(gamma, n, budget=budget,
                                                   max_nodes=setting(config, 'MAX_SEARCH_NODES')):
            check_budget(budget, 'double count, index %d' % n)
            by_classes, by_pairs = chi_gamma_set_both(gset, G, subgroup,
                                                      max_homs=setting(config, 'MAX_HOMS'), budget=budget)
            matching += by_classes == by_pairs
            checked += 1
    inputs = {'group': G.name, 'gset': gset.name, 'gamma': gamma.name(), 'max_index': max_index}
    return [compare('rho-class-double-count', inputs, matching, checked)]


def default_degree(gamma, G):
    """Degree cap that keeps the left side at desk scale."""
    if G.order == 1:
        return 8 if gamma.is_cyclic_free else 4
    return 4 if gamma.is_cyclic_free else 3

