import logging

import click

from orbicount.bundle.decompose import POLICIES, verify_centralizer
from orbicount.cli.compute import (gamma_option, group_option, gset_option, load_coeffs, load_gamma,
                                   load_group, load_gset)
from orbicount.cli.report import VerifyReport, emit_report, output_options
from orbicount.euler.chi import chi_gamma
from orbicount.euler.generating import default_degree, verify_double_count, verify_euler_product
from orbicount.gamma.verify import verify_lattice_counts, verify_subgroup_counts
from orbicount.hecke.functor import verify_functor_eval, verify_functor_hecke, verify_functor_multiplicativity
from orbicount.hecke.lattice import (verify_commutativity, verify_lattice_hecke, verify_lattice_suite,
                                     verify_scaling_commutes)
from orbicount.series.verify import (RANDOM_TABLES, RANDOM_WINDOW, verify_dmvv, verify_dmvv_random,
                                     verify_euler_specialization, verify_partitions)

logger = logging.getLogger(__name__)

# (group, gset, gamma, max degree, config overrides); None takes default_degree
EULER_SUITE = (
    ('trivial', 'point', 'z', 10, {'MAX_GROUP_ORDER': 4 * 10 ** 6}),
    ('z2', 'point', 'z', 4, None),
    ('z2', 'regular', 'z', 4, None),
    ('s3', 'point', 'z', 4, None),
    ('s3', 'point', 'z2', 3, None),
    ('z2', 'regular', 'z2', 3, None),
    ('z2', 'point', 'f2', 3, None),
)

# (group, gset, gamma, max index)
DOUBLE_COUNT_SUITE = (
    ('z2', 'point', 'z2', 4),
    ('s3', 'point', 'z2', 4),
    ('z2', 'regular', 'f2', 3),
    ('s3', 'point', 'f2', 3),
)

# (gamma, group, largest n, policy)
CENTRALIZER_SUITE = (
    ('z', 'trivial', 6, 'exhaustive'),
    ('z', 'z2', 3, 'classes'),
    ('z', 's3', 3, 'classes'),
    ('z2', 'z2', 3, 'exhaustive'),
    ('z2', 's3', 2, 'exhaustive'),
    ('z2', 's3', 3, 'classes'),
)

FUNCTOR_SUITE = (
    ('trivial', 'point'),
    ('z2', 'regular'),
    ('s3', 'point'),
)

FUNCTOR_MAX = 4

DEFAULT_SAMPLES = 100


@click.group()
@output_options
def verify():
    """Check an identity against brute force."""


@verify.command('theorem-c')
@output_options
@group_option
@gset_option
@gamma_option
@click.option('--max-degree', type=click.IntRange(min=0), default=None,
              help='Compare coefficients up to p^N (default depends on the inputs).')
@click.pass_obj
def euler_product(session, group, gset, gamma, max_degree):
    """Generating function of orbifold Euler characteristics of M^n / (G wr S_n)."""
    report = VerifyReport('verify %s' % click.get_current_context().info_name)
    report.extend(_euler_product(session, group, gset, gamma, max_degree))
    return emit_report(session, report)


verify.add_command(euler_product, 'euler-product')


def _euler_product(session, group, gset, gamma, max_degree, overrides=None):
    config = dict(session.config)
    config.update(overrides or {})
    G = load_group(session, group)
    M = load_gset(gset, G)
    gamma = load_gamma(gamma)
    N = default_degree(gamma, G) if max_degree is None else max_degree
    return verify_euler_product(M, gamma, N, config, session.budget).checks


@verify.command('double-count')
@output_options
@group_option
@gset_option
@gamma_option
@click.option('--max-index', type=click.IntRange(min=1), default=3, show_default=True)
@click.pass_obj
def double_count(session, group, gset, gamma, max_index):
    """χ of coset sets from ρ-classes and from pair orbits."""
    G = load_group(session, group)
    report = VerifyReport('verify double-count')
    report.extend(verify_double_count(load_gset(gset, G), load_gamma(gamma), max_index,
                                      session.config, session.budget))
    return emit_report(session, report)


@verify.command()
@output_options
@gamma_option
@group_option
@click.option('--n', 'n', type=click.IntRange(min=1), default=2, show_default=True)
@click.option('--policy', type=click.Choice(POLICIES), default=None,
              help='Which θ to check (default exhaustive, or samples when --samples is given).')
@click.option('--exhaustive', is_flag=True, help='Check every θ; same as --policy exhaustive.')
@click.option('--samples', type=click.IntRange(min=1), default=None,
              help='Number of random θ to check [default: 100].')
@click.option('--seed', type=int, default=None, help='Sampling seed (default SEED).')
@click.pass_obj
def centralizer(session, gamma, group, n, policy, exhaustive, samples, seed):
    """Centralizer orders and degree counts of bundle decompositions."""
    policy = _centralizer_policy(policy, exhaustive, samples)
    G = load_group(session, group)
    report = VerifyReport('verify centralizer')
    report.extend(verify_centralizer(load_gamma(gamma), G, n, policy=policy,
                                     samples=DEFAULT_SAMPLES if samples is None else samples, seed=seed,
                                     config=session.config, budget=session.budget))
    return emit_report(session, report)


def _centralizer_policy(policy, exhaustive, samples):
    if exhaustive:
        if policy not in (None, 'exhaustive') or samples is not None:
            raise click.UsageError('--exhaustive cannot be combined with --samples or another --policy')
        return 'exhaustive'
    if policy is None:
        return 'exhaustive' if samples is None else 'samples'
    return policy


@verify.command('hecke-lattice')
@output_options
@click.option('--m', 'm', type=click.IntRange(min=1), default=2, show_default=True)
@click.option('--n', 'n', type=click.IntRange(min=1), default=2, show_default=True)
@click.option('--all', 'run_all', is_flag=True,
              help='Every m, n <= 10, commutativity and the sublattice counts.')
@click.pass_obj
def hecke_lattice(session, m, n, run_all):
    """T(m)T(n) against the divisor sum of scaled T(mn/d^2) on Z^2."""
    report = VerifyReport('verify hecke-lattice')
    if run_all:
        report.extend(verify_lattice_suite())
    else:
        report.extend([verify_lattice_hecke(m, n), verify_commutativity(m, n)])
        report.extend(verify_scaling_commutes(d, n) for d in range(1, m + 1))
    return emit_report(session, report)


@verify.command('hecke-functor')
@output_options
@group_option
@gset_option
@click.option('--m', 'm', type=click.IntRange(min=1), default=2, show_default=True)
@click.option('--n', 'n', type=click.IntRange(min=1), default=2, show_default=True)
@click.option('--all', 'run_all', is_flag=True,
              help='Every m, n <= 4 plus the multiplicativity relations.')
@click.pass_obj
def hecke_functor(session, group, gset, m, n, run_all):
    """Hecke operators on the torus evaluated on the counting functor."""
    report = VerifyReport('verify hecke-functor')
    report.extend(_hecke_functor(session, group, gset, m, n, run_all))
    return emit_report(session, report)


def _hecke_functor(session, group, gset, m, n, run_all):
    G = load_group(session, group)
    M = load_gset(gset, G)
    checks = []
    pairs = [(a, b) for a in range(1, FUNCTOR_MAX + 1) for b in range(1, FUNCTOR_MAX + 1)] if run_all else [(m, n)]
    for a, b in pairs:
        checks.extend(verify_functor_hecke(M, G, a, b, session.config, session.budget))
    checks.extend(verify_functor_eval(M, G, m * n, session.config, session.budget))
    if run_all:
        checks.extend(verify_functor_multiplicativity(M, G, config=session.config, budget=session.budget))
    return checks


@verify.command()
@output_options
@click.option('--coeffs', default=None, help='Coefficient table; random tables when omitted.')
@click.option('--p', 'P', type=click.IntRange(min=0), default=None)
@click.option('--q', 'Q', type=click.IntRange(min=0), default=None)
@click.option('--y', 'Y', type=click.IntRange(min=0), default=None)
@click.option('--random', 'count', type=click.IntRange(min=0), default=RANDOM_TABLES, show_default=True)
@click.option('--seed', type=int, default=None, help='First seed of the random tables (default SEED).')
@click.pass_obj
def dmvv(session, coeffs, P, Q, Y, count, seed):
    """Product form against Hecke exponential form of the elliptic generating series."""
    report = VerifyReport('verify dmvv')
    if coeffs is not None:
        c = load_coeffs(coeffs)
        P = 4 if P is None else P
        Q = c.m_max // max(P, 1) if Q is None else Q
        Y = c.k_abs if Y is None else Y
        report.extend(verify_dmvv(c, P, Q, Y, name=coeffs if len(coeffs) < 40 else 'table'))
    else:
        window = tuple(default if value is None else value
                       for value, default in zip((P, Q, Y), RANDOM_WINDOW))
        seed = session.config['SEED'] if seed is None else seed
        report.extend(verify_dmvv_random(count, seed=seed, window=window))
        report.extend(verify_partitions())
    return emit_report(session, report)


@verify.command('subgroup-counts')
@output_options
@click.option('--rank', type=click.IntRange(min=1), default=2, show_default=True)
@click.option('--max-index', type=click.IntRange(min=1), default=5, show_default=True)
@click.option('--max-search-index', type=click.IntRange(min=1), default=None,
              help='Stop the coset search here; the transitive action count still covers --max-index.')
@click.option('--lattice', is_flag=True, help='Also count sublattices of Z^2 up to index 50.')
@click.pass_obj
def subgroup_counts(session, rank, max_index, max_search_index, lattice):
    """Subgroup counts of free groups against Hall's recursion."""
    report = VerifyReport('verify subgroup-counts')
    report.extend(verify_subgroup_counts(rank, max_index, session.config, session.budget,
                                         max_search_index=max_search_index))
    if lattice:
        report.extend(verify_lattice_counts(config=session.config, budget=session.budget))
    return emit_report(session, report)


@verify.command('all')
@output_options
@click.pass_obj
def verify_all(session):
    """Every identity at the default sizes."""
    report = VerifyReport('verify all')
    for group, gset, gamma, degree, overrides in EULER_SUITE:
        logger.info('euler-product %s %s %s', group, gset, gamma)
        report.extend(_euler_product(session, group, gset, gamma, degree, overrides))
    report.extend(verify_partitions())
    for group, gset, gamma, max_index in DOUBLE_COUNT_SUITE:
        G = load_group(session, group)
        report.extend(verify_double_count(load_gset(gset, G), load_gamma(gamma), max_index,
                                          session.config, session.budget))
    for gamma, group, largest, policy in CENTRALIZER_SUITE:
        G = load_group(session, group)
        for n in range(1, largest + 1):
            report.extend(verify_centralizer(load_gamma(gamma), G, n, policy=policy,
                                             config=session.config, budget=session.budget))
    report.extend(verify_lattice_suite())
    for group, gset in FUNCTOR_SUITE:
        report.extend(_hecke_functor(session, group, gset, 2, 2, True))
    report.extend(verify_dmvv_random(seed=session.config['SEED']))
    report.extend(verify_euler_specialization(_point_euler(session)))
    for rank in (1, 2, 3):
        report.extend(verify_subgroup_counts(rank, 6, session.config, session.budget,
                                             max_search_index=6 if rank < 3 else 5))
    report.extend(verify_lattice_counts(config=session.config, budget=session.budget))
    return emit_report(session, report)


def _point_euler(session):
    """χ_Z(pt; S_3), the class number of S_3."""
    G = load_group(session, 's3')
    return chi_gamma(load_gset('point', G), G, load_gamma('z'), budget=session.budget)
