import click

from orbicount import fixtures
from orbicount.cli.report import emit_document, output_options
from orbicount.euler.chi import chi_gamma, chi_gamma_burnside, chi_gamma_set
from orbicount.euler.gset import load_gset_spec
from orbicount.gamma.presentation import load_gamma_spec
from orbicount.gamma.subgroups import enumerate_subgroup_classes
from orbicount.group.spec import build_group
from orbicount.homs.homspace import iter_hom_classes, iter_images
from orbicount.homs.rho import RhoSpace
from orbicount.series.pqy import dmvv_exp, dmvv_product, load_coeff_table
from orbicount.utils import setting


def load_group(session, source):
    return build_group(fixtures.load('group', source), session.config)


def load_gamma(source):
    return load_gamma_spec(fixtures.load('gamma', source))


def load_gset(source, group):
    gset = load_gset_spec(fixtures.load('gset', source), group)
    if source in fixtures.documents('gset'):
        gset.name = '%s %s-set' % (source, group.name)
    return gset


def load_coeffs(source):
    return load_coeff_table(fixtures.load('coeffs', source))


gamma_option = click.option('--gamma', default='z', show_default=True,
                            help='Domain group: fixture name, free-N, free-abelian-N, JSON file or inline JSON.')
group_option = click.option('--group', default='trivial', show_default=True,
                            help='Finite group: fixture name, JSON file or inline JSON.')
gset_option = click.option('--gset', default='point', show_default=True,
                           help='Finite G-set: point, regular, natural, pair, or a JSON action table.')


@click.command()
@output_options
@gamma_option
@click.option('--index', type=click.IntRange(min=1), required=True)
@click.pass_obj
def subgroups(session, gamma, index):
    """Conjugacy classes of subgroups of a given index."""
    gamma = load_gamma(gamma)
    classes = enumerate_subgroup_classes(gamma, index, budget=session.budget,
                                         max_nodes=setting(session.config, 'MAX_SEARCH_NODES'))
    return emit_document(session, {
        'gamma': gamma.to_json(),
        'index': index,
        'count': len(classes),
        'subgroups': [H.to_json() for H in classes],
    })


@click.command()
@output_options
@gamma_option
@group_option
@click.option('--subgroup-index', type=click.IntRange(min=1), default=None,
              help='Classify ρ: H -> G for every subgroup class H of index n instead.')
@click.pass_obj
def homs(session, gamma, group, subgroup_index):
    """Homomorphisms into a finite group, up to conjugation."""
    gamma = load_gamma(gamma)
    G = load_group(session, group)
    max_homs = setting(session.config, 'MAX_HOMS')
    if subgroup_index is not None:
        subgroup_classes = enumerate_subgroup_classes(gamma, subgroup_index, budget=session.budget,
                                                      max_nodes=setting(session.config, 'MAX_SEARCH_NODES'))
        return emit_document(session, {
            'gamma': gamma.to_json(),
            'group': G.name,
            'subgroup_index': subgroup_index,
            'subgroups': [_rho_document(H, G, max_homs, session.budget) for H in subgroup_classes],
        })
    count = sum(1 for _ in iter_images(gamma, G, max_homs=max_homs, budget=session.budget))
    classes = list(iter_hom_classes(gamma, G, max_homs=max_homs, budget=session.budget))
    return emit_document(session, {
        'gamma': gamma.to_json(),
        'group': G.name,
        'count': count,
        'class_count': len(classes),
        'classes': [{'images': [G.label(g) for g in c.representative.images],
                     'size': c.size,
                     'centralizer_order': len(c.centralizer)} for c in classes],
    })


def _rho_document(subgroup, G, max_homs, budget):
    space = RhoSpace(subgroup, G, max_homs=max_homs, budget=budget)
    classes = space.classes()
    return dict(subgroup.to_json(),
                count=len(space),
                g_class_count=len(set(space.g_class_labels())),
                class_count=len(classes),
                classes=[{'rho': [G.label(g) for g in c.rho],
                          'orbit_size': c.orbit_size,
                          'centralizer_order': c.cg_rho_order,
                          'fixing_deck_order': c.n_rho_index,
                          'aut_order': c.aut_order} for c in classes])


@click.command()
@output_options
@gamma_option
@group_option
@gset_option
@click.option('--index', type=click.IntRange(min=1), default=None,
              help='Evaluate the index-n Hecke sum over subgroup classes instead.')
@click.pass_obj
def euler(session, gamma, group, gset, index):
    """Orbifold Euler characteristic of a finite G-set."""
    gamma = load_gamma(gamma)
    G = load_group(session, group)
    M = load_gset(gset, G)
    max_homs = setting(session.config, 'MAX_HOMS')
    document = {'gamma': gamma.to_json(), 'group': G.name, 'gset': M.name}
    if index is None:
        document['chi'] = chi_gamma(M, G, gamma, max_homs=max_homs, budget=session.budget)
        document['chi_burnside'] = chi_gamma_burnside(M, G, gamma, max_homs=max_homs, budget=session.budget)
    else:
        terms = []
        for H in enumerate_subgroup_classes(gamma, index, budget=session.budget,
                                            max_nodes=setting(session.config, 'MAX_SEARCH_NODES')):
            terms.append(dict(H.to_json(), chi=chi_gamma_set(M, G, H, max_homs=max_homs, budget=session.budget)))
        document.update(index=index, terms=terms, hecke_chi=sum(t['chi'] for t in terms))
    return emit_document(session, document)


@click.command()
@output_options
@click.option('--coeffs', default='partition', show_default=True,
              help='Coefficient table: fixture name, JSON file or inline JSON.')
@click.option('--p', 'P', type=click.IntRange(min=0), default=4, show_default=True)
@click.option('--q', 'Q', type=click.IntRange(min=0), default=0, show_default=True)
@click.option('--y', 'Y', type=click.IntRange(min=0), default=0, show_default=True)
@click.option('--form', type=click.Choice(['product', 'exp']), default='product', show_default=True)
@click.pass_obj
def series(session, coeffs, P, Q, Y, form):
    """The product generating series, or its Hecke exponential form."""
    c = load_coeffs(coeffs)
    compute = dmvv_product if form == 'product' else dmvv_exp
    result = compute(c, P, Q, Y)
    return emit_document(session, {
        'coeffs': c.to_json(),
        'window': {'p': P, 'q': Q, 'y': Y},
        'form': form,
        'terms': result.to_json(),
    })
