import math
from unittest import mock

from orbicount.cli import Session, create_app, verify
from orbicount.cli.testing import CliTestCase
from orbicount.exceptions import InvalidInput, ParserError


class ComputeCommandsTestCase(CliTestCase):

    def test_subgroups(self):
        code, doc = self.invoke_json('subgroups', '--gamma', 'free-abelian-2', '--index', '4')
        self.assertEqual(code, 0)
        self.assertEqual(doc['count'], 7)
        self.assertEqual(len(doc['subgroups']), 7)
        code, doc = self.invoke_json('subgroups', '--gamma', 'f2', '--index', '3')
        self.assertEqual(doc['count'], 7)

    def test_homs(self):
        code, doc = self.invoke_json('homs', '--gamma', 'z', '--group', 's3')
        self.assertEqual((doc['count'], doc['class_count']), (6, 3))
        self.assertEqual(sorted(c['size'] for c in doc['classes']), [1, 2, 3])
        code, doc = self.invoke_json('homs', '--gamma', 'f2', '--group', 's3')
        self.assertEqual((doc['count'], doc['class_count']), (36, 11))

    def test_homs_on_subgroups(self):
        code, doc = self.invoke_json('homs', '--gamma', 'z', '--group', 's3', '--subgroup-index', '2')
        self.assertEqual(code, 0)
        self.assertEqual(doc['subgroup_index'], 2)
        self.assertEqual(len(doc['subgroups']), 1)
        subgroup = doc['subgroups'][0]
        self.assertEqual(subgroup['deck_order'], 2)
        self.assertEqual((subgroup['count'], subgroup['g_class_count'], subgroup['class_count']), (6, 3, 3))
        self.assertEqual(sum(c['orbit_size'] for c in subgroup['classes']), 6)

    def test_output_flags_after_the_command(self):
        code, doc = self.invoke_json('subgroups', '--gamma', 'free-abelian-2', '--index', '4', '--json')
        self.assertEqual(doc['count'], 7)
        code, output = self.invoke('subgroups', '--gamma', 'free-abelian-2', '--index', '4', '--table')
        self.assertIn('count: 7', output)
        code, output = self.invoke('--json', 'homs', '--gamma', 'z', '--group', 'z2', '--table')
        self.assertIn('class_count: 2', output)

    def test_euler(self):
        code, doc = self.invoke_json('euler', '--gamma', 'z2', '--group', 's3')
        self.assertEqual((doc['chi'], doc['chi_burnside']), (8, 8))
        self.assertEqual(doc['gset'], 'point S3-set')
        code, doc = self.invoke_json('euler', '--gamma', 'z2', '--group', 's3', '--index', '2')
        self.assertEqual(doc['hecke_chi'], 24)
        self.assertEqual(len(doc['terms']), 3)

    def test_series(self):
        code, doc = self.invoke_json('series', '--coeffs', 'partition', '--p', '4')
        self.assertEqual(doc['terms'], [[0, 0, 0, 1], [1, 0, 0, 1], [2, 0, 0, 2], [3, 0, 0, 3], [4, 0, 0, 5]])
        code, exp_doc = self.invoke_json('series', '--coeffs', 'partition', '--p', '4', '--form', 'exp')
        self.assertEqual(exp_doc['terms'], doc['terms'])

    def test_table_output(self):
        code, output = self.invoke('--table', 'homs', '--gamma', 'z', '--group', 'z2')
        self.assertEqual(code, 0)
        self.assertIn('class_count: 2', output)


class VerifyCommandsTestCase(CliTestCase):

    def test_hecke_lattice(self):
        code, doc = self.invoke_json('verify', 'hecke-lattice', '--m', '2', '--n', '2')
        self.assertEqual(code, 0)
        self.assertTrue(doc['pass'])
        self.assertEqual(doc['command'], 'verify hecke-lattice')
        first = doc['checks'][0]
        self.assertEqual((first['identity'], first['lhs'], first['rhs']), ('lattice-hecke', 9, 9))
        self.assertNotIn('wall_time', doc)

    def test_timing(self):
        code, doc = self.invoke_json('--timing', 'verify', 'hecke-lattice')
        self.assertIn('wall_time', doc)

    def test_output_is_repeatable(self):
        first = self.invoke('verify', 'dmvv', '--random', '2')
        second = self.invoke('verify', 'dmvv', '--random', '2')
        self.assertEqual(first, second)

    def test_dmvv(self):
        code, doc = self.invoke_json('verify', 'dmvv', '--random', '2', '--seed', '4')
        self.assertEqual(code, 0)
        self.assertEqual(len(doc['checks']), 6)
        code, doc = self.invoke_json('verify', 'dmvv', '--coeffs', 'partition', '--p', '6')
        self.assertTrue(doc['pass'])

    def test_euler_product(self):
        code, doc = self.invoke_json('verify', 'euler-product', '--group', 'z2', '--gset', 'regular',
                                     '--gamma', 'z', '--max-degree', '3')
        self.assertEqual(code, 0)
        self.assertEqual(doc['checks'][0]['identity'], 'euler-product')

    def test_theorem_c_and_its_alias(self):
        code, doc = self.invoke_json('verify', 'theorem-c', '--group', 'z2', '--gamma', 'z',
                                     '--max-degree', '2', '--json')
        self.assertEqual(code, 0)
        self.assertEqual(doc['command'], 'verify theorem-c')
        code, doc = self.invoke_json('verify', 'euler-product', '--group', 'z2', '--gamma', 'z',
                                     '--max-degree', '2')
        self.assertEqual(doc['command'], 'verify euler-product')
        self.assertTrue(doc['pass'])

    def test_checks_carry_their_equation(self):
        code, doc = self.invoke_json('verify', 'hecke-lattice', '--m', '2', '--n', '2', '--json')
        self.assertTrue(all(check['equation'] for check in doc['checks']))
        code, output = self.invoke('verify', 'hecke-lattice', '--m', '2', '--n', '2', '--table')
        self.assertIn('verify hecke-lattice: pass', output)
        code, output = self.invoke('verify', '--table', 'hecke-lattice', '--m', '2', '--n', '2')
        self.assertIn('verify hecke-lattice: pass', output)

    def test_centralizer_policies(self):
        code, doc = self.invoke_json('verify', 'centralizer', '--gamma', 'z', '--group', 'z2', '--n', '2',
                                     '--exhaustive')
        self.assertEqual(code, 0)
        self.assertEqual(doc['checks'][0]['inputs']['policy'], 'exhaustive')
        self.assertEqual(self.run_command('verify', 'centralizer', '--exhaustive', '--samples', '5'), 1)
        self.assertEqual(self.run_command('verify', 'centralizer', '--exhaustive', '--policy', 'classes'), 1)

    def test_suite_reaches_degree_ten(self):
        group, gset, gamma, degree, overrides = verify.EULER_SUITE[0]
        self.assertEqual((group, gset, gamma, degree), ('trivial', 'point', 'z', 10))
        self.assertGreaterEqual(overrides['MAX_GROUP_ORDER'], math.factorial(10))
        with mock.patch('orbicount.cli.verify.verify_euler_product') as verify_euler_product:
            verify._euler_product(Session(self.app), group, gset, gamma, degree, overrides)
        args = verify_euler_product.call_args[0]
        self.assertEqual(args[2], 10)
        self.assertEqual(args[3]['MAX_GROUP_ORDER'], overrides['MAX_GROUP_ORDER'])
        self.assertLess(self.app.config['MAX_GROUP_ORDER'], math.factorial(10))

    def test_subgroup_counts_past_the_search(self):
        code, doc = self.invoke_json('verify', 'subgroup-counts', '--rank', '3', '--max-index', '4',
                                     '--max-search-index', '2')
        self.assertEqual(code, 0)
        identities = [check['identity'] for check in doc['checks']]
        self.assertEqual(identities, ['hall-count', 'class-reconstruction', 'transitive-action-count'])
        self.assertEqual(doc['checks'][2]['lhs'], [1, 7, 97, 2143])

    def test_centralizer(self):
        code, doc = self.invoke_json('verify', 'centralizer', '--gamma', 'z', '--group', 'trivial', '--n', '3')
        self.assertEqual(code, 0)
        self.assertEqual(doc['checks'][0]['rhs'], 6)

    def test_hecke_functor(self):
        code, doc = self.invoke_json('verify', 'hecke-functor', '--group', 's3', '--gset', 'point')
        self.assertEqual(code, 0)
        self.assertTrue(doc['pass'])

    def test_subgroup_counts(self):
        code, doc = self.invoke_json('verify', 'subgroup-counts', '--rank', '2', '--max-index', '4')
        self.assertEqual(code, 0)
        self.assertEqual(doc['checks'][0]['lhs'], [1, 3, 13, 71])

    def test_double_count(self):
        code, doc = self.invoke_json('verify', 'double-count', '--group', 'z2', '--gset', 'regular',
                                     '--gamma', 'f2', '--max-index', '2')
        self.assertEqual(code, 0)


class ErrorsTestCase(CliTestCase):

    def test_bad_input_raises(self):
        with self.assertRaises(ParserError):
            self.invoke('homs', '--group', '{"kind": "cyclic", "n": 0}')
        with self.assertRaises(InvalidInput):
            self.invoke('euler', '--group', 'z2', '--gset', 'natural')

    def test_exit_codes(self):
        self.assertEqual(self.run_command('verify', 'hecke-lattice', '--m', '1', '--n', '1'), 0)
        self.assertEqual(self.run_command('--bogus'), 1)
        self.assertEqual(self.run_command('verify', 'hecke-lattice', '--m', '0'), 1)
        self.assertEqual(self.run_command('homs', '--group', '{"kind": "cyclic", "n": 0}'), 1)

    def test_search_cap_exits_with_budget_code(self):
        self.app = create_app({'TESTING': True, 'BUDGET_SECS': 600, 'MAX_SEARCH_NODES': 10})
        self.assertEqual(self.run_command('subgroups', '--gamma', 'f3', '--index', '4'), 3)
