from orbicount.bundle import decompose
from orbicount.exceptions import InvalidInput, UnsupportedOperation
from orbicount.group.wreath import wreath_product
from orbicount.testing import OrbicountTestCase


class DecomposerTestCase(OrbicountTestCase):

    def setUp(self):
        super(DecomposerTestCase, self).setUp()
        self.W = wreath_product(self.group('trivial'), 3)
        self.decomposer = decompose.Decomposer(self.gamma('z'), self.W)

    def test_permutations_by_cycle_type(self):
        homs = decompose.select_homs(self.gamma('z'), self.W)
        self.assertEqual(len(homs), 6)
        shapes = {}
        for theta in homs:
            decomposition = self.decomposer.decompose(theta)
            self.assertEqual(decomposition.degree, 3)
            shape = tuple(sorted((s.subgroup.degree, s.multiplicity) for s in decomposition.summands))
            shapes[shape] = shapes.get(shape, 0) + 1
            self.assertEqual(decompose.centralizer_order_formula(decomposition),
                             decompose.centralizer_order(theta))
        self.assertEqual(shapes, {((1, 3),): 1, ((1, 1), (2, 1)): 3, ((3, 1),): 2})

    def test_three_cycle(self):
        for theta in decompose.select_homs(self.gamma('z'), self.W):
            decomposition = self.decomposer.decompose(theta)
            if len(decomposition.summands) == 1 and decomposition.summands[0].subgroup.degree == 3:
                summand, = decomposition.to_json()
                self.assertEqual((summand['rho'], summand['aut_order'], summand['multiplicity']), ([0], 3, 1))
                self.assertEqual(decompose.centralizer_order_formula(decomposition), 3)

    def test_decompose_theta(self):
        W = wreath_product(self.group('z2'), 2)
        gamma = self.gamma('z2')
        decomposer = decompose.Decomposer(gamma, W)
        homs = decompose.select_homs(gamma, W, policy='classes')
        self.assertGreater(len(homs), 1)
        for theta in homs:
            decomposition = decompose.decompose_theta(theta)
            self.assertEqual(decomposition.degree, 2)
            self.assertEqual(decomposition.signature(), decomposer.decompose(theta).signature())
            self.assertEqual(decompose.centralizer_order_formula(decomposition),
                             decompose.centralizer_order(theta))

    def test_rejects_unsupported_inputs(self):
        with self.assertRaises(UnsupportedOperation):
            decompose.Decomposer(self.gamma('z2-presented'), self.W)
        with self.assertRaises(InvalidInput):
            decompose.Decomposer(self.gamma('z'), self.group('s3'))
        with self.assertRaises(InvalidInput):
            decompose.select_homs(self.gamma('z'), self.W, policy='some')


class VerifyCentralizerTestCase(OrbicountTestCase):

    def test_symmetric_groups(self):
        checks = decompose.verify_centralizer(self.gamma('z'), self.group('trivial'), 4)
        self.assertPassed(checks)
        self.assertEqual([c.identity for c in checks],
                         ['centralizer-order', 'degree-count', 'conjugation-invariance'])
        self.assertEqual(checks[0].rhs, 24)

    def test_nontrivial_base(self):
        self.assertPassed(decompose.verify_centralizer(self.gamma('z2'), self.group('z2'), 2))
        self.assertPassed(decompose.verify_centralizer(self.gamma('f2'), self.group('z2'), 2))
        checks = decompose.verify_centralizer(self.gamma('z'), self.group('s3'), 2, policy='classes')
        self.assertPassed(checks)
        self.assertEqual(checks[0].rhs, 9)

    def test_samples(self):
        checks = decompose.verify_centralizer(self.gamma('z'), self.group('s3'), 2, policy='samples',
                                              samples=5, seed=3)
        self.assertPassed(checks)
        self.assertEqual(checks[0].rhs, 5)
        self.assertEqual((checks[0].inputs['samples'], checks[0].inputs['seed']), (5, 3))
