import unittest

from orbicount.gamma.lattice import ambient
from orbicount.gamma.presentation import GammaSpec
from orbicount.gamma.subgroups import SubgroupClass, enumerate_subgroup_classes, from_sublattice
from orbicount.group.finite import centralizer, symmetric_group
from orbicount.homs import rho as rho_module
from orbicount.homs.rho import RhoSpace


class RhoSpaceTestCase(unittest.TestCase):

    def setUp(self):
        self.s3 = symmetric_group(3)

    def test_free_abelian_classes(self):
        z2 = GammaSpec.free_abelian(2)
        for H in enumerate_subgroup_classes(z2, 2):
            space = RhoSpace(H, self.s3)
            self.assertEqual(len(space), 18)
            self.assertTrue(space.deck_acts_trivially())
            classes = space.classes()
            self.assertEqual(len(classes), 8)
            for c in classes:
                self.assertEqual(c.n_rho_index, 2)
                self.assertEqual(c.aut_order, len(centralizer(self.s3, c.rho)) * 2)

    def test_cyclic(self):
        H = enumerate_subgroup_classes(GammaSpec.free(1), 3)[0]
        classes = rho_module.enumerate_rho_classes(H, self.s3)
        self.assertEqual([c.rho for c in classes], [(0,), (1,), (3,)])
        self.assertEqual([c.aut_order for c in classes], [18, 6, 9])

    def test_orbit_stabilizer(self):
        f2 = GammaSpec.free(2)
        for H in enumerate_subgroup_classes(f2, 2):
            space = RhoSpace(H, self.s3)
            self.assertEqual(len(space), 6 ** 3)
            classes = space.classes()
            self.assertEqual(sum(c.orbit_size for c in classes), len(space))
            for c in classes:
                self.assertEqual(c.orbit_size * c.aut_order, self.s3.order * space.deck.order)
                self.assertEqual(len(space.isotropy_pairs(c.rho)), c.aut_order)

    def test_deck_moves_homomorphisms(self):
        # kernel of a -> 1, b -> 0; conjugation by a swaps b and a b a^-1
        H = SubgroupClass(GammaSpec.free(2), ((1, 0), (0, 1)))
        space = RhoSpace(H, self.s3)
        self.assertFalse(space.deck_acts_trivially())

    def test_pi_g_of_t_rho(self):
        H = from_sublattice(GammaSpec.free_abelian(1), ambient(1))
        self.assertEqual(rho_module.pi_g_of_t_rho(H, (3,), self.s3), [0, 3, 4])
        self.assertEqual(rho_module.pi_g_of_t_rho(H, (1,), self.s3), [0, 1])
        self.assertEqual(len(rho_module.isotropy_pairs(H, (0,), self.s3)), 6)

    def test_labels(self):
        H = enumerate_subgroup_classes(GammaSpec.free(1), 2)[0]
        space = RhoSpace(H, self.s3)
        self.assertEqual(space.class_labels(), [0, 1, 1, 2, 2, 1])
        self.assertEqual(space.g_class_labels(), [0, 1, 1, 2, 2, 1])
        self.assertEqual(space.index((3,)), 3)
