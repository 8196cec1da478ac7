from unittest import mock

from orbicount.euler import chi
from orbicount.euler.gset import disjoint_union, natural_gset, point_gset
from orbicount.exceptions import InvalidInput
from orbicount.gamma.subgroups import enumerate_subgroup_classes
from orbicount.testing import OrbicountTestCase
from orbicount.utils import sigma1


class ChiGammaTestCase(OrbicountTestCase):

    def test_point_counts_hom_classes(self):
        s3 = self.group('s3')
        point = point_gset(s3)
        self.assertEqual(chi.chi_gamma(point, s3, self.gamma('z')), 3)
        self.assertEqual(chi.chi_gamma(point, s3, self.gamma('z2')), 8)
        self.assertEqual(chi.chi_gamma(point, s3, self.gamma('z2-presented')), 8)
        self.assertEqual(chi.chi_gamma(point, s3, self.gamma('f2')), 11)

    def test_burnside_agrees(self):
        s3 = self.group('s3')
        for gset in (point_gset(s3), natural_gset(s3), self.gset('regular', s3)):
            for name in ('z', 'z2', 'f2'):
                gamma = self.gamma(name)
                self.assertEqual(chi.chi_gamma(gset, s3, gamma), chi.chi_gamma_burnside(gset, s3, gamma))

    def test_burnside_does_not_use_hom_classes(self):
        s3 = self.group('s3')
        point = point_gset(s3)
        f2 = self.gamma('f2')
        classes = list(chi.iter_hom_classes(f2, s3))
        with mock.patch.object(chi, 'iter_hom_classes', return_value=iter(classes[:-1])):
            self.assertEqual(chi.chi_gamma(point, s3, f2), 10)
        with mock.patch.object(chi, 'iter_hom_classes', return_value=iter(classes[:-1])):
            self.assertEqual(chi.chi_gamma_burnside(point, s3, f2), 11)

    def test_burnside_blocks(self):
        s3 = self.group('s3')
        natural = natural_gset(s3)
        with mock.patch.object(chi, 'BURNSIDE_BLOCK', 7):
            self.assertEqual(chi.chi_gamma_burnside(natural, s3, self.gamma('z2')),
                             chi.chi_gamma(natural, s3, self.gamma('z2')))

    def test_regular_and_natural(self):
        z2 = self.group('z2')
        self.assertEqual(chi.chi_gamma(self.gset('regular', z2), z2, self.gamma('z')), 1)
        s3 = self.group('s3')
        self.assertEqual(chi.chi_gamma(natural_gset(s3), s3, self.gamma('z')), 2)

    def test_additive_on_disjoint_unions(self):
        s3 = self.group('s3')
        union = disjoint_union(natural_gset(s3), point_gset(s3))
        self.assertEqual(chi.chi_gamma(union, s3, self.gamma('z')), 5)
        self.assertEqual(chi.chi_gamma_burnside(union, s3, self.gamma('z')), 5)

    def test_group_mismatch(self):
        with self.assertRaises(InvalidInput):
            chi.chi_gamma(point_gset(self.group('z2')), self.group('s3'), self.gamma('z'))


class ChiGammaSetTestCase(OrbicountTestCase):

    def test_both_counts_agree(self):
        z2 = self.group('z2')
        regular = self.gset('regular', z2)
        for n in (1, 2, 3):
            for subgroup in enumerate_subgroup_classes(self.gamma('f2'), n):
                by_classes, by_pairs = chi.chi_gamma_set_both(regular, z2, subgroup)
                self.assertEqual(by_classes, by_pairs)

    def test_index_one_is_chi_gamma(self):
        s3 = self.group('s3')
        gamma = self.gamma('f2')
        subgroup, = enumerate_subgroup_classes(gamma, 1)
        self.assertEqual(chi.chi_gamma_set(point_gset(s3), s3, subgroup), 11)

    def test_hecke_chi(self):
        trivial = self.group('trivial')
        point = point_gset(trivial)
        for n in range(1, 7):
            self.assertEqual(chi.hecke_chi(point, trivial, self.gamma('z2'), n), sigma1(n))
        s3 = self.group('s3')
        self.assertEqual(chi.hecke_chi(point_gset(s3), s3, self.gamma('z2'), 2), 24)
        # every subgroup of Z is Z, each contributing the class number
        self.assertEqual(chi.hecke_chi(point_gset(s3), s3, self.gamma('z'), 4), 3)
