import unittest

from orbicount import fixtures
from orbicount.euler.gset import load_gset_spec
from orbicount.gamma.presentation import load_gamma_spec
from orbicount.group.spec import build_group


class OrbicountTestCase(unittest.TestCase):
    """Base class with helpers for the built-in fixtures."""

    def setUp(self):
        self._groups = {}

    def group(self, name):
        if name not in self._groups:
            self._groups[name] = build_group(fixtures.get('group', name))
        return self._groups[name]

    def gamma(self, name):
        return load_gamma_spec(fixtures.get('gamma', name))

    def gset(self, name, group):
        if isinstance(group, str):
            group = self.group(group)
        return load_gset_spec(fixtures.get('gset', name), group)

    def assertPassed(self, checks):
        failed = [check for check in checks if not check.passed]
        self.assertEqual(failed, [])
