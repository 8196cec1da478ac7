import json

from click.testing import CliRunner

from orbicount.cli import cli, create_app, run
from orbicount.testing import OrbicountTestCase


class CliTestCase(OrbicountTestCase):

    def create_app(self):
        app = create_app({'TESTING': True, 'BUDGET_SECS': 600})
        return app

    def setUp(self):
        super(CliTestCase, self).setUp()
        self.app = self.create_app()
        self.runner = CliRunner()

    def invoke(self, *args):
        """Runs a command through click and returns (exit code, stdout)."""
        result = self.runner.invoke(cli, list(args), obj=self.app, standalone_mode=False)
        if result.exception is not None:
            raise result.exception
        return result.return_value, result.output

    def invoke_json(self, *args):
        code, output = self.invoke(*args)
        return code, json.loads(output)

    def run_command(self, *args):
        """Runs a command line through `run`, as the console script does."""
        return run(list(args), app=self.app)
