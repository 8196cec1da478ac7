import os
import sys

import click
from flask import Flask

from orbicount.exceptions import OrbicountError


def create_app(config=None):
    app = Flask(__name__)

    # Configuration files
    import orbicount.default_config
    app.config.from_object(orbicount.default_config)
    app.config.from_pyfile(os.path.join(
        os.path.dirname(os.path.realpath(__file__)),
        "..", "..", "config.py"
    ), silent=True)
    app.config.from_envvar('ORBICOUNT_CONFIG', silent=True)
    app.config.from_prefixed_env(prefix='ORBICOUNT')
    if config:
        app.config.update(config)
    return app


class Session(object):
    """State shared by the commands of one invocation."""

    def __init__(self, app, timing=False, table=False):
        from orbicount.utils import Budget
        self.app = app
        self.config = app.config
        self.timing = timing
        self.table = table
        self.budget = Budget(app.config['BUDGET_SECS'])


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Log stage boundaries to stderr.')
@click.option('--timing', is_flag=True, help='Add wall_time to reports.')
@click.option('--json', 'output', flag_value='json', default=True, help='JSON output (default).')
@click.option('--table', 'output', flag_value='table', help='Aligned text output.')
@click.pass_context
def cli(ctx, verbose, timing, output):
    """Finite checks of orbifold Euler characteristic and Hecke identities."""
    app = ctx.obj if isinstance(ctx.obj, Flask) else create_app()
    ctx.with_resource(app.app_context())

    # Logging
    from orbicount import loggers
    loggers.init_loggers(app, level='DEBUG' if verbose else None)

    ctx.obj = Session(app, timing=timing, table=output == 'table')


from orbicount.cli import compute, verify  # noqa: E402

cli.add_command(compute.subgroups)
cli.add_command(compute.homs)
cli.add_command(compute.euler)
cli.add_command(compute.series)
cli.add_command(verify.verify)


def run(argv, app=None):
    """Runs one command line and returns its exit code."""
    from orbicount.cli.errors import handle_error
    try:
        code = cli.main(args=list(argv), prog_name='orbicount', standalone_mode=False, obj=app)
    except click.exceptions.Abort:
        click.echo('Aborted!', err=True)
        return 1
    except click.ClickException as e:
        e.show()
        return 1
    except OrbicountError as e:
        return handle_error(e)
    return code or 0


def main():
    sys.exit(run(sys.argv[1:]))
