import json
import logging

import click

from orbicount.exceptions import BudgetExceeded, InvariantViolation, OrbicountError, ParserError

logger = logging.getLogger(__name__)


def render_error(error):
    """The JSON error object written to stdout for a failed command."""
    if isinstance(error, ParserError):
        description = 'Parameter `%s`: %s' % (error.key, error.reason)
    else:
        description = error.desc or error.code
    return json.dumps({'error': error.code, 'description': description}, sort_keys=True)


def handle_error(error):
    if not isinstance(error, OrbicountError):
        raise error
    if isinstance(error, InvariantViolation):
        logger.error('Invariant violated: %s', error.desc)
    elif isinstance(error, BudgetExceeded):
        logger.warning('Stopped in %s', error.stage)
    click.echo(render_error(error))
    return error.exit_code
