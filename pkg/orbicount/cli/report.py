"""
Report documents written to stdout.

JSON keys are sorted and no timestamps are included unless --timing is given,
so repeated runs of a command print identical bytes.
"""
import json
import time
from fractions import Fraction

import click
import numpy as np

from orbicount.checks import all_passed

EXIT_PASSED = 0
EXIT_FAILED = 2


def _default(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (set, frozenset, tuple)):
        return list(value)
    raise TypeError('%r is not JSON serializable' % (value,))


def dumps(document):
    return json.dumps(document, sort_keys=True, indent=2, default=_default)


class VerifyReport(object):

    def __init__(self, command, checks=None):
        self.command = command
        self.checks = list(checks or [])
        self.started = time.monotonic()
        self.wall_time = None

    def extend(self, checks):
        self.checks.extend(checks)

    @property
    def passed(self):
        return all_passed(self.checks)

    @property
    def exit_code(self):
        return EXIT_PASSED if self.passed else EXIT_FAILED

    def finish(self):
        self.wall_time = round(time.monotonic() - self.started, 3)
        return self

    def to_json(self, timing=False):
        data = {
            'command': self.command,
            'checks': [{'identity': c.identity, 'equation': c.equation, 'inputs': c.inputs,
                        'lhs': c.lhs, 'rhs': c.rhs, 'pass': bool(c.passed)} for c in self.checks],
            'pass': self.passed,
        }
        if timing and self.wall_time is not None:
            data['wall_time'] = self.wall_time
        return data


def _short(value, width=40):
    text = value if isinstance(value, str) else json.dumps(value, sort_keys=True, default=_default)
    return text if len(text) <= width else text[:width - 3] + '...'


def render_table(report, timing=False):
    rows = [('identity', 'pass', 'lhs', 'rhs', 'inputs')]
    for check in report.checks:
        rows.append((check.identity, 'yes' if check.passed else 'NO',
                     _short(check.lhs), _short(check.rhs), _short(check.inputs, 60)))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ['  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows]
    lines.append('%s: %s' % (report.command, 'pass' if report.passed else 'FAIL'))
    if timing and report.wall_time is not None:
        lines.append('wall time: %ss' % report.wall_time)
    return '\n'.join(lines)


def _set_output(ctx, param, value):
    if value and ctx.obj is not None:
        ctx.obj.table = value == 'table'
    return value


def output_options(f):
    """--json/--table on a subcommand; overrides the choice made before it."""
    f = click.option('--table', 'output', flag_value='table', expose_value=False, callback=_set_output,
                     help='Aligned text output.')(f)
    f = click.option('--json', 'output', flag_value='json', expose_value=False, callback=_set_output,
                     help='JSON output (default).')(f)
    return f


def emit_report(session, report):
    report.finish()
    if session.table:
        click.echo(render_table(report, timing=session.timing))
    else:
        click.echo(dumps(report.to_json(timing=session.timing)))
    return report.exit_code


def emit_document(session, document):
    """Output of a compute command."""
    if session.table:
        for key in sorted(document):
            value = document[key]
            if isinstance(value, list) and value and isinstance(value[0], dict):
                click.echo('%s:' % key)
                for item in value:
                    click.echo('  %s' % _short(item, 100))
            else:
                click.echo('%s: %s' % (key, _short(value, 100)))
    else:
        click.echo(dumps(document))
    return EXIT_PASSED
