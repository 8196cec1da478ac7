import logging
import sys
from logging.handlers import RotatingFileHandler

FORMAT = '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'


def init_loggers(app, level=None):
    """Routes app and library logs to stderr and the optional sinks.

    `level` overrides LOG_LEVEL (the CLI passes DEBUG for --verbose).
    """
    level = level or app.config.get('LOG_LEVEL', 'WARNING')
    targets = [app.logger, logging.getLogger('orbicount')]
    for logger in targets:
        logger.setLevel(level)
    _add_stream_handler(targets, level)
    if 'LOG_FILE_ENABLED' in app.config and app.config['LOG_FILE_ENABLED']:
        _add_file_handler(targets, app.config['LOG_FILE'])
    if 'LOG_SENTRY_ENABLED' in app.config and app.config['LOG_SENTRY_ENABLED']:
        _add_sentry(targets, app.config['SENTRY_DSN'], logging.WARNING)


def _replace(logger, handler, kind):
    for old in [h for h in logger.handlers if getattr(h, 'orbicount_kind', None) == kind]:
        logger.removeHandler(old)
    handler.orbicount_kind = kind
    logger.addHandler(handler)


def _add_stream_handler(targets, level):
    """Logs to stderr; stdout carries reports only."""
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    for logger in targets:
        _replace(logger, handler, 'stream')
        logger.propagate = False


def _add_file_handler(targets, filename, max_bytes=512 * 1024, backup_count=100):
    """Adds file logging."""
    file_handler = RotatingFileHandler(filename, maxBytes=max_bytes,
                                       backupCount=backup_count)
    file_handler.setFormatter(logging.Formatter(FORMAT))
    for logger in targets:
        _replace(logger, file_handler, 'file')


def _add_sentry(targets, dsn, level=logging.NOTSET):
    """Adds Sentry logging.

    We use Raven as a client for Sentry. More info about Raven is available at
    https://raven.readthedocs.org/.
    """
    from raven import Client
    from raven.handlers.logging import SentryHandler
    handler = SentryHandler(Client(dsn))
    handler.setLevel(level)
    for logger in targets:
        _replace(logger, handler, 'sentry')
