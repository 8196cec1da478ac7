import json
import os

from orbicount.exceptions import InvalidInput, MissingDataError, ParserError


class Parser(object):
    """Validation helpers for JSON input documents.

    Every helper takes the decoded dictionary, the key to read and the dotted
    path of the dictionary inside the document, which is used in error
    messages (`factors[1].n`).
    """

    @classmethod
    def location(cls, path, key):
        if not path:
            return key
        if key.startswith('['):
            return path + key
        return '%s.%s' % (path, key)

    @classmethod
    def get_key(cls, data, key, path=''):
        if not isinstance(data, dict):
            raise ParserError(path or '<root>', 'is not an object')
        return data.get(key)

    @classmethod
    def bool(cls, data, key, path='', optional=False):
        _b = cls.get_key(data, key, path)
        if _b is None:
            if optional:
                return None
            else:
                raise MissingDataError(cls.location(path, key))
        if isinstance(_b, bool) is False:
            raise ParserError(cls.location(path, key), 'is not bool')
        return _b

    @classmethod
    def string(cls, data, key, path='', valid_values=None, optional=False):
        _s = cls.get_key(data, key, path)
        if _s is None:
            if optional:
                return None
            else:
                raise MissingDataError(cls.location(path, key))
        if not isinstance(_s, str):
            raise ParserError(cls.location(path, key), 'is not a string')
        if valid_values is not None and _s not in valid_values:
            raise ParserError(cls.location(path, key), 'is not valid (expected one of %s)' % ', '.join(valid_values))
        return _s

    @classmethod
    def int(cls, data, key, path='', min=None, max=None, optional=False):
        _i = cls.get_key(data, key, path)
        if _i is None:
            if optional:
                return None
            else:
                raise MissingDataError(cls.location(path, key))
        return cls.check_int(_i, cls.location(path, key), min=min, max=max)

    @classmethod
    def check_int(cls, value, location, min=None, max=None):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParserError(location, 'NaN')
        if max is not None and value > max:
            raise ParserError(location, 'too large (max=%d)' % max)
        if min is not None and value < min:
            raise ParserError(location, 'too small (min=%d)' % min)
        return value

    @classmethod
    def list(cls, data, key, path='', min=None, max=None, optional=False):
        _l = cls.get_key(data, key, path)
        if _l is None:
            if optional:
                return None
            else:
                raise MissingDataError(cls.location(path, key))
        if not isinstance(_l, list):
            raise ParserError(cls.location(path, key), 'is not a list')
        if max is not None and len(_l) > max:
            raise ParserError(cls.location(path, key), 'too long (max=%d)' % max)
        if min is not None and len(_l) < min:
            raise ParserError(cls.location(path, key), 'too short (min=%d)' % min)
        return _l

    @classmethod
    def int_list(cls, values, location, min=None, max=None):
        if not isinstance(values, list):
            raise ParserError(location, 'is not a list')
        return [cls.check_int(v, '%s[%d]' % (location, i), min=min, max=max)
                for i, v in enumerate(values)]

    @classmethod
    def dict(cls, data, key, path='', optional=False):
        _d = cls.get_key(data, key, path)
        if _d is None:
            if optional:
                return None
            else:
                raise MissingDataError(cls.location(path, key))
        if not isinstance(_d, dict):
            raise ParserError(cls.location(path, key), 'is not an object')
        return _d


def load_document(source, fixtures):
    """Resolves a fixture name, a JSON file path or an inline JSON string.

    `fixtures` maps built-in names to already decoded documents.
    """
    if isinstance(source, dict):
        return source
    if source in fixtures:
        return fixtures[source]
    if os.path.exists(source):
        with open(source) as f:
            text = f.read()
        origin = source
    elif source.lstrip().startswith('{'):
        text, origin = source, '<inline>'
    else:
        raise InvalidInput('`%s` is neither a known fixture (%s) nor a file' % (source, ', '.join(sorted(fixtures))))
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInput('%s: malformed JSON at line %d column %d: %s' % (origin, e.lineno, e.colno, e.msg))
