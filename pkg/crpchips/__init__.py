#__init__.py

__all__ = ['algebra', 'cli', 'engines', 'measures', 'restaurant', 'surfaces', 'tests', \
        'utils', 'verify']
