# __init__.py

__all__ = ['guards', 'io', 'sampling', 'stats', 'tests']
