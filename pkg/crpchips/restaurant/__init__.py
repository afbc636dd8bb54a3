# __init__.py

__all__ = ['tables', 'tests']
