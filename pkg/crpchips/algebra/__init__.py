# __init__.py

__all__ = ['chips', 'perm', 'tests']
