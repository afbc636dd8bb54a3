# __init__.py

__all__ = ['checker', 'dessin', 'framed', 'tests']
