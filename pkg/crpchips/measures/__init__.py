# __init__.py

__all__ = ['dirichlet', 'tests']
