# __init__.py

__all__ = ['center', 'chip', 'compare', 'cycles', 'mixture', 'simulate', 'tests']
