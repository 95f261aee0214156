"""Exact computations around the Hilbert scheme of points on the plane, its nilpotent
Lagrangian, characteristic cycles, and the cyclic-group (q-Schur) story."""

__version__ = "0.1.0"
