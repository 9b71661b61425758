"""Exact Poisson-structure computations over the rationals.

Multivector fields and differential forms with polynomial coefficients,
their graded brackets and differentials, per-weight (co)homology
dimensions, a symplectic star operator, and finite-dimensional
structure-constant calculus for derivations, submanifolds, quotients
and Bott connections.  Everything runs in exact rational arithmetic.
"""

__version__ = "0.1.0"
