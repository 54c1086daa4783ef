"""Exact computations on octant (G2) and quadrant (SL(3)) tensor-invariant sequences.

The package cross-validates lattice-walk counts, constant-term extraction,
P-recursive recurrences, hypergeometric closed forms and branching rules
against each other.
"""

__version__ = "0.1.0"
