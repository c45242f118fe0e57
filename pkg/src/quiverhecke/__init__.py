"""Workbench for finite quiver Hecke algebras of affine type A and the
two-point symmetric biserial algebras attached to their tame blocks.

Exact rational arithmetic throughout: constructions, relation checking,
dimension combinatorics, homological invariants and string combinatorics
all run over Q.
"""

__version__ = "0.1.0"
