"""Exact certification that tetrahedron volumes grow under edge lengthening.

The package builds the Cayley-Menger determinant and its directional
derivatives exactly, partitions the space of pseudo-tetrahedra into
lattice simplices, pulls the relevant polynomials back to the unit cube,
and certifies nonnegativity by recursive weak positive dominance.  A
case suite packages each certified configuration as a reproducible,
machine-checkable run.
"""

__version__ = "0.1.0"
