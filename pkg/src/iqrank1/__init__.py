"""Exact computations for the split rank-one iquantum group and its
diagrammatic categorification.

Subpackages
-----------
qseries     exact arithmetic: Laurent polynomials, Q(q), truncated series
chords      chord diagrams with tethers and their crossing statistics
iqgroup     the rank-one iquantum group: bases, forms, structure constants
characters  the character ring of the categorified theory
nilhecke    the nil-Hecke algebra: products, Demazure operators, idempotents
nilbrauer   the nil-Brauer category: diagrams, relations, hom-space slices
cli         command line entry points (`iqrank1 ...`)
"""

__version__ = "0.1.0"
