"""Exact rationality analysis of integer tetrahedrons and their parallelepipeds."""

from .classify import classify_edges
from .family import canonical_form, tetra_family
from .geometry import EdgeSextuple, InvalidTetrahedron, embed_coordinates, gram_from_edges
from .signature import ComponentSignature, category_of, compute_signature, is_perfect

__version__ = "0.1.0"
