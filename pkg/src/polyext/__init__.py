"""Poly-extendability of outerplanar graphs.

Structural classification of the colour relation between two marked
vertices, cross-checked against a graph-polynomial coefficient oracle.
"""

from .graphs import Graph, OuterplaneEmbedding, BCTree
from .polynomial import MultiPoly
from .coloring import ColorClasses, ColorRelation, ListAssignment, Verdict
from .classifier import Case, EtaSignature, ExtendabilityReport, Method, classify
from .verifier import VerificationReport, run_suite

__all__ = [
    "Graph",
    "OuterplaneEmbedding",
    "BCTree",
    "MultiPoly",
    "ColorClasses",
    "ColorRelation",
    "ListAssignment",
    "Verdict",
    "Case",
    "EtaSignature",
    "ExtendabilityReport",
    "Method",
    "classify",
    "VerificationReport",
    "run_suite",
]
