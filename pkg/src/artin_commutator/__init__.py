"""Commutator subgroups of spherical-type Artin groups."""
from .coxeter import CoxeterGraph, SphericalType, catalogue_graph, classify, odd_components, parse_graph
from .garside import garside_decompose, normal_form, word_equal
from .presentation import Presentation, abelianize, artin_presentation

__all__ = [
    "CoxeterGraph", "SphericalType", "catalogue_graph", "classify", "odd_components", "parse_graph",
    "garside_decompose", "normal_form", "word_equal", "Presentation", "abelianize", "artin_presentation",
]
__version__ = "0.1.0"
