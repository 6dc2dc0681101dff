"""Exact computations in Garside groups: normal forms, summit sets, periodic elements."""

from .catalog import CatalogEntry, build, distinguished
from .conjugacy import (
    ConjugacyOrbit,
    conjugacy_decide,
    cycling,
    decycling,
    orbit,
    partial_cycling,
    summit_representative,
)
from .element import Element, inverse, multiply, normalize, parse_element, power
from .lattice import GarsideStructure, PermutationStructure, TableStructure
from .periodicity import PeriodicProfile, is_periodic, periodic_profile, translation_limits

__all__ = [
    "CatalogEntry",
    "ConjugacyOrbit",
    "Element",
    "GarsideStructure",
    "PeriodicProfile",
    "PermutationStructure",
    "TableStructure",
    "build",
    "conjugacy_decide",
    "cycling",
    "decycling",
    "distinguished",
    "inverse",
    "is_periodic",
    "multiply",
    "normalize",
    "orbit",
    "parse_element",
    "partial_cycling",
    "periodic_profile",
    "power",
    "summit_representative",
    "translation_limits",
]

__version__ = "0.1.0"
