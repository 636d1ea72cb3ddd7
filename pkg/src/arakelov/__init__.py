"""Exact character tables, abelian fields and class-group obstructions for finite Galois groups."""

from .characters import Character, CharacterTable, character_field, character_table, frobenius_schur, galois_orbits
from .cyclotomic import Cyclotomic
from .fields import AbelianField, ClassTable, field_invariants, frobenius_class, h_minus, obstruction_group
from .groups import PermGroup, Permutation, conjugacy_classes, derived_subgroup, group_from_generators, make_family
from .pipeline import audit, scan

__version__ = "0.1.0"
