"""Valuation-level models of crossed-product orders over valuation rings.

The package represents such an order by three layers of combinatorial data
— a finite Galois-like group acting on a set of maximal ideals, a pair of
totally ordered value groups, and a table of cocycle values — and turns
characterization theorems about the order (semihereditary, maximal,
extremal, primary, valuation ring, invariant valuation ring, Azumaya) into
exact decision procedures on that data.
"""

from .cocycle import CocycleTable, CoboundaryResult, GradedRadicalShadow, \
    Localization, build_table, coboundary_twist, graded_radical, \
    is_coboundary, localize, restrict_inertial, unit_subgroup, \
    unit_subgroup_at, validate_cocycle
from .decisions import ClassificationReport, DivisionCheck, ResidueData, \
    SquareFreeReport, Verdict, VerdictEntry, auslander_rim, classify, \
    division_algebra_check, fundamental_left_order_criterion, harada, \
    schur_index, square_free_check, square_free_on_inverse_pairs
from .errors import ConsistencyError, CrossOrderError, DomainError, \
    HypothesisError, RenormalizationError, StructureError
from .extension import ExtensionDescriptor, ExtensionFlags, \
    RamificationFlags, ValidationReport, classify_ramification, \
    tamely_ramified_defectless, unramified_defectless, validate_extension
from .forge import ForgeParams, SearchReport, counterexample_search, \
    cyclic_template, dvr_descriptor, example_rank2, random_instance
from .graphs import CosetGraph, GraphHom, canonical_epi, cross_ideal_iso, \
    graph_localized, graph_mod_ideal, graph_of_table, nice_coset_reps, phi, \
    poset_isomorphic, psi
from .groups import FiniteGroup, cyclic, dihedral, direct_product, \
    standard_groups
from .residue import AlgebraDesc, ExactField, is_primary, is_semisimple, \
    is_simple, radical_basis, twisted_group_algebra, xn_minus_a_irreducible
from .values import Coord, SubgroupEmbedding, ValueElem, ValueGroup, \
    coset_representatives, inertial_index, subgroup_index

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
