"""Modular-height inversion statistics on finite Weyl groups."""

from .distribution import Distribution, from_csv, is_palindromic, is_unimodal, merge, to_csv
from .engine import compute_distribution, distribution_general, distributions_general
from .root_system import GroupSpec, RootSystem, build_root_system, group_order, height_class_count
from .stats import ODD, StatSpec, L_kh, descent_count, inv_kh, odd_length_defining
from .typea_fast import distribution_typeA, distribution_typeA_reference
from .verify import Report, scan_conjecture, verify, verify_suite
from .weyl import Element, elements, enumerate_elements, identity, longest_element, min_coset_rep_left

__version__ = "0.1.0"
