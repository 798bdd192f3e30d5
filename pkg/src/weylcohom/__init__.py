"""Exact root-system combinatorics for vanishing ranges of H^*(G(F_p), k)."""

from .cohom import (
    cohomology_upper_bound,
    decompose,
    degree_lower_bound,
    dim_frobtwist_cohomology,
    expected_sharp_bound,
    fundamental_weight_degree_bound,
)
from .kostant import PartitionTable, partition_bruteforce
from .rootsys import RootSystem, RootSystemSpec, Weight, build, root_system
from .scan import ScanReport, check_a3_middle_weight_sum, check_a4_p11_sums, vanishing_scan, verify_theorem
from .weyl import WeylGroup, enumerate_group

__version__ = "0.1.0"
