"""Verification toolkit for (4,2)-choosability arguments.

Re-derives and audits the computational content of the underlying
combinatorial arguments: reducibility of configurations under separated
list assignments, Alon-Tarsi orientation certificates, merge enumeration
of vertex-identified configurations, and the discharging charge arithmetic
in exact rationals.
"""

from .graphs import BudgetError, Graph, GraphError, PlaneGraph
from .configs import Configuration, EX_INF, apply_iteration, is_reducible, list_size
from .coloring import (ChoosabilityVerdict, SpecialPath, enumerate_assignments,
                       find_coloring, is_fs_choosable, odd_cycle_2list_colorable,
                       path_block_set)
from .orient import (EulerianParity, Orientation, eulerian_counts,
                     find_at_orientation, is_alon_tarsi)
from .merges import MergeClassification, enumerate_merge_lists, merge_pair
from .templates import build_template
from .charges import (AuditError, ChargeLedger, ChargeSpec, LedgerError,
                      Precolored, Rational, audit_initial_sum, audit_lp,
                      evaluate_ledger, initial_charge_sum, run_case_suite,
                      verify_face_bound, verify_vertex_bound)
from .catalog import load_catalog, shipped_catalog

__version__ = "0.1.0"
