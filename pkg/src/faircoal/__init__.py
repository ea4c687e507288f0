"""Exact fair domination and fair coalition numbers for small graphs."""

from .catalog import CatalogEntry, cubic_catalog, petersen_entry
from .closed_forms import (
    Expectation,
    corona_expected,
    cubic_expected,
    cycle_witness,
    expected_cf,
    path_witness,
    verified_cycle_witness,
    verified_path_witness,
)
from .coalition import (
    FcCertificate,
    SolveReport,
    Violation,
    cf_bruteforce,
    cf_solve,
    is_fair_coalition,
    lower_bound_from_domatic,
    upper_bound,
    verify_fc_partition,
)
from .domination import (
    fair_domatic_number,
    fd_code,
    fd_i,
    fd_status,
    gamma,
    gamma_f,
    is_fd,
    min_fd_subset,
)
from .graph import Graph, parse_edge_list, parse_family, parse_graph6, to_graph6

__version__ = "0.1.0"
