"""Exact weighted model counting.

Thin re-export of the compiled ``_core`` extension; see the README for the
semantics of each function.
"""

from ._core import (
    BudgetExceeded,
    Circuit,
    Formula,
    WmcError,
    __version__,
    amplitude,
    avg_degree_threshold,
    bound_report,
    brute_force_count,
    brute_force_parity_count,
    circuit_exponent,
    circuit_to_weighted_2sat,
    count,
    density_threshold,
    evaluate,
    instance_stats,
    n23_fraction,
    normalize,
    parse_circuit,
    parse_dimacs,
    reduce_to_2sat_pm,
    serialize_circuit,
    serialize_dimacs,
    statevector_amplitude,
    three_sat_base,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
