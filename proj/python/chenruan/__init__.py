"""Exact Chen–Ruan cohomology of the moduli of PSL(2,C)-bundles."""

from ._chenruan import (
    ParseError,
    Ring,
    bernoulli,
    constants,
    cr_poincare,
    degree_shift,
    describe_sector,
    eigen_data_for,
    enumerate_labels,
    fixed_locus_relation,
    normalize,
    obstruction_rank,
    replay_table,
    run_cli,
    sector_betti,
    table_json,
    untwisted_poincare,
    weil_pairing,
)

__all__ = [
    "ParseError",
    "Ring",
    "bernoulli",
    "constants",
    "cr_poincare",
    "degree_shift",
    "describe_sector",
    "eigen_data_for",
    "enumerate_labels",
    "fixed_locus_relation",
    "normalize",
    "obstruction_rank",
    "replay_table",
    "run_cli",
    "sector_betti",
    "table_json",
    "untwisted_poincare",
    "weil_pairing",
]
