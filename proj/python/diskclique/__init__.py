"""Approximate maximum cliques in unit and multi-radius disk graphs."""

from ._diskclique import (
    DiskCliqueError,
    cobip_clique,
    emit_instance,
    exact_max_clique,
    gen_clustered_unit,
    gen_multi_radii,
    gen_uniform_unit,
    parse_instance,
    solve_multi,
    solve_unit,
    verify_clique,
    __version__,
)

__all__ = [
    "DiskCliqueError",
    "cobip_clique",
    "emit_instance",
    "exact_max_clique",
    "gen_clustered_unit",
    "gen_multi_radii",
    "gen_uniform_unit",
    "parse_instance",
    "solve_multi",
    "solve_unit",
    "verify_clique",
    "__version__",
]
