"""Finite lattices, retraction pairs and operator extension."""

from ._latext import (
    Lattice,
    LatextError,
    Map,
    Operator,
    boolean,
    build_lattice,
    chain,
    check_axioms,
    check_boundary,
    check_retraction,
    diamond,
    enumerate_operators,
    enumerate_retractions,
    extend,
    join_operator,
    meet_operator,
    parse_lattice,
    pentagon,
    product,
    run_cli,
    verify_theorem,
)

__all__ = [
    "Lattice",
    "LatextError",
    "Map",
    "Operator",
    "boolean",
    "build_lattice",
    "chain",
    "check_axioms",
    "check_boundary",
    "check_retraction",
    "diamond",
    "enumerate_operators",
    "enumerate_retractions",
    "extend",
    "join_operator",
    "meet_operator",
    "parse_lattice",
    "pentagon",
    "product",
    "run_cli",
    "verify_theorem",
]
