"""Box and cube representations of asteroidal-triple-free graphs."""

from .boxrep import (
    BoxRepresentation,
    box_upper,
    chromatic_boxrep,
    girth5_boxrep,
    verify,
)
from .cubebound import (
    cub_upper,
    exact_boxicity,
    exact_chordality,
    exact_cubicity,
    triangulation_claw_probe,
)
from .decompose import decompose, validate
from .generators import GraphFamilySpec, generate
from .graph import Graph, from_graph6, parse_edge_list, to_graph6
from .intervals import IntervalModel, IntervalQ
from .invariants import (
    claw_number,
    color,
    find_asteroidal_triple,
    is_at_free,
    is_chordal,
    is_interval,
    is_unit_interval,
)
from .triangulate import interval_model, minimize_triangulation, split_supergraph

__version__ = "0.1.0"

__all__ = [
    "BoxRepresentation",
    "Graph",
    "GraphFamilySpec",
    "IntervalModel",
    "IntervalQ",
    "box_upper",
    "chromatic_boxrep",
    "claw_number",
    "color",
    "cub_upper",
    "decompose",
    "exact_boxicity",
    "exact_chordality",
    "exact_cubicity",
    "find_asteroidal_triple",
    "from_graph6",
    "generate",
    "girth5_boxrep",
    "interval_model",
    "is_at_free",
    "is_chordal",
    "is_interval",
    "is_unit_interval",
    "minimize_triangulation",
    "parse_edge_list",
    "split_supergraph",
    "to_graph6",
    "triangulation_claw_probe",
    "validate",
    "verify",
]
