"""Regions, levels and characteristic polynomials of deformed braid arrangements."""
from braidlevel.arrangement import ArrangementSpec, make_preset, make_spec, parse_spec
from braidlevel.charpoly import (
    CharPolyResult,
    charpoly_closed_ab,
    charpoly_finite_field,
    charpoly_from_census,
    charpoly_whitney,
    zaslavsky_counts,
)
from braidlevel.digraph import LevelCensus, WeightedDigraph, enumerate_census
from braidlevel.geomoracle import geometric_census
from braidlevel.polyalg import RatPoly

__version__ = "0.1.0"

__all__ = [
    "ArrangementSpec",
    "CharPolyResult",
    "LevelCensus",
    "RatPoly",
    "WeightedDigraph",
    "charpoly_closed_ab",
    "charpoly_finite_field",
    "charpoly_from_census",
    "charpoly_whitney",
    "enumerate_census",
    "geometric_census",
    "make_preset",
    "make_spec",
    "parse_spec",
    "zaslavsky_counts",
]
