"""Ring specs, per-ring analysis, theorem checks and census runs."""

from nilgraph.census.analyze import RingAnalysis, RingReport, analyze, analyze_ring
from nilgraph.census.export import render, to_csv, to_dot, to_json, write_export
from nilgraph.census.runner import CensusEntry, CensusResult, load_census, run_census
from nilgraph.census.spec import RingSpec, parse_ring_spec
from nilgraph.census.theorems import verify_ring, verify_theorems

__all__ = [
    "CensusEntry",
    "CensusResult",
    "RingAnalysis",
    "RingReport",
    "RingSpec",
    "analyze",
    "analyze_ring",
    "load_census",
    "parse_ring_spec",
    "render",
    "run_census",
    "to_csv",
    "to_dot",
    "to_json",
    "verify_ring",
    "verify_theorems",
    "write_export",
]
