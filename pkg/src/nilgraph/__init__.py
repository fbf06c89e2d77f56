"""nilgraph: nil-graphs of ideals of finite commutative rings."""

from nilgraph.census import analyze, parse_ring_spec, verify_theorems
from nilgraph.core.config import NilGraphConfig, load_config
from nilgraph.rings import FiniteRing, analyze_lattice

__version__ = "1.0.0"

__all__ = [
    "FiniteRing",
    "NilGraphConfig",
    "analyze",
    "analyze_lattice",
    "load_config",
    "parse_ring_spec",
    "verify_theorems",
]
