"""Exact enumeration of knight's paths and zigzag knight's paths.

Counting tables, a truncated exact power-series engine, closed-form
coefficient evaluators and two constructive bijections, cross-verified
against each other; served over HTTP with a thin CLI client.
"""

from .paths import (
    Measure,
    PathClass,
    PathWord,
    enumerate_partial,
    is_member,
    parse_word,
    render_word,
)
from .counting import axis_sequence, build_table, count_partial, count_total_over_heights
from .bijections import phi, phi_inv, psi, psi_inv

__version__ = "0.1.0"

__all__ = [
    "Measure",
    "PathClass",
    "PathWord",
    "axis_sequence",
    "build_table",
    "count_partial",
    "count_total_over_heights",
    "enumerate_partial",
    "is_member",
    "parse_word",
    "phi",
    "phi_inv",
    "psi",
    "psi_inv",
    "render_word",
    "__version__",
]
