"""Sturm permutations, 3-meander templates and 3-cell templates."""

import json

from ._core import (
    SturmError,
    enumerate_sturm,
    find_noses,
    is_sturm,
    is_sturm_3ball,
    is_three_meander_template,
    morse_numbers,
    parse_permutation,
    planar_roundtrip,
    render_svg,
    retract_nose,
    roundtrip,
    scoop,
    zero_numbers,
)
from . import _core


def analysis_report(sigma):
    """Analysis document of a permutation as a dict."""
    return json.loads(_core.analysis_report_json(list(sigma)))


def complex_from_sigma(sigma):
    """Reconstructed cell complex of a Sturm 3-ball or planar permutation as a dict."""
    return json.loads(_core.complex_json(list(sigma)))


def design(path):
    """Boundary orders and permutation designed from a complex file."""
    return json.loads(_core.design_json(str(path)))


__all__ = [
    "SturmError",
    "analysis_report",
    "complex_from_sigma",
    "design",
    "enumerate_sturm",
    "find_noses",
    "is_sturm",
    "is_sturm_3ball",
    "is_three_meander_template",
    "morse_numbers",
    "parse_permutation",
    "planar_roundtrip",
    "render_svg",
    "retract_nose",
    "roundtrip",
    "scoop",
    "zero_numbers",
]
