"""Census of circulant (di)graphs: classification, automorphism groups, counts."""

import json

from ._core import (
    ConnectionSet,
    ParseError,
    ResourceError,
    aut_order,
    dw_family,
    dw_witness,
    gw_digraph_bound_sum,
    gw_exact_pq,
    gw_family,
    gw_witness,
    is_drr,
    is_normal,
    is_sdw,
    is_small,
    sdw_exact_pq,
    total_digraphs,
    total_graphs,
    verify,
    wreath,
)
from . import _core


def classify(s):
    if isinstance(s, str):
        s = ConnectionSet.parse(s)
    return json.loads(_core.classify_json(s))


def formulas(n):
    return json.loads(_core.formulas_json(n))


def census(n, mode="digraph", threads=0, override_ceiling=False, include_runtime=True):
    return json.loads(_core.census_json(n, mode, threads, override_ceiling, include_runtime))


__all__ = [
    "ConnectionSet", "ParseError", "ResourceError", "aut_order", "census", "classify",
    "dw_family", "dw_witness", "formulas", "gw_digraph_bound_sum", "gw_exact_pq", "gw_family",
    "gw_witness", "is_drr", "is_normal", "is_sdw", "is_small", "sdw_exact_pq", "total_digraphs",
    "total_graphs", "verify", "wreath",
]
