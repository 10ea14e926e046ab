"""Probabilistic zero forcing on graphs.

Thin wrapper over the C++ core: exact absorbing-chain computations return
:class:`fractions.Fraction`, Monte Carlo estimates return plain dicts.
"""

from fractions import Fraction

from ._core import (  # noqa: F401
    Graph,
    ResourceError,
    build_graph,
    graph_from_edges,
    distances,
    radius_and_center,
    greedy_dominating_set,
    k_center_seed,
    propagation_time,
    is_zero_forcing_set,
    zero_forcing_number,
    estimate_ept,
    estimate_lround,
    estimate_confidence_time,
    confidence_time,
    confidence_cycle,
    confidence_path,
    psd_throttle_path_cycle,
    __version__,
)
from . import _core


def _fraction(text: str) -> Fraction:
    return Fraction(text)


def force_probability(g, u, w, blue):
    return _fraction(_core.force_probability(g, u, w, blue))


def ept_exact(g, start):
    return _fraction(_core.ept_exact(g, start))


def ept_graph(g):
    value, best = _core.ept_graph(g)
    return _fraction(value), best


def lround_probability(g, start, rounds):
    return _fraction(_core.lround_probability(g, start, rounds))


def th_pzf(g, start):
    return _fraction(_core.th_pzf(g, start))


def th_pzf_graph(g, mode="exhaustive"):
    r = _core.th_pzf_graph(g, mode)
    r["value"] = _fraction(r["value"])
    return r


def th_alpha(g, alpha, mode="exhaustive"):
    r = _core.th_alpha(g, str(alpha), mode)
    r["value"] = _fraction(r["value"])
    return r


def kang_yi_probability(g, start):
    k0, p = _core.kang_yi_probability(g, start)
    return k0, _fraction(p)


def ept_cycle(n):
    return _fraction(_core.ept_cycle(n))


def ept_path(n):
    return _fraction(_core.ept_path(n))


def lround_cycle(n, rounds):
    return _fraction(_core.lround_cycle(n, rounds))


def lround_path(n, rounds):
    return _fraction(_core.lround_path(n, rounds))


__all__ = [
    "Graph",
    "ResourceError",
    "build_graph",
    "graph_from_edges",
    "distances",
    "radius_and_center",
    "greedy_dominating_set",
    "k_center_seed",
    "force_probability",
    "propagation_time",
    "is_zero_forcing_set",
    "zero_forcing_number",
    "ept_exact",
    "ept_graph",
    "lround_probability",
    "confidence_time",
    "estimate_ept",
    "estimate_lround",
    "estimate_confidence_time",
    "th_pzf",
    "th_pzf_graph",
    "th_alpha",
    "kang_yi_probability",
    "ept_cycle",
    "ept_path",
    "lround_cycle",
    "lround_path",
    "confidence_cycle",
    "confidence_path",
    "psd_throttle_path_cycle",
]
