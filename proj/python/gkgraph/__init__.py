"""Gruenberg-Kegel prime graphs of finite simple groups.

Group names use the command-line syntax: ``"U3(27)"``, ``"A10"``,
``"L2(31^2)"``, sporadic names like ``"J1"``.
"""

import json

from ._core import (
    GkError,
    canonical,
    dot,
    enumerate_s_p,
    order,
    reference_s37,
    table1,
)
from . import _core

__all__ = [
    "GkError",
    "canonical",
    "dot",
    "enumerate_s_p",
    "graph",
    "graphs_with_pattern",
    "order",
    "order_value",
    "reference_s37",
    "spectrum",
    "table1",
    "verify",
]


def order_value(name):
    return int(_core.order_value(name))


def spectrum(name):
    """mu(G) as a sorted list of ints."""
    return [int(x) for x in _core.spectrum(name)]


def graph(name):
    """Dict with vertices, edges, degrees, components, s, t, t2 and more."""
    return json.loads(_core.graph_json(name))


def graphs_with_pattern(primes, degrees):
    """Every labelled graph on primes with the given degrees, as edge lists."""
    return [[tuple(e) for e in g] for g in _core.graphs_with_pattern(primes, degrees)]


def verify(name):
    """Verifier report for one of S4(31), U3(27), G2(11), U4(31)."""
    return json.loads(_core.verify_json(name))
