"""Exact linear cellular automata over group rings.

The heavy lifting lives in the compiled extension ``lcadual._core``; this
package wraps its JSON-producing entry points with plain dict returns.
"""

from __future__ import annotations

import json as _json

from lcadual._core import Automaton, gallery_names
from lcadual._core import demo_report as _demo_report

__all__ = [
    "Automaton",
    "analyze",
    "demo",
    "evolve",
    "gallery_names",
    "pair",
    "parse",
    "verify_finite",
]


def parse(text: str) -> Automaton:
    """Parse an automaton document."""
    return Automaton.parse(text)


def analyze(automaton: Automaton, radius=None, properties=(), ball_cap=1_000_000):
    """Run the decision procedures; returns the report as a dict."""
    return _json.loads(automaton.analyze_json(radius, list(properties), ball_cap))


def verify_finite(automaton: Automaton, cap: int = 4096):
    """Check the four duality equations over a finite group; returns a dict."""
    return _json.loads(automaton.verify_finite_json(cap))


def evolve(automaton: Automaton, steps: int = 1, config: str = ""):
    """Apply the automaton to a named configuration; returns a dict."""
    return _json.loads(automaton.evolve_json(steps, config))


def pair(automaton: Automaton):
    """Pair the configurations named ``omega`` and ``c``; returns a dict."""
    return _json.loads(automaton.pair_json())


def demo(name: str, field: str = "F2", self_check: bool = False):
    """Run a gallery construction; returns ``(exit_code, report_dict)``."""
    code, text = _demo_report(name, field, self_check)
    return code, _json.loads(text)
