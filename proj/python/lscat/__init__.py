"""Alcove geometry, vertex conjugacy classes and LS-category bounds of compact Lie groups.

Fractions cross the boundary as "p/q" strings and come back as Fraction.
"""

import json
from fractions import Fraction

from . import _lscat

__all__ = [
    "root_data",
    "marks",
    "alcove",
    "orbits",
    "bound",
    "verify",
    "vertex",
    "in_cell",
    "reduce_to_alcove",
    "spin_vertex_element",
    "run_cli",
]


def _point(coords):
    return [str(Fraction(c)) for c in coords]


def root_data(family, rank):
    return json.loads(_lscat.root_data_json(family, rank))


def marks(family, rank):
    return _lscat.marks(family, rank)


def alcove(family, rank):
    return json.loads(_lscat.alcove_json(family, rank))


def orbits(family, rank):
    return json.loads(_lscat.orbits_json(family, rank))


def bound(family, rank, assume_conjecture=False, overrides=None):
    return json.loads(_lscat.bound_json(family, rank, assume_conjecture, dict(overrides or {})))


def verify(family, rank, checks=(), seed=0, samples=500, word_length_bound=8, grid_denominator=12):
    return json.loads(
        _lscat.verify_json(family, rank, list(checks), seed, samples, word_length_bound, grid_denominator)
    )


def vertex(family, rank, k):
    return [Fraction(x) for x in _lscat.vertex(family, rank, k)]


def in_cell(family, rank, k, point):
    return _lscat.in_cell(family, rank, k, _point(point))


def reduce_to_alcove(family, rank, point):
    return [Fraction(x) for x in _lscat.reduce_to_alcove(family, rank, _point(point))]


def spin_vertex_element(family, rank, k):
    return _lscat.spin_vertex_element(family, rank, k)


def run_cli(args):
    """Returns (exit_code, stdout, stderr)."""
    return _lscat.run_cli(list(args))
